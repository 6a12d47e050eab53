#pragma once

#include <string>
#include <string_view>

#include "uniqmax/payoff_model.hpp"

namespace uniqmax {

/// Parses a model document {"k": <int>, "probs": ["<num>/<den>", ...]}.
///
/// Errors are ModelError with a "line L, field F: ..." prefix so the offending
/// entry can be found in the source text.
PayoffModel parse_model_spec(std::string_view json_text);

PayoffModel load_model_spec(const std::string& path);

/// Inverse of parse_model_spec; probabilities written in canonical num/den form.
std::string serialize_model_spec(const PayoffModel& model);

/// Resolves the command-line aliases "classic", "chess:<p_draw>", "uniform:<k>".
PayoffModel model_from_alias(std::string_view alias);

}  // namespace uniqmax
