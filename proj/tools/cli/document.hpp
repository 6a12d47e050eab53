#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace uniqmax::cli {

struct CsvField {
    std::string text;
    bool quoted = false;
};

using CsvRow = std::vector<CsvField>;

/// An output file: '#'-prefixed metadata lines followed by either a CSV table
/// (header row plus data rows) or one compact JSON object per line.
/// serialize(parse(text)) == text for every file the tool writes.
struct Document {
    enum class Kind { csv, json };

    Kind kind = Kind::csv;
    std::vector<std::string> metadata;  // without the leading "# "
    CsvRow header;
    std::vector<CsvRow> rows;
    std::vector<nlohmann::ordered_json> records;

    std::string serialize() const;
    /// Everything after the metadata block.
    std::string serialize_data() const;

    static Document parse(std::string_view text);
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

CsvField field(std::string text);
CsvField quoted(std::string text);

}  // namespace uniqmax::cli
