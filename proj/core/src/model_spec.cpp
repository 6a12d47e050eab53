#include "uniqmax/model_spec.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uniqmax/errors.hpp"

namespace uniqmax {

namespace {

using nlohmann::json;

int line_of(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Offset of the `index`-th element of the "probs" array, found by a lexical
// scan; good enough for diagnostics on documents that already parsed.
std::size_t probs_entry_offset(std::string_view text, std::size_t index) {
    std::size_t pos = text.find("\"probs\"");
    if (pos == std::string_view::npos) {
        return 0;
    }
    pos = text.find('[', pos);
    if (pos == std::string_view::npos) {
        return 0;
    }
    ++pos;
    std::size_t element = 0;
    bool in_string = false;
    bool at_start = true;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (in_string) {
            if (c == '\\') {
                ++pos;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == ']') {
            break;
        }
        if (c == ',') {
            ++element;
            at_start = true;
            continue;
        }
        if (at_start && !std::isspace(static_cast<unsigned char>(c))) {
            if (element == index) {
                return pos;
            }
            at_start = false;
        }
        if (c == '"') {
            in_string = true;
        }
    }
    return pos;
}

std::size_t key_offset(std::string_view text, std::string_view key) {
    auto pos = text.find("\"" + std::string(key) + "\"");
    return pos == std::string_view::npos ? 0 : pos;
}

[[noreturn]] void fail(std::string_view text, std::size_t offset, const std::string& field, const std::string& what) {
    throw ModelError("line " + std::to_string(line_of(text, offset)) + ", field " + field + ": " + what);
}

}  // namespace

PayoffModel parse_model_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        fail(text, offset, "<document>", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        fail(text, 0, "<document>", "expected a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (item.key() != "k" && item.key() != "probs") {
            fail(text, key_offset(text, item.key()), item.key(), "unknown field");
        }
    }
    if (!doc.contains("k")) {
        fail(text, 0, "k", "missing");
    }
    const json& k_node = doc["k"];
    if (!k_node.is_number_integer() || k_node.get<long long>() < 1 || k_node.get<long long>() > 1'000'000) {
        fail(text, key_offset(text, "k"), "k", "must be a positive integer");
    }
    int k = k_node.get<int>();
    if (!doc.contains("probs") || !doc["probs"].is_array()) {
        fail(text, key_offset(text, "probs"), "probs", "missing or not an array");
    }
    const json& probs_node = doc["probs"];
    std::vector<Rational> probs;
    for (std::size_t a = 0; a < probs_node.size(); ++a) {
        const json& entry = probs_node[a];
        std::string field = "probs[" + std::to_string(a) + "]";
        if (!entry.is_string()) {
            fail(text, probs_entry_offset(text, a), field, "expected a \"num/den\" string");
        }
        try {
            probs.push_back(parse_rational(entry.get<std::string>()));
        } catch (const ModelError& e) {
            fail(text, probs_entry_offset(text, a), field, e.what());
        }
    }
    if (auto violation = validate(k, probs)) {
        std::string field = "probs";
        std::size_t offset = key_offset(text, "probs");
        if (violation->kind == ViolationKind::positivity || violation->kind == ViolationKind::symmetry) {
            field += "[" + std::to_string(violation->index) + "]";
            offset = probs_entry_offset(text, violation->index);
        }
        fail(text, offset, field, violation->message);
    }
    return PayoffModel::create(k, std::move(probs));
}

PayoffModel load_model_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ModelError("cannot open model file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_model_spec(buffer.str());
    } catch (const ModelError& e) {
        throw ModelError(path + ": " + e.what());
    }
}

std::string serialize_model_spec(const PayoffModel& model) {
    nlohmann::ordered_json doc;
    doc["k"] = model.k();
    doc["probs"] = nlohmann::ordered_json::array();
    for (const auto& p : model.probs()) {
        doc["probs"].push_back(to_fraction_string(p));
    }
    return doc.dump() + "\n";
}

PayoffModel model_from_alias(std::string_view alias) {
    if (alias == "classic") {
        return make_classic();
    }
    auto colon = alias.find(':');
    std::string_view head = alias.substr(0, colon);
    if (colon == std::string_view::npos || colon + 1 == alias.size()) {
        throw ModelError("unknown model '" + std::string(alias) + "' (expected classic, chess:<p_draw>, uniform:<k>)");
    }
    std::string_view arg = alias.substr(colon + 1);
    if (head == "chess") {
        return make_chess(parse_rational(arg));
    }
    if (head == "uniform") {
        int k = 0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (ec != std::errc() || ptr != arg.data() + arg.size()) {
            throw ModelError("malformed k in '" + std::string(alias) + "'");
        }
        return make_uniform(k);
    }
    throw ModelError("unknown model '" + std::string(alias) + "' (expected classic, chess:<p_draw>, uniform:<k>)");
}

}  // namespace uniqmax
