#include "document.hpp"

#include <charconv>
#include <stdexcept>

namespace uniqmax::cli {

namespace {

bool needs_quotes(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

void write_field(std::string& out, const CsvField& f) {
    if (!f.quoted && !needs_quotes(f.text)) {
        out += f.text;
        return;
    }
    out += '"';
    for (char c : f.text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
}

void write_row(std::string& out, const CsvRow& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) {
            out += ',';
        }
        write_field(out, row[i]);
    }
    out += '\n';
}

CsvRow parse_row(std::string_view line) {
    CsvRow row;
    std::size_t i = 0;
    while (true) {
        CsvField f;
        if (i < line.size() && line[i] == '"') {
            f.quoted = true;
            ++i;
            while (true) {
                if (i >= line.size()) {
                    throw std::runtime_error("unterminated quoted CSV field");
                }
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        f.text += '"';
                        i += 2;
                        continue;
                    }
                    ++i;
                    break;
                }
                f.text += line[i++];
            }
        } else {
            while (i < line.size() && line[i] != ',') {
                f.text += line[i++];
            }
        }
        row.push_back(std::move(f));
        if (i >= line.size()) {
            break;
        }
        if (line[i] != ',') {
            throw std::runtime_error("malformed CSV line");
        }
        ++i;
    }
    return row;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc()) {
        throw std::runtime_error("cannot format double");
    }
    return std::string(buffer, ptr);
}

CsvField field(std::string text) {
    return CsvField{std::move(text), false};
}

CsvField quoted(std::string text) {
    return CsvField{std::move(text), true};
}

std::string Document::serialize_data() const {
    std::string out;
    if (kind == Kind::json) {
        for (const auto& record : records) {
            out += record.dump();
            out += '\n';
        }
        return out;
    }
    write_row(out, header);
    for (const auto& row : rows) {
        write_row(out, row);
    }
    return out;
}

std::string Document::serialize() const {
    std::string out;
    for (const auto& line : metadata) {
        out += "# ";
        out += line;
        out += '\n';
    }
    return out + serialize_data();
}

Document Document::parse(std::string_view text) {
    Document doc;
    bool in_metadata = true;
    bool have_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            throw std::runtime_error("output must end with a newline");
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (in_metadata && line.starts_with("# ")) {
            doc.metadata.emplace_back(line.substr(2));
            continue;
        }
        if (in_metadata) {
            in_metadata = false;
            doc.kind = line.starts_with("{") ? Kind::json : Kind::csv;
        }
        if (doc.kind == Kind::json) {
            doc.records.push_back(nlohmann::ordered_json::parse(line));
        } else if (!have_header) {
            doc.header = parse_row(line);
            have_header = true;
        } else {
            doc.rows.push_back(parse_row(line));
        }
    }
    return doc;
}

}  // namespace uniqmax::cli
