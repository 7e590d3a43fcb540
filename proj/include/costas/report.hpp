#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace costas {

/// A rectangular table of already-formatted cells, the common shape every
/// command renders from. Rendering is deterministic: same table, same
/// bytes.
struct TextTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const TextTable&) const = default;
};

namespace detail {

inline bool csv_needs_quoting(std::string_view cell) {
    return cell.find_first_of(",\"\n") != std::string_view::npos;
}

inline std::string csv_escape(std::string_view cell) {
    if (!csv_needs_quoting(cell)) return std::string(cell);
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

/// CSV with a leading versioned schema comment line. Cells containing
/// separators are quoted per RFC 4180.
inline std::string render_csv(const TextTable& table) {
    std::string out = "#schema=1\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += detail::csv_escape(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += detail::csv_escape(row[c]);
        }
        out += '\n';
    }
    return out;
}

/// Inverse of render_csv, strict about the schema line. Round-trips every
/// table render_csv produces.
inline TextTable parse_csv(std::string_view text) {
    TextTable table;
    std::size_t pos = 0;
    bool header_done = false;
    while (pos < text.size()) {
        std::vector<std::string> cells;
        std::string cell;
        bool quoted = false;
        bool line_done = false;
        bool comment = !header_done && pos + 1 <= text.size() && text[pos] == '#';
        if (comment) {
            const std::size_t eol = text.find('\n', pos);
            const std::string_view line =
                text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                               : eol - pos);
            if (line != "#schema=1")
                throw std::domain_error("parse_csv: unsupported schema line");
            pos = eol == std::string_view::npos ? text.size() : eol + 1;
            continue;
        }
        while (pos < text.size() && !line_done) {
            const char c = text[pos];
            if (quoted) {
                if (c == '"') {
                    if (pos + 1 < text.size() && text[pos + 1] == '"') {
                        cell += '"';
                        ++pos;
                    } else {
                        quoted = false;
                    }
                } else {
                    cell += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                cells.push_back(std::move(cell));
                cell.clear();
            } else if (c == '\n') {
                line_done = true;
            } else {
                cell += c;
            }
            ++pos;
        }
        if (quoted) throw std::domain_error("parse_csv: unterminated quote");
        cells.push_back(std::move(cell));
        if (!header_done) {
            table.columns = std::move(cells);
            header_done = true;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    if (!header_done) throw std::domain_error("parse_csv: missing header row");
    return table;
}

/// GitHub-style pipe table with cells padded to the column width.
inline std::string render_markdown(const TextTable& table) {
    std::vector<std::size_t> widths(table.columns.size(), 0);
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        widths[c] = table.columns[c].size();
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    }
    auto emit_row = [&](const std::vector<std::string>& cells, std::string& out) {
        out += '|';
        for (std::size_t c = 0; c < widths.size(); ++c) {
            const std::string& cell = c < cells.size() ? cells[c] : "";
            out += ' ';
            out += cell;
            out.append(widths[c] - cell.size() + 1, ' ');
            out += '|';
        }
        out += '\n';
    };
    std::string out;
    emit_row(table.columns, out);
    out += '|';
    for (std::size_t c = 0; c < widths.size(); ++c) {
        out.append(widths[c] + 2, '-');
        out += '|';
    }
    out += '\n';
    for (const auto& row : table.rows) emit_row(row, out);
    return out;
}

/// Fixed-precision decimal text for real-valued bounds; integers render
/// without a decimal point so equality claims read naturally.
inline std::string format_value(double x, int precision = 6) {
    if (x == static_cast<long long>(x) &&
        x >= -9e15 && x <= 9e15) {
        return std::to_string(static_cast<long long>(x));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    return std::string(buf);
}

} // namespace costas
