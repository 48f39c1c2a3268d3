#include "quandle/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string>

#include "quandle/errors.hpp"

namespace quandle {
namespace {

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '#';
    }
    return true;  // all blank
}

// Strips a trailing '\r' so CRLF input parses like LF.
bool next_payload_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!is_blank_or_comment(line)) return true;
    }
    return false;
}

std::vector<unsigned long> parse_numbers(const std::string& line, int line_no) {
    std::vector<unsigned long> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
        if (*p == ' ' || *p == '\t') { ++p; continue; }
        unsigned long v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc() || next == p)
            throw parse_error(line_no, "expected a decimal number");
        out.push_back(v);
        p = next;
    }
    return out;
}

}  // namespace

Table parse_table(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!next_payload_line(in, line, line_no))
        throw parse_error(line_no + 1, "missing order header");
    auto header = parse_numbers(line, line_no);
    if (header.size() != 1)
        throw parse_error(line_no, "header must be a single decimal order");
    const unsigned long n = header[0];
    if (n == 0) throw parse_error(line_no, "order must be at least 1");
    if (n > 16384) throw parse_error(line_no, "order too large");

    std::vector<Elem> cells;
    cells.reserve(n * n);
    for (unsigned long row = 0; row < n; ++row) {
        if (!next_payload_line(in, line, line_no))
            throw parse_error(line_no + 1, "expected " + std::to_string(n) +
                                           " rows, got " + std::to_string(row));
        auto values = parse_numbers(line, line_no);
        if (values.size() != n)
            throw parse_error(line_no, "row has " + std::to_string(values.size()) +
                                       " cells, expected " + std::to_string(n));
        for (unsigned long v : values) {
            if (v >= n)
                throw parse_error(line_no, "cell value " + std::to_string(v) +
                                           " out of range for order " + std::to_string(n));
            cells.push_back(static_cast<Elem>(v));
        }
    }
    return Table(n, std::move(cells));
}

Table parse_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_table(in);
}

std::string serialize_table(const Table& t) {
    std::string out = std::to_string(t.order());
    out.push_back('\n');
    for (std::size_t x = 0; x < t.order(); ++x) {
        for (std::size_t y = 0; y < t.order(); ++y) {
            if (y) out.push_back(' ');
            out += std::to_string(t.at(x, y));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace quandle
