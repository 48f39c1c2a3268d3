#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "quandle/table.hpp"

namespace quandle {

/// Table file format:
///   line 1        decimal order n
///   lines 2..n+1  n space-separated decimal cells (row x, columns y = 0..n-1)
/// UTF-8, LF or CRLF, trailing newline optional. Lines whose first
/// non-blank character is '#' are comments; blank lines are skipped.
/// Throws parse_error (with the input line number) on malformed input.
Table parse_table(std::istream& in);
Table parse_table(std::string_view text);

/// Canonical form: "n\n" then one "v v ... v\n" line per row.
/// parse_table(serialize_table(t)) == t.
std::string serialize_table(const Table& t);

}  // namespace quandle
