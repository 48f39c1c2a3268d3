#pragma once

#include <stdexcept>
#include <string>

namespace quandle {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Table text did not match the file format. Carries the 1-based input line.
struct parse_error : error {
    parse_error(int line_no, const std::string& what)
        : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

/// Permutations or tables of different orders were combined.
struct size_mismatch_error : error {
    using error::error;
};

/// An operation required a latin table (every row and column a bijection).
struct not_latin_error : error {
    using error::error;
};

/// An operation required a group table.
struct not_group_error : error {
    using error::error;
};

/// A stated precondition failed (not a latin quandle, not involutory, ...).
struct precondition_error : error {
    using error::error;
};

/// A configured size cap was exceeded.
struct too_large_error : error {
    using error::error;
};

/// Group recovery from a spin set failed.
struct recovery_error : error {
    using error::error;
};

}  // namespace quandle
