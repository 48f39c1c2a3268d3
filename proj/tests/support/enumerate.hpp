#pragma once

// Test-only oracles, kept independent of the library paths they cross-check:
// the enumerators validate laws with their own inline loops and never call
// the property modules.

#include <cstdint>
#include <vector>

#include "quandle/table.hpp"

namespace testsupport {

/// Every labeled latin quandle of order n (idempotent, both divisions, both
/// distributive laws), by cell-wise backtracking with eager pruning.
std::vector<quandle::Table> enumerate_latin_quandles(std::size_t n);

/// Every labeled idempotent latin square of order n (no distributivity).
/// Practical for n <= 5.
std::vector<quandle::Table> enumerate_idempotent_latin_squares(std::size_t n);

/// First solution of a seeded randomized backtracking fill; deterministic
/// for a fixed (n, seed).
quandle::Table random_latin_square(std::size_t n, std::uint64_t seed);
quandle::Table random_idempotent_latin_square(std::size_t n, std::uint64_t seed);

}  // namespace testsupport
