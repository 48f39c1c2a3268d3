#pragma once

#include <cstddef>
#include <vector>

#include "quandle/perm.hpp"

namespace quandle {

/// Cayley table of a finite binary operation on 0..n-1.
///
/// cells are row-major with the row as the LEFT operand: at(x, y) = x*y.
/// Well-formedness (every cell in range) is enforced at construction;
/// latin/quandle properties are checked by the property modules, never assumed.
/// Immutable after construction.
class Table {
public:
    /// `cells` is row-major, length n*n, every value < n.
    /// Throws std::invalid_argument on malformed input (n = 0, wrong length,
    /// out-of-range cell, or n beyond the element type's range).
    Table(std::size_t n, std::vector<Elem> cells);

    std::size_t order() const { return n_; }
    Elem at(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
    const std::vector<Elem>& cells() const { return cells_; }

    friend bool operator==(const Table&, const Table&) = default;

private:
    std::size_t n_;
    std::vector<Elem> cells_;
};

/// True iff every row and every column of t is a permutation of 0..n-1.
bool is_latin(const Table& t);

}  // namespace quandle
