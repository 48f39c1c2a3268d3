#include "quandle/table.hpp"

#include <limits>
#include <stdexcept>

namespace quandle {

Table::Table(std::size_t n, std::vector<Elem> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n == 0) throw std::invalid_argument("table order must be at least 1");
    if (n > std::numeric_limits<Elem>::max())
        throw std::invalid_argument("table order exceeds element range");
    if (cells_.size() != n * n)
        throw std::invalid_argument("cell array length is not n*n");
    for (Elem v : cells_)
        if (v >= n) throw std::invalid_argument("cell value out of range");
}

bool is_latin(const Table& t) {
    const std::size_t n = t.order();
    std::vector<bool> seen(n);
    for (std::size_t x = 0; x < n; ++x) {
        seen.assign(n, false);
        for (std::size_t y = 0; y < n; ++y) {
            if (seen[t.at(x, y)]) return false;
            seen[t.at(x, y)] = true;
        }
    }
    for (std::size_t y = 0; y < n; ++y) {
        seen.assign(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            if (seen[t.at(x, y)]) return false;
            seen[t.at(x, y)] = true;
        }
    }
    return true;
}

}  // namespace quandle
