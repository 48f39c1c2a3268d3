#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quandle/table.hpp"

namespace quandle {

struct GroupCheck {
    bool is_group = false;
    std::optional<Elem> identity;
};

/// t is a group iff it is latin, associative (all triples) and has a
/// two-sided identity.
GroupCheck group_check(const Table& t);

/// Smallest composition- and inverse-closed set containing gens and the
/// identity, as a breadth-first orbit with deterministic insertion order.
/// `n` fixes the carrier (needed when gens is empty); all generators must
/// have that order (size_mismatch_error). Throws too_large_error past cap.
std::vector<Perm> generate_closure(std::span<const Perm> gens, std::size_t n,
                                   std::size_t cap = 1'000'000);

/// Closure of the maps S_x: y -> y*x (the right translations).
/// Requires a latin table.
std::vector<Perm> inner_group(const Table& t);

/// True iff some member's powers exhaust the set. Throws not_group_error
/// unless elems is composition-closed with identity and inverses.
bool is_cyclic_group(std::span<const Perm> elems);

struct IsoResult {
    bool isomorphic = false;
    std::optional<std::vector<Elem>> witness;   // the bijection f, when found
};

/// Backtracking isomorphism search with translation-cycle-type pruning and
/// partial-map propagation. Distinct orders are trivially non-isomorphic;
/// orders above 12 throw too_large_error.
IsoResult quandle_isomorphic(const Table& s, const Table& t);

}  // namespace quandle
