#pragma once

#include <cstdint>
#include <vector>

#include "quandle/report.hpp"
#include "quandle/table.hpp"

namespace quandle {

enum class SpinSide { left, right };

/// r-spin: phi_i . lambda_j (apply lambda_j first). Requires a latin table.
Perm r_spin(const Table& t, Elem i, Elem j);

/// l-spin: lambda_i . phi_j. Requires a latin table.
Perm l_spin(const Table& t, Elem i, Elem j);

/// All n^2 spins of one side, deduplicated. members are sorted
/// lexicographically; index maps the pair (i, j) to the member position.
/// The trivial spin (i = j) is the identity, so members always contains it.
struct SpinSet {
    SpinSide side;
    std::size_t table_order = 0;
    std::vector<Perm> members;
    std::vector<std::uint32_t> index;   // n*n entries, row-major by i

    const Perm& spin(Elem i, Elem j) const {
        return members[index[static_cast<std::size_t>(i) * table_order + j]];
    }
};

SpinSet spin_set(const Table& t, SpinSide side);

/// Group-theoretic profile of a spin set under composition.
struct GroupReport {
    bool closed = false;
    bool has_identity = false;
    bool inverse_closed = false;
    bool commutative = false;
    bool cyclic = false;          // some member's powers exhaust the set
    std::size_t order = 0;

    bool is_group() const { return closed && has_identity && inverse_closed; }
};

GroupReport check_spin_group(const SpinSet& s);

/// Spin properties of an involutory latin quandle, keys "1".."7".
/// Clauses 1-3 are checked on the requested side's family pi:
///   1  [i, j, x]     pi_ij(x) = x with i != j (spins must be fixed-point-free)
///   2  [p, i, j, x]  pi_pi(x) = pi_pj(x) with i != j
///   3  [i, j]        pi_ij != pi_ji^-1
/// Clauses 4/6 are the shift and wrap laws on the r-spins, 5/7 the same on
/// the l-spins, index successors taken mod n on the 0-based labeling:
///   4, 5  [i, j]     pi_ij != pi_(i+1)(j+1), or pi_ii is not the identity
///   6, 7  [n-1, 0]   pi_(n-1)0 != pi_(n-2)(n-1)
/// Throws precondition_error unless t is a latin quandle with LIP or RIP.
PropertyReport check_lemma_3_3(const Table& t, SpinSide side);

/// Transport of composition through j -> pi_(base,j): the returned table g
/// satisfies g(a, b) = c where pi_(base,a) . pi_(base,b) = pi_(base,c); its
/// identity element is base. Throws recovery_error when the spin set is not
/// a group, the map j -> pi_(base,j) is not a bijection onto it, or a
/// composition leaves its image.
Table recover_group(const Table& t, SpinSide side, Elem base);

/// True iff l_spin(i, j) = r_spin(i, j) for all pairs. Witness [i, j].
/// Requires a latin table.
Verdict spins_coincide(const Table& t);

}  // namespace quandle
