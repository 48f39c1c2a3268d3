#pragma once

#include <span>
#include <vector>

#include "quandle/report.hpp"
#include "quandle/table.hpp"

namespace quandle {

enum class MiddleKind { left_middle, right_middle };

/// The full set of middle translations of one kind: members[i] is
/// lambda_i (left) or phi_i (right).
struct Representation {
    MiddleKind kind;
    std::vector<Perm> members;
};

/// Requires a latin table; throws not_latin_error.
Representation extract(const Table& t, MiddleKind kind);

/// Axioms of a lambda family, with the operation read from t.
/// Keys and witnesses:
///   1  [x]        fam[x](x) != x
///   2  [i]        fam[i] has the wrong order (bijectivity is intrinsic to Perm)
///   3  [i, x, y]  fam[i*x](y) != fam[i](y) * fam[x](y)
/// fam must have exactly t.order() members; throws size_mismatch_error.
PropertyReport check_lambda_axioms(std::span<const Perm> fam, const Table& t);

/// Symmetric clauses for a phi family:
///   3  [i, x, y]  fam[i*x](y) != fam[i](y) * fam[x](y)
PropertyReport check_phi_axioms(std::span<const Perm> fam, const Table& t);

/// lambda_i(x*y) = lambda_i(x) * lambda_i(y) for all i, x, y.
/// Witness [i, x, y]. Throws precondition_error unless t is a RIPQ.
Verdict lambda_is_automorphism(const Table& t);

/// Characterization of a set of permutations as a middle-translation set.
/// pi is treated as a set (duplicates are dropped). Keys and witnesses:
///   i    [x]           no member fixes x (or a member fixes nothing: witness [n])
///   ii   [x, y]        the count of members p with p(x)*x = y is not 1
///   iii  [a, b]        members at positions a < b share a fixed point z with
///                      (pi_a . pi_b)(z) = z but pi_a != pi_b
PropertyReport check_pi_characterization(std::span<const Perm> pi, const Table& t);

/// The groupoid whose right translations are the lambda family:
/// u(x, i) = lambda_i(x). Requires a latin table.
Table induced_groupoid(const Table& t);

/// True iff x * lambda_i(x) = i for all i, x — equivalently lambda_i = phi_i
/// for every i. Witness [i, x]. Requires a latin table.
Verdict rep_is_commutative(const Table& t);

}  // namespace quandle
