#pragma once

#include <vector>

#include "quandle/report.hpp"
#include "quandle/table.hpp"

namespace quandle {

enum class TranslationKind { left, right, left_middle, right_middle };

/// The indexed family of one translation kind for a fixed table:
/// members[i] is L_i, R_i, lambda_i or phi_i.
struct TranslationFamily {
    TranslationKind kind;
    std::vector<Perm> members;
};

/// L_a: x -> a*x (row a). Throws not_latin_error if row a is not a bijection.
Perm left_translation(const Table& t, Elem a);

/// R_a: x -> x*a (column a). Throws not_latin_error if column a is not a bijection.
Perm right_translation(const Table& t, Elem a);

/// lambda_i: x -> the unique r with r*x = i (position of i in column x).
/// Requires a latin table; throws not_latin_error.
Perm left_middle(const Table& t, Elem i);

/// phi_i: x -> the unique c with x*c = i (position of i in row x).
/// Requires a latin table; throws not_latin_error.
Perm right_middle(const Table& t, Elem i);

TranslationFamily translation_family(const Table& t, TranslationKind kind);

/// Six identities tying the four families together, each checked over all
/// (i, x). Keys "1".."6", witnesses [i, x]:
///   1  lambda_i = phi_i^-1
///   2  phi_i^-1(x)*x = i
///   3  L_i(x) = (lambda_i(x)*x)*x
///   4  L_i(x) = (x*phi_i(x))*x
///   5  R_i(x) = x*(lambda_i(x)*x)
///   6  R_i(x) = x*(x*phi_i(x))
/// Requires a latin table.
PropertyReport check_translation_identities(const Table& t);

/// Group-table identities, keys "1".."4", witnesses [i, x] ("2": [x]):
///   1  phi_i(x) = x^-1 * i  and  lambda_i(x) = i * x^-1
///   2  phi_e(x) = lambda_e(x) = x^-1
///   3  L_i(x) = lambda_i(x) * x^2
///   4  R_i(x) = x^2 * phi_i(x)
/// Throws not_group_error unless t is a group with identity e.
PropertyReport check_group_identities(const Table& t, Elem e);

struct Coincidence {
    bool left_eq_lambda;   // L_i == lambda_i for all i
    bool right_eq_phi;     // R_i == phi_i for all i
};

/// Requires a latin table.
Coincidence coincidence(const Table& t);

}  // namespace quandle
