#pragma once

#include <cstddef>

#include "quandle/table.hpp"

namespace quandle {

/// Addition table of Z_n; identity element 0. Throws precondition_error for n = 0.
Table cyclic_group(std::size_t n);

/// (Z_3)^k under componentwise addition, elements encoded base 3; identity 0.
/// Throws too_large_error for 3^k > 729 (k > 6).
Table elementary_abelian_3(std::size_t k);

enum class CoreSide { left, right };

/// Core of a group: left x*y = x y^-1 x, right x*y = y x^-1 y.
/// Throws not_group_error unless g is a group with identity e.
Table core(const Table& g, Elem e, CoreSide side);

/// x+y = L_e(x) * lambda_e(y) * x, evaluated in g through its actual
/// translation maps. Equals core(g, e, left).
Table build_from_left_translations(const Table& g, Elem e);

/// x+y = R_e(y) * phi_e(x) * y. Equals core(g, e, right).
Table build_from_right_translations(const Table& g, Elem e);

/// x+y = x * lambda_e(y) * L_e(x) over a commutative group of exponent 3
/// (order 3^k). The result carries the involutory property on both sides.
/// Throws not_group_error / precondition_error with a diagnostic when g is
/// not a group, not commutative, or of exponent other than 3.
Table build_ipq(const Table& g, Elem e);

}  // namespace quandle
