#pragma once

#include <span>

#include "quandle/report.hpp"
#include "quandle/table.hpp"

namespace quandle {

/// Quandle axioms. Keys and witnesses:
///   idempotent           [x]        x*x != x
///   unique-left-divisor  [y]        column y is not a bijection
///   right-distributive   [a, b, c]  (a*b)*c != (a*c)*(b*c)
PropertyReport is_quandle(const Table& t);

/// Latin-quandle laws. Keys and witnesses:
///   idempotent          [x]
///   left-division       [x]        row x not a bijection
///   right-division      [y]        column y not a bijection
///   left-distributive   [a, x, y]  a*(x*y) != (a*x)*(a*y)
///   right-distributive  [a, x, y]  (x*y)*a != (x*a)*(y*a)
PropertyReport is_latin_quandle(const Table& t);

/// Involutory profile. Keys lip, rip, cip, ip; witnesses [x, y] meaning
///   lip  x*(x*y) != y
///   rip  (y*x)*x != y
///   cip  x*(y*x) != y
/// ip is the conjunction of lip and rip and reuses the first failing witness.
/// Throws precondition_error unless t is a latin quandle.
PropertyReport involutory_profile(const Table& t);

/// Witness [x, y] with x*y != y*x.
Verdict is_commutative(const Table& t);

/// Medial law (w*x)*(y*z) = (w*y)*(x*z) over all quadruples.
/// Witness [w, x, y, z].
Verdict is_abelian_quandle(const Table& t);

struct HomVerdict {
    bool homomorphism = true;
    bool isomorphism = false;       // homomorphism and f bijective
    std::vector<Elem> witness;      // [a, b] with f(a*b) != f(a)*f(b)
};

/// f maps 0..s.order()-1 into 0..t.order()-1 (values are range-checked).
HomVerdict is_homomorphism(std::span<const Elem> f, const Table& s, const Table& t);

}  // namespace quandle
