#include "quandle/properties.hpp"

#include <stdexcept>

#include "quandle/errors.hpp"

namespace quandle {
namespace {

// First row (or column, when by_row is false) that is not a bijection.
Verdict lines_bijective(const Table& t, bool by_row) {
    const std::size_t n = t.order();
    std::vector<bool> seen(n);
    for (std::size_t k = 0; k < n; ++k) {
        seen.assign(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            const Elem v = by_row ? t.at(k, j) : t.at(j, k);
            if (seen[v]) return {false, {static_cast<Elem>(k)}};
            seen[v] = true;
        }
    }
    return {};
}

Verdict idempotency(const Table& t) {
    for (std::size_t x = 0; x < t.order(); ++x)
        if (t.at(x, x) != x) return {false, {static_cast<Elem>(x)}};
    return {};
}

Verdict right_distributive(const Table& t) {
    const std::size_t n = t.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (t.at(t.at(x, y), a) != t.at(t.at(x, a), t.at(y, a)))
                    return {false, {static_cast<Elem>(a), static_cast<Elem>(x),
                                    static_cast<Elem>(y)}};
    return {};
}

Verdict left_distributive(const Table& t) {
    const std::size_t n = t.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (t.at(a, t.at(x, y)) != t.at(t.at(a, x), t.at(a, y)))
                    return {false, {static_cast<Elem>(a), static_cast<Elem>(x),
                                    static_cast<Elem>(y)}};
    return {};
}

Verdict pair_scan(const Table& t, auto&& holds) {
    const std::size_t n = t.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!holds(x, y))
                return {false, {static_cast<Elem>(x), static_cast<Elem>(y)}};
    return {};
}

}  // namespace

PropertyReport is_quandle(const Table& t) {
    PropertyReport rep;
    rep.record("idempotent", idempotency(t));
    // Axiom (2): for any a, b a unique x with a = x*b, i.e. columns bijective.
    rep.record("unique-left-divisor", lines_bijective(t, /*by_row=*/false));
    // Axiom (3): (a*b)*c = (a*c)*(b*c), witness in (a, b, c) order.
    const std::size_t n = t.order();
    Verdict rd;
    for (std::size_t a = 0; a < n && rd.ok; ++a)
        for (std::size_t b = 0; b < n && rd.ok; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t.at(t.at(a, b), c) != t.at(t.at(a, c), t.at(b, c))) {
                    rd = {false, {static_cast<Elem>(a), static_cast<Elem>(b),
                                  static_cast<Elem>(c)}};
                    break;
                }
    rep.record("right-distributive", rd);
    return rep;
}

PropertyReport is_latin_quandle(const Table& t) {
    PropertyReport rep;
    rep.record("idempotent", idempotency(t));
    rep.record("left-division", lines_bijective(t, /*by_row=*/true));
    rep.record("right-division", lines_bijective(t, /*by_row=*/false));
    rep.record("left-distributive", left_distributive(t));
    rep.record("right-distributive", right_distributive(t));
    return rep;
}

PropertyReport involutory_profile(const Table& t) {
    if (!is_latin_quandle(t).all_pass())
        throw precondition_error("involutory_profile: table is not a latin quandle");

    PropertyReport rep;
    const Verdict lip = pair_scan(t, [&](std::size_t x, std::size_t y) {
        return t.at(x, t.at(x, y)) == y;
    });
    const Verdict rip = pair_scan(t, [&](std::size_t x, std::size_t y) {
        return t.at(t.at(y, x), x) == y;
    });
    rep.record("lip", lip);
    rep.record("rip", rip);
    rep.record("ip", lip.ok ? rip : lip);
    rep.record("cip", pair_scan(t, [&](std::size_t x, std::size_t y) {
        return t.at(x, t.at(y, x)) == y;
    }));
    return rep;
}

Verdict is_commutative(const Table& t) {
    return pair_scan(t, [&](std::size_t x, std::size_t y) {
        return t.at(x, y) == t.at(y, x);
    });
}

Verdict is_abelian_quandle(const Table& t) {
    const std::size_t n = t.order();
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (t.at(t.at(w, x), t.at(y, z)) != t.at(t.at(w, y), t.at(x, z)))
                        return {false, {static_cast<Elem>(w), static_cast<Elem>(x),
                                        static_cast<Elem>(y), static_cast<Elem>(z)}};
    return {};
}

HomVerdict is_homomorphism(std::span<const Elem> f, const Table& s, const Table& t) {
    if (f.size() != s.order())
        throw size_mismatch_error("is_homomorphism: map length != source order");
    for (Elem v : f)
        if (v >= t.order())
            throw std::invalid_argument("is_homomorphism: map value out of target range");

    HomVerdict out;
    for (std::size_t a = 0; a < s.order() && out.homomorphism; ++a)
        for (std::size_t b = 0; b < s.order(); ++b)
            if (f[s.at(a, b)] != t.at(f[a], f[b])) {
                out.homomorphism = false;
                out.witness = {static_cast<Elem>(a), static_cast<Elem>(b)};
                break;
            }

    if (out.homomorphism && s.order() == t.order()) {
        std::vector<bool> seen(t.order(), false);
        bool bij = true;
        for (Elem v : f) {
            if (seen[v]) { bij = false; break; }
            seen[v] = true;
        }
        out.isomorphism = bij;
    }
    return out;
}

}  // namespace quandle
