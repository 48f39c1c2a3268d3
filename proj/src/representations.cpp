#include "quandle/representations.hpp"

#include <algorithm>

#include "quandle/errors.hpp"
#include "quandle/properties.hpp"
#include "quandle/translations.hpp"

namespace quandle {

Representation extract(const Table& t, MiddleKind kind) {
    if (!is_latin(t)) throw not_latin_error("extract: table is not latin");
    Representation rep{kind, {}};
    rep.members.reserve(t.order());
    for (std::size_t i = 0; i < t.order(); ++i)
        rep.members.push_back(kind == MiddleKind::left_middle
                                  ? left_middle(t, static_cast<Elem>(i))
                                  : right_middle(t, static_cast<Elem>(i)));
    return rep;
}

namespace {

// Shared body of the lambda/phi axiom checks; they differ only in how the
// defining equation reads, which does not enter these three clauses.
PropertyReport family_axioms(std::span<const Perm> fam, const Table& t) {
    const std::size_t n = t.order();
    if (fam.size() != n)
        throw size_mismatch_error("family axioms: expected one member per element");

    PropertyReport rep;

    Verdict v1;
    for (std::size_t x = 0; x < n; ++x)
        if (fam[x].size() != n || fam[x](x) != x) {
            v1 = {false, {static_cast<Elem>(x)}};
            break;
        }
    rep.record("1", v1);

    // Members are Perm values, so bijectivity is intrinsic; the clause
    // reduces to an order check.
    Verdict v2;
    for (std::size_t i = 0; i < n; ++i)
        if (fam[i].size() != n) {
            v2 = {false, {static_cast<Elem>(i)}};
            break;
        }
    rep.record("2", v2);

    Verdict v3;
    if (v2.ok) {
        for (std::size_t i = 0; i < n && v3.ok; ++i)
            for (std::size_t x = 0; x < n && v3.ok; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (fam[t.at(i, x)](y) != t.at(fam[i](y), fam[x](y))) {
                        v3 = {false, {static_cast<Elem>(i), static_cast<Elem>(x),
                                      static_cast<Elem>(y)}};
                        break;
                    }
    } else {
        v3 = {false, v2.witness};
    }
    rep.record("3", v3);
    return rep;
}

}  // namespace

PropertyReport check_lambda_axioms(std::span<const Perm> fam, const Table& t) {
    return family_axioms(fam, t);
}

PropertyReport check_phi_axioms(std::span<const Perm> fam, const Table& t) {
    return family_axioms(fam, t);
}

Verdict lambda_is_automorphism(const Table& t) {
    PropertyReport profile = involutory_profile(t);   // throws if not a latin quandle
    if (!profile.passed("rip"))
        throw precondition_error("lambda_is_automorphism: table is not a RIPQ");

    const std::size_t n = t.order();
    const Representation rep = extract(t, MiddleKind::left_middle);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (rep.members[i](t.at(x, y)) !=
                    t.at(rep.members[i](x), rep.members[i](y)))
                    return {false, {static_cast<Elem>(i), static_cast<Elem>(x),
                                    static_cast<Elem>(y)}};
    return {};
}

PropertyReport check_pi_characterization(std::span<const Perm> pi, const Table& t) {
    const std::size_t n = t.order();
    std::vector<Perm> set(pi.begin(), pi.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (const Perm& p : set)
        if (p.size() != n)
            throw size_mismatch_error("check_pi_characterization: member order mismatch");

    PropertyReport rep;

    // (i) every member fixes some element, and every element is fixed by
    // some member. Witness [n] flags a fixed-point-free member.
    Verdict v1;
    std::vector<bool> fixed_by_some(n, false);
    for (const Perm& p : set) {
        bool fixes = false;
        for (std::size_t x = 0; x < n; ++x)
            if (p(x) == x) { fixes = true; fixed_by_some[x] = true; }
        if (fixes) continue;
        v1 = {false, {static_cast<Elem>(n)}};
        break;
    }
    if (v1.ok)
        for (std::size_t x = 0; x < n; ++x)
            if (!fixed_by_some[x]) {
                v1 = {false, {static_cast<Elem>(x)}};
                break;
            }
    rep.record("i", v1);

    // (ii) for all x, y exactly one member p with p(x)*x = y.
    Verdict v2;
    for (std::size_t x = 0; x < n && v2.ok; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t hits = 0;
            for (const Perm& p : set)
                if (t.at(p(x), x) == y) ++hits;
            if (hits != 1) {
                v2 = {false, {static_cast<Elem>(x), static_cast<Elem>(y)}};
                break;
            }
        }
    rep.record("ii", v2);

    // (iii) if two members share a fixed point that their composite also
    // fixes, they are equal. Witness: positions in the deduplicated set.
    Verdict v3;
    for (std::size_t a = 0; a < set.size() && v3.ok; ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) {
            bool coupled = false;
            for (std::size_t z = 0; z < n; ++z)
                if (set[a](z) == z && set[b](z) == z && set[a](set[b](z)) == z) {
                    coupled = true;
                    break;
                }
            if (coupled) {   // distinct members (a < b in a deduplicated set)
                v3 = {false, {static_cast<Elem>(a), static_cast<Elem>(b)}};
                break;
            }
        }
    rep.record("iii", v3);
    return rep;
}

Table induced_groupoid(const Table& t) {
    if (!is_latin(t)) throw not_latin_error("induced_groupoid: table is not latin");
    const std::size_t n = t.order();
    const Representation rep = extract(t, MiddleKind::left_middle);
    std::vector<Elem> cells(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < n; ++i)
            cells[x * n + i] = rep.members[i](x);
    return Table(n, std::move(cells));
}

Verdict rep_is_commutative(const Table& t) {
    if (!is_latin(t)) throw not_latin_error("rep_is_commutative: table is not latin");
    const std::size_t n = t.order();
    for (std::size_t i = 0; i < n; ++i) {
        const Perm lam = left_middle(t, static_cast<Elem>(i));
        for (std::size_t x = 0; x < n; ++x)
            if (t.at(x, lam(x)) != i)
                return {false, {static_cast<Elem>(i), static_cast<Elem>(x)}};
    }
    return {};
}

}  // namespace quandle
