#include "quandle/spins.hpp"

#include <algorithm>
#include <map>

#include "quandle/errors.hpp"
#include "quandle/properties.hpp"
#include "quandle/translations.hpp"

namespace quandle {

Perm r_spin(const Table& t, Elem i, Elem j) {
    return compose(right_middle(t, i), left_middle(t, j));
}

Perm l_spin(const Table& t, Elem i, Elem j) {
    return compose(left_middle(t, i), right_middle(t, j));
}

SpinSet spin_set(const Table& t, SpinSide side) {
    if (!is_latin(t)) throw not_latin_error("spin_set: table is not latin");
    const std::size_t n = t.order();

    std::vector<Perm> lams, phis;
    lams.reserve(n); phis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        lams.push_back(left_middle(t, static_cast<Elem>(i)));
        phis.push_back(right_middle(t, static_cast<Elem>(i)));
    }

    // Collect the n^2 products, then dedup into lexicographic member order.
    std::vector<Perm> raw;
    raw.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            raw.push_back(side == SpinSide::right ? compose(phis[i], lams[j])
                                                  : compose(lams[i], phis[j]));

    std::vector<Perm> members = raw;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    SpinSet out{side, n, std::move(members), std::vector<std::uint32_t>(n * n)};
    for (std::size_t k = 0; k < raw.size(); ++k) {
        auto it = std::lower_bound(out.members.begin(), out.members.end(), raw[k]);
        out.index[k] = static_cast<std::uint32_t>(it - out.members.begin());
    }
    return out;
}

GroupReport check_spin_group(const SpinSet& s) {
    GroupReport rep;
    rep.order = s.members.size();
    if (s.members.empty()) return rep;

    const std::size_t n = s.members.front().size();
    auto contains = [&](const Perm& p) {
        return std::binary_search(s.members.begin(), s.members.end(), p);
    };

    rep.has_identity = contains(Perm::identity(n));

    rep.closed = true;
    rep.commutative = true;
    for (const Perm& a : s.members) {
        for (const Perm& b : s.members) {
            const Perm ab = compose(a, b);
            if (!contains(ab)) rep.closed = false;
            if (!(ab == compose(b, a))) rep.commutative = false;
            if (!rep.closed && !rep.commutative) break;
        }
        if (!rep.closed && !rep.commutative) break;
    }

    rep.inverse_closed = true;
    for (const Perm& a : s.members)
        if (!contains(inverse(a))) { rep.inverse_closed = false; break; }

    rep.cyclic = false;
    if (rep.is_group()) {
        for (const Perm& g : s.members) {
            std::size_t generated = 1;
            Perm p = g;
            while (!p.is_identity() && generated <= rep.order) {
                p = compose(p, g);
                ++generated;
            }
            if (generated == rep.order) { rep.cyclic = true; break; }
        }
    }
    return rep;
}

PropertyReport check_lemma_3_3(const Table& t, SpinSide side) {
    const PropertyReport profile = involutory_profile(t);
    if (!profile.passed("lip") && !profile.passed("rip"))
        throw precondition_error("check_lemma_3_3: table is not involutory (LIP and RIP both fail)");

    const std::size_t n = t.order();
    const SpinSet rs = spin_set(t, SpinSide::right);
    const SpinSet ls = spin_set(t, SpinSide::left);
    const SpinSet& own = side == SpinSide::right ? rs : ls;

    PropertyReport rep;

    Verdict v1;
    for (std::size_t i = 0; i < n && v1.ok; ++i)
        for (std::size_t j = 0; j < n && v1.ok; ++j) {
            if (i == j) continue;
            const Perm& p = own.spin(static_cast<Elem>(i), static_cast<Elem>(j));
            for (std::size_t x = 0; x < n; ++x)
                if (p(x) == x) {
                    v1 = {false, {static_cast<Elem>(i), static_cast<Elem>(j),
                                  static_cast<Elem>(x)}};
                    break;
                }
        }
    rep.record("1", v1);

    Verdict v2;
    for (std::size_t p = 0; p < n && v2.ok; ++p)
        for (std::size_t i = 0; i < n && v2.ok; ++i)
            for (std::size_t j = 0; j < n && v2.ok; ++j) {
                if (i == j) continue;
                const Perm& pi = own.spin(static_cast<Elem>(p), static_cast<Elem>(i));
                const Perm& pj = own.spin(static_cast<Elem>(p), static_cast<Elem>(j));
                for (std::size_t x = 0; x < n; ++x)
                    if (pi(x) == pj(x)) {
                        v2 = {false, {static_cast<Elem>(p), static_cast<Elem>(i),
                                      static_cast<Elem>(j), static_cast<Elem>(x)}};
                        break;
                    }
            }
    rep.record("2", v2);

    Verdict v3;
    for (std::size_t i = 0; i < n && v3.ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!(own.spin(static_cast<Elem>(i), static_cast<Elem>(j)) ==
                  inverse(own.spin(static_cast<Elem>(j), static_cast<Elem>(i))))) {
                v3 = {false, {static_cast<Elem>(i), static_cast<Elem>(j)}};
                break;
            }
        }
    rep.record("3", v3);

    // Shift law: pi_ij = pi_(i+1)(j+1) with successors mod n, and the
    // trivial spin is the identity. Checked on the r-spins (clauses 4, 6)
    // and on the l-spins (clauses 5, 7).
    auto shift_law = [&](const SpinSet& s) -> Verdict {
        for (std::size_t i = 0; i < n; ++i) {
            if (!s.spin(static_cast<Elem>(i), static_cast<Elem>(i)).is_identity())
                return {false, {static_cast<Elem>(i), static_cast<Elem>(i)}};
            for (std::size_t j = 0; j < n; ++j)
                if (!(s.spin(static_cast<Elem>(i), static_cast<Elem>(j)) ==
                      s.spin(static_cast<Elem>((i + 1) % n), static_cast<Elem>((j + 1) % n))))
                    return {false, {static_cast<Elem>(i), static_cast<Elem>(j)}};
        }
        return {};
    };
    auto wrap_law = [&](const SpinSet& s) -> Verdict {
        if (n == 1) return {};
        if (!(s.spin(static_cast<Elem>(n - 1), 0) ==
              s.spin(static_cast<Elem>(n - 2), static_cast<Elem>(n - 1))))
            return {false, {static_cast<Elem>(n - 1), 0}};
        return {};
    };
    rep.record("4", shift_law(rs));
    rep.record("5", shift_law(ls));
    rep.record("6", wrap_law(rs));
    rep.record("7", wrap_law(ls));
    return rep;
}

Table recover_group(const Table& t, SpinSide side, Elem base) {
    const std::size_t n = t.order();
    if (base >= n) throw recovery_error("recover_group: base element out of range");

    const SpinSet s = spin_set(t, side);
    const GroupReport g = check_spin_group(s);
    if (!g.is_group())
        throw recovery_error("recover_group: spin set is not a group under composition");

    // j -> pi_(base, j) must be a bijection onto the members.
    std::map<Perm, Elem> label;
    for (std::size_t j = 0; j < n; ++j) {
        const Perm& p = s.spin(base, static_cast<Elem>(j));
        if (!label.emplace(p, static_cast<Elem>(j)).second)
            throw recovery_error("recover_group: base spins are not distinct");
    }
    if (s.members.size() != n)
        throw recovery_error("recover_group: spin set has " +
                             std::to_string(s.members.size()) + " members, expected " +
                             std::to_string(n));

    std::vector<Elem> cells(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Perm ab = compose(s.spin(base, static_cast<Elem>(a)),
                                    s.spin(base, static_cast<Elem>(b)));
            auto it = label.find(ab);
            if (it == label.end())
                throw recovery_error("recover_group: composition leaves the base spins");
            cells[a * n + b] = it->second;
        }
    return Table(n, std::move(cells));
}

Verdict spins_coincide(const Table& t) {
    if (!is_latin(t)) throw not_latin_error("spins_coincide: table is not latin");
    const std::size_t n = t.order();

    std::vector<Perm> lams, phis;
    for (std::size_t i = 0; i < n; ++i) {
        lams.push_back(left_middle(t, static_cast<Elem>(i)));
        phis.push_back(right_middle(t, static_cast<Elem>(i)));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(compose(lams[i], phis[j]) == compose(phis[i], lams[j])))
                return {false, {static_cast<Elem>(i), static_cast<Elem>(j)}};
    return {};
}

}  // namespace quandle
