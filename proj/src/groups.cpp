#include "quandle/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "quandle/errors.hpp"
#include "quandle/translations.hpp"

namespace quandle {

GroupCheck group_check(const Table& t) {
    const std::size_t n = t.order();
    if (!is_latin(t)) return {};

    std::optional<Elem> id;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n; ++x)
            if (t.at(e, x) != x || t.at(x, e) != x) { ok = false; break; }
        if (ok) { id = static_cast<Elem>(e); break; }
    }
    if (!id) return {};

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) return {};
    return {true, id};
}

std::vector<Perm> generate_closure(std::span<const Perm> gens, std::size_t n,
                                   std::size_t cap) {
    for (const Perm& g : gens)
        if (g.size() != n)
            throw size_mismatch_error("generate_closure: generator order mismatch");

    // Seed with identity, the generators and their inverses, sorted so the
    // breadth-first orbit is reproducible.
    std::vector<Perm> seed;
    seed.push_back(Perm::identity(n));
    for (const Perm& g : gens) {
        seed.push_back(g);
        seed.push_back(inverse(g));
    }
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

    std::set<Perm> members(seed.begin(), seed.end());
    std::vector<Perm> order(seed.begin(), seed.end());
    std::deque<Perm> frontier(seed.begin(), seed.end());

    while (!frontier.empty()) {
        const Perm f = frontier.front();
        frontier.pop_front();
        for (const Perm& g : seed) {
            Perm h = compose(f, g);
            if (members.insert(h).second) {
                if (members.size() > cap)
                    throw too_large_error("generate_closure: cap of " +
                                          std::to_string(cap) + " exceeded");
                order.push_back(h);
                frontier.push_back(std::move(h));
            }
        }
    }
    return order;
}

std::vector<Perm> inner_group(const Table& t) {
    if (!is_latin(t)) throw not_latin_error("inner_group: table is not latin");
    std::vector<Perm> gens;
    gens.reserve(t.order());
    for (std::size_t x = 0; x < t.order(); ++x)
        gens.push_back(right_translation(t, static_cast<Elem>(x)));
    return generate_closure(gens, t.order());
}

bool is_cyclic_group(std::span<const Perm> elems) {
    if (elems.empty()) throw not_group_error("is_cyclic_group: empty set");
    const std::size_t n = elems.front().size();

    std::vector<Perm> sorted(elems.begin(), elems.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto contains = [&](const Perm& p) {
        return std::binary_search(sorted.begin(), sorted.end(), p);
    };

    if (!contains(Perm::identity(n)))
        throw not_group_error("is_cyclic_group: identity missing");
    for (const Perm& a : sorted) {
        if (!contains(inverse(a)))
            throw not_group_error("is_cyclic_group: set is not inverse-closed");
        for (const Perm& b : sorted)
            if (!contains(compose(a, b)))
                throw not_group_error("is_cyclic_group: set is not closed");
    }

    for (const Perm& g : sorted) {
        std::size_t generated = 1;
        Perm p = g;
        while (!p.is_identity() && generated <= sorted.size()) {
            p = compose(p, g);
            ++generated;
        }
        if (generated == sorted.size()) return true;
    }
    return false;
}

namespace {

// Sorted cycle lengths of x -> row/column translation, an isomorphism
// invariant used to partition elements before backtracking.
std::vector<int> cycle_type(const Table& t, std::size_t a, bool row) {
    const std::size_t n = t.order();
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0;
        std::size_t x = s;
        while (!seen[x]) {
            seen[x] = true;
            ++len;
            x = row ? t.at(a, x) : t.at(x, a);
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

struct IsoSearch {
    const Table& s;
    const Table& t;
    std::size_t n;
    std::vector<std::vector<Elem>> candidates;   // per source element
    std::vector<int> f;                          // partial map, -1 = unset
    std::vector<bool> used;

    bool assign(Elem a, Elem b, std::vector<Elem>& trail) {
        if (f[a] >= 0) return f[a] == b;
        if (used[b]) return false;
        f[a] = b;
        used[b] = true;
        trail.push_back(a);

        // Propagate f(x*y) = f(x)*f(y) through every pair that just became
        // fully determined.
        for (std::size_t x = 0; x < n; ++x) {
            if (f[x] < 0) continue;
            for (std::size_t y = 0; y < n; ++y) {
                if (f[y] < 0) continue;
                const Elem sxy = s.at(x, y);
                const Elem txy = t.at(static_cast<std::size_t>(f[x]),
                                      static_cast<std::size_t>(f[y]));
                if (f[sxy] >= 0) {
                    if (f[sxy] != txy) return false;
                } else {
                    if (!assign(sxy, txy, trail)) return false;
                }
            }
        }
        return true;
    }

    void unwind(std::vector<Elem>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            const Elem a = trail.back();
            trail.pop_back();
            used[static_cast<std::size_t>(f[a])] = false;
            f[a] = -1;
        }
    }

    bool search(std::vector<Elem>& trail) {
        Elem next = static_cast<Elem>(n);
        for (std::size_t a = 0; a < n; ++a)
            if (f[a] < 0) { next = static_cast<Elem>(a); break; }
        if (next == n) return true;

        for (Elem b : candidates[next]) {
            const std::size_t mark = trail.size();
            if (assign(next, b, trail) && search(trail)) return true;
            unwind(trail, mark);
        }
        return false;
    }
};

}  // namespace

IsoResult quandle_isomorphic(const Table& s, const Table& t) {
    if (s.order() != t.order()) return {};
    const std::size_t n = s.order();
    if (n > 12)
        throw too_large_error("quandle_isomorphic: order above the backtracking cap of 12");

    // Element fingerprints: (L cycle type, R cycle type, idempotent flag).
    auto fingerprint = [](const Table& q, std::size_t a) {
        return std::tuple(cycle_type(q, a, true), cycle_type(q, a, false),
                          q.at(a, a) == a);
    };
    std::vector<std::vector<Elem>> cand(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto fa = fingerprint(s, a);
        for (std::size_t b = 0; b < n; ++b)
            if (fa == fingerprint(t, b)) cand[a].push_back(static_cast<Elem>(b));
        if (cand[a].empty()) return {};
    }

    IsoSearch search{s, t, n, std::move(cand),
                     std::vector<int>(n, -1), std::vector<bool>(n, false)};
    std::vector<Elem> trail;
    if (!search.search(trail)) return {};

    std::vector<Elem> witness(n);
    for (std::size_t a = 0; a < n; ++a) witness[a] = static_cast<Elem>(search.f[a]);
    return {true, std::move(witness)};
}

}  // namespace quandle
