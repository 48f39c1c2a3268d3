#include "quandle/translations.hpp"

#include <string>

#include "quandle/errors.hpp"

namespace quandle {
namespace {

void require_latin(const Table& t, const char* who) {
    if (!is_latin(t))
        throw not_latin_error(std::string(who) + ": table is not latin");
}

// Latin + associative + e a two-sided identity. Local so this module stays
// independent of the groups module (which owns identity discovery).
void require_group_with_identity(const Table& t, Elem e) {
    const std::size_t n = t.order();
    if (e >= n) throw not_group_error("identity element out of range");
    if (!is_latin(t)) throw not_group_error("table is not latin");
    for (std::size_t x = 0; x < n; ++x)
        if (t.at(e, x) != x || t.at(x, e) != x)
            throw not_group_error("element " + std::to_string(e) +
                                  " is not a two-sided identity");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
                    throw not_group_error("associativity fails at (" +
                                          std::to_string(x) + "," + std::to_string(y) +
                                          "," + std::to_string(z) + ")");
}

std::vector<Elem> group_inverses(const Table& t, Elem e) {
    const std::size_t n = t.order();
    std::vector<Elem> inv(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (t.at(x, y) == e) inv[x] = static_cast<Elem>(y);
    return inv;
}

}  // namespace

Perm left_translation(const Table& t, Elem a) {
    const std::size_t n = t.order();
    std::vector<Elem> m(n);
    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        const Elem v = t.at(a, x);
        if (seen[v])
            throw not_latin_error("row " + std::to_string(a) + " is not a bijection");
        seen[v] = true;
        m[x] = v;
    }
    return Perm(std::move(m));
}

Perm right_translation(const Table& t, Elem a) {
    const std::size_t n = t.order();
    std::vector<Elem> m(n);
    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        const Elem v = t.at(x, a);
        if (seen[v])
            throw not_latin_error("column " + std::to_string(a) + " is not a bijection");
        seen[v] = true;
        m[x] = v;
    }
    return Perm(std::move(m));
}

Perm left_middle(const Table& t, Elem i) {
    const std::size_t n = t.order();
    std::vector<Elem> m(n);
    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t r = 0; r < n; ++r) {
            if (t.at(r, x) == i) {
                if (found)
                    throw not_latin_error("column " + std::to_string(x) +
                                          " contains " + std::to_string(i) + " twice");
                m[x] = static_cast<Elem>(r);
                found = true;
            }
        }
        if (!found)
            throw not_latin_error("column " + std::to_string(x) +
                                  " does not contain " + std::to_string(i));
    }
    try {
        return Perm(std::move(m));
    } catch (const std::invalid_argument&) {
        throw not_latin_error("left middle translation of " + std::to_string(i) +
                              " is not a bijection");
    }
}

Perm right_middle(const Table& t, Elem i) {
    const std::size_t n = t.order();
    std::vector<Elem> m(n);
    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t c = 0; c < n; ++c) {
            if (t.at(x, c) == i) {
                if (found)
                    throw not_latin_error("row " + std::to_string(x) +
                                          " contains " + std::to_string(i) + " twice");
                m[x] = static_cast<Elem>(c);
                found = true;
            }
        }
        if (!found)
            throw not_latin_error("row " + std::to_string(x) +
                                  " does not contain " + std::to_string(i));
    }
    try {
        return Perm(std::move(m));
    } catch (const std::invalid_argument&) {
        throw not_latin_error("right middle translation of " + std::to_string(i) +
                              " is not a bijection");
    }
}

TranslationFamily translation_family(const Table& t, TranslationKind kind) {
    const std::size_t n = t.order();
    TranslationFamily fam{kind, {}};
    fam.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Elem e = static_cast<Elem>(i);
        switch (kind) {
            case TranslationKind::left:         fam.members.push_back(left_translation(t, e)); break;
            case TranslationKind::right:        fam.members.push_back(right_translation(t, e)); break;
            case TranslationKind::left_middle:  fam.members.push_back(left_middle(t, e)); break;
            case TranslationKind::right_middle: fam.members.push_back(right_middle(t, e)); break;
        }
    }
    return fam;
}

PropertyReport check_translation_identities(const Table& t) {
    require_latin(t, "check_translation_identities");
    const std::size_t n = t.order();

    std::vector<Perm> lams, phis;
    lams.reserve(n); phis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        lams.push_back(left_middle(t, static_cast<Elem>(i)));
        phis.push_back(right_middle(t, static_cast<Elem>(i)));
    }

    // Each clause scans (i, x) in lex order and records the first violation.
    auto scan = [&](auto&& holds) -> Verdict {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t x = 0; x < n; ++x)
                if (!holds(i, x))
                    return {false, {static_cast<Elem>(i), static_cast<Elem>(x)}};
        return {};
    };

    PropertyReport rep;
    rep.record("1", scan([&](std::size_t i, std::size_t x) {
        return lams[i](x) == inverse(phis[i])(x);
    }));
    rep.record("2", scan([&](std::size_t i, std::size_t x) {
        return t.at(inverse(phis[i])(x), x) == i;
    }));
    rep.record("3", scan([&](std::size_t i, std::size_t x) {
        return t.at(i, x) == t.at(t.at(lams[i](x), x), x);
    }));
    rep.record("4", scan([&](std::size_t i, std::size_t x) {
        return t.at(i, x) == t.at(t.at(x, phis[i](x)), x);
    }));
    rep.record("5", scan([&](std::size_t i, std::size_t x) {
        return t.at(x, i) == t.at(x, t.at(lams[i](x), x));
    }));
    rep.record("6", scan([&](std::size_t i, std::size_t x) {
        return t.at(x, i) == t.at(x, t.at(x, phis[i](x)));
    }));
    return rep;
}

PropertyReport check_group_identities(const Table& t, Elem e) {
    require_group_with_identity(t, e);
    const std::size_t n = t.order();
    const std::vector<Elem> inv = group_inverses(t, e);

    std::vector<Perm> lams, phis;
    for (std::size_t i = 0; i < n; ++i) {
        lams.push_back(left_middle(t, static_cast<Elem>(i)));
        phis.push_back(right_middle(t, static_cast<Elem>(i)));
    }

    PropertyReport rep;

    Verdict v1;
    for (std::size_t i = 0; i < n && v1.ok; ++i)
        for (std::size_t x = 0; x < n; ++x)
            if (phis[i](x) != t.at(inv[x], i) || lams[i](x) != t.at(i, inv[x])) {
                v1 = {false, {static_cast<Elem>(i), static_cast<Elem>(x)}};
                break;
            }
    rep.record("1", v1);

    Verdict v2;
    for (std::size_t x = 0; x < n; ++x)
        if (phis[e](x) != inv[x] || lams[e](x) != inv[x]) {
            v2 = {false, {static_cast<Elem>(x)}};
            break;
        }
    rep.record("2", v2);

    Verdict v3;
    for (std::size_t i = 0; i < n && v3.ok; ++i)
        for (std::size_t x = 0; x < n; ++x)
            if (t.at(i, x) != t.at(lams[i](x), t.at(x, x))) {
                v3 = {false, {static_cast<Elem>(i), static_cast<Elem>(x)}};
                break;
            }
    rep.record("3", v3);

    Verdict v4;
    for (std::size_t i = 0; i < n && v4.ok; ++i)
        for (std::size_t x = 0; x < n; ++x)
            if (t.at(x, i) != t.at(t.at(x, x), phis[i](x))) {
                v4 = {false, {static_cast<Elem>(i), static_cast<Elem>(x)}};
                break;
            }
    rep.record("4", v4);

    return rep;
}

Coincidence coincidence(const Table& t) {
    require_latin(t, "coincidence");
    const std::size_t n = t.order();
    Coincidence c{true, true};
    for (std::size_t i = 0; i < n && (c.left_eq_lambda || c.right_eq_phi); ++i) {
        const Elem e = static_cast<Elem>(i);
        if (c.left_eq_lambda && !(left_translation(t, e) == left_middle(t, e)))
            c.left_eq_lambda = false;
        if (c.right_eq_phi && !(right_translation(t, e) == right_middle(t, e)))
            c.right_eq_phi = false;
    }
    return c;
}

}  // namespace quandle
