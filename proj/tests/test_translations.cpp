#include <doctest.h>

#include "quandle/constructions.hpp"
#include "quandle/errors.hpp"
#include "quandle/properties.hpp"
#include "quandle/translations.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

using namespace quandle;
using testsupport::core_table;
using testsupport::perm_of;
using testsupport::table_of;

namespace {

const Table kLeftCore5 = core_table(5, true);
const Table kRightCore5 = core_table(5, false);
const Table kCore3 = core_table(3, true);

std::vector<Table> latin_sample() {
    std::vector<Table> out{kLeftCore5, kRightCore5, kCore3,
                           testsupport::affine_table(5, 3, 3),
                           core_table(7, true), core_table(9, false)};
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        out.push_back(testsupport::random_latin_square(4 + seed, seed));
    return out;
}

}  // namespace

TEST_CASE("left and right translations read rows and columns") {
    CHECK(left_translation(kLeftCore5, 0) == perm_of({0, 4, 3, 2, 1}));
    CHECK(left_translation(kCore3, 1) == perm_of({2, 1, 0}));
    CHECK(right_translation(kLeftCore5, 0) == perm_of({0, 2, 4, 1, 3}));
    CHECK(right_translation(kCore3, 2) == perm_of({1, 0, 2}));

    const Table bad = table_of({{0, 0}, {0, 0}});
    CHECK_THROWS_AS(left_translation(bad, 0), not_latin_error);
    CHECK_THROWS_AS(right_translation(bad, 1), not_latin_error);
}

TEST_CASE("translations fix the acting element on idempotent tables") {
    for (const Table& t : latin_sample()) {
        if (!is_latin_quandle(t).all_pass()) continue;
        for (std::size_t a = 0; a < t.order(); ++a) {
            CHECK(left_translation(t, static_cast<Elem>(a))(a) == a);
            CHECK(right_translation(t, static_cast<Elem>(a))(a) == a);
            CHECK(left_middle(t, static_cast<Elem>(a))(a) == a);
            CHECK(right_middle(t, static_cast<Elem>(a))(a) == a);
        }
    }
}

TEST_CASE("middle translations by scan match frozen values") {
    CHECK(left_middle(kLeftCore5, 0) == perm_of({0, 3, 1, 4, 2}));
    // 2(1+x) mod 3 = [2, 1, 0]
    CHECK(left_middle(kCore3, 1) == perm_of({2, 1, 0}));
    CHECK(right_middle(kLeftCore5, 0) == perm_of({0, 2, 4, 1, 3}));
    // phi_0 = R_0 on the left core (it is a LIPQ)
    CHECK(right_middle(kLeftCore5, 0) == right_translation(kLeftCore5, 0));

    const Table not_latin_t = table_of({{0, 1}, {0, 1}});
    CHECK_THROWS_AS(left_middle(not_latin_t, 0), not_latin_error);
    CHECK_THROWS_AS(right_middle(not_latin_t, 0), not_latin_error);
}

TEST_CASE("middle translations satisfy their defining equations") {
    for (const Table& t : latin_sample()) {
        const std::size_t n = t.order();
        for (std::size_t i = 0; i < n; ++i) {
            const Perm lam = left_middle(t, static_cast<Elem>(i));
            const Perm phi = right_middle(t, static_cast<Elem>(i));
            for (std::size_t x = 0; x < n; ++x) {
                CHECK(t.at(lam(x), x) == i);
                CHECK(t.at(x, phi(x)) == i);
            }
            CHECK(compose(lam, phi) == Perm::identity(n));
        }
    }
}

TEST_CASE("translation_family builds every member") {
    const TranslationFamily fam = translation_family(kLeftCore5, TranslationKind::left_middle);
    CHECK(fam.members.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(fam.members[i] == left_middle(kLeftCore5, static_cast<Elem>(i)));
}

TEST_CASE("six translation identities hold on latin tables") {
    for (const Table& t : {kLeftCore5, kCore3, table_of({{0}}),
                           testsupport::affine_table(5, 3, 3)}) {
        const PropertyReport rep = check_translation_identities(t);
        CHECK(rep.size() == 6);
        CHECK(rep.all_pass());
    }
    CHECK_THROWS_AS(check_translation_identities(table_of({{0, 0}, {0, 0}})),
                    not_latin_error);
}

TEST_CASE("group identities on cyclic tables") {
    for (std::size_t n : {3u, 5u}) {
        const PropertyReport rep = check_group_identities(cyclic_group(n), 0);
        CHECK(rep.size() == 4);
        CHECK(rep.all_pass());
    }
    // the left core is not associative: (0*0)*1 = 4 but 0*(0*1) = 1
    CHECK(kLeftCore5.at(kLeftCore5.at(0, 0), 1) == 4);
    CHECK(kLeftCore5.at(0, kLeftCore5.at(0, 1)) == 1);
    CHECK_THROWS_AS(check_group_identities(kLeftCore5, 0), not_group_error);
    CHECK_THROWS_AS(check_group_identities(cyclic_group(5), 1), not_group_error);
    CHECK_THROWS_AS(check_group_identities(cyclic_group(5), 9), not_group_error);
}

TEST_CASE("coincidence of translation families") {
    const Coincidence a = coincidence(kLeftCore5);
    CHECK_FALSE(a.left_eq_lambda);
    CHECK(a.right_eq_phi);

    const Coincidence b = coincidence(kRightCore5);
    CHECK(b.left_eq_lambda);
    CHECK_FALSE(b.right_eq_phi);

    const Coincidence c = coincidence(kCore3);
    CHECK(c.left_eq_lambda);
    CHECK(c.right_eq_phi);

    CHECK_THROWS_AS(coincidence(table_of({{0, 0}, {0, 0}})), not_latin_error);
}

TEST_CASE("coincidence matches the involutory profile on idempotent latin squares") {
    // L = lambda iff RIP and R = phi iff LIP, definitionally; checked across
    // the full small enumeration plus seeded larger squares.
    std::vector<Table> corpus;
    for (std::size_t n : {1u, 3u, 4u, 5u})
        for (Table& t : testsupport::enumerate_idempotent_latin_squares(n))
            corpus.push_back(std::move(t));
    for (std::size_t n : {6u, 7u, 8u, 9u})
        for (std::uint64_t seed = 0; seed < 3; ++seed)
            corpus.push_back(testsupport::random_idempotent_latin_square(n, seed));

    for (const Table& t : corpus) {
        const std::size_t n = t.order();
        bool rip = true, lip = true;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (t.at(t.at(y, x), x) != y) rip = false;
                if (t.at(x, t.at(x, y)) != y) lip = false;
            }
        const Coincidence c = coincidence(t);
        CHECK(c.left_eq_lambda == rip);
        CHECK(c.right_eq_phi == lip);
    }
}
