#include <doctest.h>

#include "quandle/constructions.hpp"
#include "quandle/errors.hpp"
#include "quandle/groups.hpp"
#include "quandle/properties.hpp"
#include "support/oracles.hpp"

using namespace quandle;
using testsupport::affine_table;
using testsupport::core_table;
using testsupport::table_of;

namespace {

// S_3 written as a Cayley table: a non-commutative control group.
Table symmetric_group_3() {
    const std::vector<Perm> elems = {
        testsupport::perm_of({0, 1, 2}), testsupport::perm_of({0, 2, 1}),
        testsupport::perm_of({1, 0, 2}), testsupport::perm_of({1, 2, 0}),
        testsupport::perm_of({2, 0, 1}), testsupport::perm_of({2, 1, 0})};
    std::vector<Elem> cells(36);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            const Perm p = compose(elems[i], elems[j]);
            for (std::size_t k = 0; k < 6; ++k)
                if (p == elems[k]) cells[i * 6 + j] = static_cast<Elem>(k);
        }
    return Table(6, std::move(cells));
}

}  // namespace

TEST_CASE("cyclic_group") {
    CHECK(cyclic_group(1) == table_of({{0}}));
    CHECK(cyclic_group(3) == table_of({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    CHECK(cyclic_group(5).at(2, 4) == 1);
    CHECK_THROWS_AS(cyclic_group(0), precondition_error);
    for (std::size_t n = 1; n <= 27; ++n) {
        const GroupCheck gc = group_check(cyclic_group(n));
        CHECK(gc.is_group);
        CHECK(gc.identity == Elem{0});
    }
}

TEST_CASE("elementary_abelian_3") {
    CHECK(elementary_abelian_3(1) == cyclic_group(3));
    const Table g = elementary_abelian_3(2);
    CHECK(g.order() == 9);
    CHECK(g.at(4, 4) == 8);   // (1,1)+(1,1) = (2,2)
    CHECK(g.at(1, 3) == 4);   // (0,1)+(1,0) = (1,1)
    CHECK(group_check(g).is_group);
    CHECK_THROWS_AS(elementary_abelian_3(0), precondition_error);
    CHECK_THROWS_AS(elementary_abelian_3(7), too_large_error);
}

TEST_CASE("core of cyclic groups") {
    CHECK(core(cyclic_group(5), 0, CoreSide::left) == affine_table(5, 2, -1));
    CHECK(core(cyclic_group(5), 0, CoreSide::right) == affine_table(5, -1, 2));
    CHECK(core(cyclic_group(3), 0, CoreSide::left) ==
          core(cyclic_group(3), 0, CoreSide::right));
    CHECK_THROWS_AS(core(core_table(5, true), 0, CoreSide::left), not_group_error);
}

TEST_CASE("cores are idempotent for every group, latin only for odd order") {
    for (std::size_t n = 1; n <= 12; ++n) {
        const Table c = core(cyclic_group(n), 0, CoreSide::left);
        for (std::size_t x = 0; x < n; ++x) CHECK(c.at(x, x) == x);
        CHECK(is_latin(c) == (n % 2 == 1));
    }
    // nonabelian seed: still idempotent, not latin (even order)
    const Table cs3 = core(symmetric_group_3(), 0, CoreSide::left);
    for (std::size_t x = 0; x < 6; ++x) CHECK(cs3.at(x, x) == x);
    CHECK_FALSE(is_latin(cs3));
}

TEST_CASE("build_from_left_translations equals the left core") {
    for (std::size_t n = 1; n <= 27; ++n)
        CHECK(build_from_left_translations(cyclic_group(n), 0) ==
              core(cyclic_group(n), 0, CoreSide::left));
    for (std::size_t k = 1; k <= 3; ++k)
        CHECK(build_from_left_translations(elementary_abelian_3(k), 0) ==
              core(elementary_abelian_3(k), 0, CoreSide::left));
    CHECK(build_from_left_translations(symmetric_group_3(), 0) ==
          core(symmetric_group_3(), 0, CoreSide::left));
}

TEST_CASE("build_from_left_translations gives a LIPQ on odd cyclic seeds") {
    CHECK(build_from_left_translations(cyclic_group(9), 0) == affine_table(9, 2, -1));
    const PropertyReport p = involutory_profile(build_from_left_translations(cyclic_group(9), 0));
    CHECK(p.passed("lip"));
    CHECK_THROWS_AS(build_from_left_translations(core_table(5, true), 0), not_group_error);
}

TEST_CASE("build_from_right_translations equals the right core, RIPQ on odd seeds") {
    for (std::size_t n = 1; n <= 27; ++n)
        CHECK(build_from_right_translations(cyclic_group(n), 0) ==
              core(cyclic_group(n), 0, CoreSide::right));
    CHECK(involutory_profile(build_from_right_translations(cyclic_group(5), 0)).passed("rip"));
    CHECK(build_from_right_translations(cyclic_group(7), 0) == affine_table(7, -1, 2));
    CHECK(involutory_profile(build_from_right_translations(cyclic_group(7), 0)).passed("rip"));
    CHECK(involutory_profile(build_from_right_translations(cyclic_group(3), 0)).passed("ip"));
}

TEST_CASE("build_ipq on exponent-3 commutative groups") {
    const Table q3 = build_ipq(elementary_abelian_3(1), 0);
    CHECK(involutory_profile(q3).passed("ip"));

    const Table q9 = build_ipq(elementary_abelian_3(2), 0);
    CHECK(q9.order() == 9);
    CHECK(q9 == core(elementary_abelian_3(2), 0, CoreSide::left));
    const PropertyReport p = involutory_profile(q9);
    CHECK(p.passed("lip"));
    CHECK(p.passed("rip"));
    CHECK(p.passed("ip"));
}

TEST_CASE("build_ipq rejects unfit seeds with a diagnostic") {
    CHECK_THROWS_AS(build_ipq(core_table(5, true), 0), not_group_error);
    CHECK_THROWS_AS(build_ipq(symmetric_group_3(), 0), precondition_error);   // not commutative
    CHECK_THROWS_AS(build_ipq(cyclic_group(6), 0), precondition_error);       // order not 3^k
    CHECK_THROWS_AS(build_ipq(cyclic_group(9), 0), precondition_error);       // exponent 9

    // the Z_9 rejection is backed by an actual RIP failure of its core
    const Table c9 = core(cyclic_group(9), 0, CoreSide::left);
    CHECK_FALSE(involutory_profile(c9).passed("rip"));
    CHECK(c9.at(c9.at(1, 0), 0) == 4);   // (1*0)*0 = 4 != 1
}

TEST_CASE("odd cores are involutory latin quandles, even cores are not latin") {
    for (std::size_t n = 3; n <= 15; n += 2) {
        const Table lc = core(cyclic_group(n), 0, CoreSide::left);
        const Table rc = core(cyclic_group(n), 0, CoreSide::right);
        CHECK(is_latin_quandle(lc).all_pass());
        CHECK(involutory_profile(lc).passed("lip"));
        CHECK(involutory_profile(rc).passed("rip"));
    }
    for (std::size_t n : {2u, 4u, 6u})
        CHECK_FALSE(is_latin(core(cyclic_group(n), 0, CoreSide::left)));
}
