#include <doctest.h>

#include "quandle/constructions.hpp"
#include "quandle/errors.hpp"
#include "quandle/properties.hpp"
#include "quandle/representations.hpp"
#include "quandle/translations.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

using namespace quandle;
using testsupport::affine_table;
using testsupport::core_table;
using testsupport::table_of;

namespace {
const Table kLeftCore5 = core_table(5, true);
const Table kRightCore5 = core_table(5, false);
const Table kCore3 = core_table(3, true);

Table ipq9() { return build_ipq(elementary_abelian_3(2), 0); }
}  // namespace

TEST_CASE("extract matches the formula oracles on cores") {
    const Representation lam = extract(kLeftCore5, MiddleKind::left_middle);
    const Representation phi = extract(kLeftCore5, MiddleKind::right_middle);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(lam.members[i] == testsupport::formula_left_middle(5, true, i));
        CHECK(phi.members[i] == testsupport::formula_right_middle(5, true, i));
    }

    // on the order-3 core the two representations coincide
    const Representation l3 = extract(kCore3, MiddleKind::left_middle);
    const Representation r3 = extract(kCore3, MiddleKind::right_middle);
    CHECK(l3.members == r3.members);

    CHECK_THROWS_AS(extract(core_table(4, true), MiddleKind::left_middle), not_latin_error);
    CHECK_THROWS_AS(extract(core_table(4, true), MiddleKind::right_middle), not_latin_error);
}

TEST_CASE("representation members fix their index on idempotent latin tables") {
    for (const Table& t : {kLeftCore5, kRightCore5, kCore3, ipq9()}) {
        const Representation rep = extract(t, MiddleKind::left_middle);
        for (std::size_t i = 0; i < t.order(); ++i) CHECK(rep.members[i](i) == i);
    }
}

TEST_CASE("lambda/phi axioms pass for genuine extracted families") {
    // Clause (3) holds in every latin quandle: by right distributivity
    // (lambda_i(y)*lambda_x(y))*y = (lambda_i(y)*y)*(lambda_x(y)*y) = i*x,
    // and left division is unique. So genuine families always pass.
    const auto check_both = [](const Table& t) {
        CHECK(check_lambda_axioms(extract(t, MiddleKind::left_middle).members, t).all_pass());
        CHECK(check_phi_axioms(extract(t, MiddleKind::right_middle).members, t).all_pass());
    };
    check_both(kLeftCore5);
    check_both(kRightCore5);
    check_both(kCore3);
    check_both(ipq9());
    // the full enumeration: 622 labeled latin quandles of order <= 7
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        for (const Table& t : testsupport::enumerate_latin_quandles(n)) {
            check_both(t);
            ++total;
        }
    CHECK(total == 622);
}

TEST_CASE("corrupted families fail the axioms with frozen witnesses") {
    std::vector<Perm> fam;
    for (std::size_t i = 0; i < 5; ++i)
        fam.push_back(left_middle(kLeftCore5, static_cast<Elem>(i)));

    SUBCASE("swapping two members breaks clauses 1 and 3") {
        std::swap(fam[0], fam[1]);
        const PropertyReport rep = check_lambda_axioms(fam, kLeftCore5);
        CHECK_FALSE(rep.passed("1"));
        CHECK(rep.at("1").witness == std::vector<Elem>{0});
        CHECK(rep.passed("2"));
        CHECK_FALSE(rep.passed("3"));
        CHECK(rep.at("3").witness == std::vector<Elem>{0, 1, 0});
    }
    SUBCASE("splicing phi_0 into the lambda family breaks clause 3 only") {
        fam[0] = right_middle(kLeftCore5, 0);
        const PropertyReport rep = check_lambda_axioms(fam, kLeftCore5);
        CHECK(rep.passed("1"));   // phi_0 also fixes 0
        CHECK(rep.passed("2"));
        CHECK_FALSE(rep.passed("3"));
        CHECK(rep.at("3").witness == std::vector<Elem>{0, 1, 1});
    }
    SUBCASE("wrong family size") {
        fam.pop_back();
        CHECK_THROWS_AS(check_lambda_axioms(fam, kLeftCore5), size_mismatch_error);
    }
}

TEST_CASE("all-identity family on an idempotent table") {
    // Idempotency makes clause (3) vacuously true for identity maps; the
    // family still is not a middle-translation set, which the pi
    // characterization (clause ii) detects below.
    std::vector<Perm> fam(3, Perm::identity(3));
    const PropertyReport rep = check_lambda_axioms(fam, kCore3);
    CHECK(rep.passed("1"));
    CHECK(rep.passed("2"));
    CHECK(rep.passed("3"));
    CHECK_FALSE(check_pi_characterization(fam, kCore3).passed("ii"));
}

TEST_CASE("lambda_is_automorphism") {
    CHECK(lambda_is_automorphism(kRightCore5).ok);
    CHECK(lambda_is_automorphism(core_table(9, false)).ok);
    CHECK_THROWS_AS(lambda_is_automorphism(kLeftCore5), precondition_error);
    CHECK_THROWS_AS(lambda_is_automorphism(cyclic_group(5)), precondition_error);
}

TEST_CASE("pi characterization") {
    std::vector<Perm> pis;
    for (std::size_t i = 0; i < 5; ++i)
        pis.push_back(left_middle(kLeftCore5, static_cast<Elem>(i)));

    SUBCASE("genuine set passes all three clauses") {
        const PropertyReport rep = check_pi_characterization(pis, kLeftCore5);
        CHECK(rep.passed("i"));
        CHECK(rep.passed("ii"));
        CHECK(rep.passed("iii"));
    }
    SUBCASE("identity swapped in breaks uniqueness/coverage") {
        pis[1] = Perm::identity(5);
        const PropertyReport rep = check_pi_characterization(pis, kLeftCore5);
        CHECK_FALSE(rep.passed("ii"));
        CHECK(rep.at("ii").witness == std::vector<Elem>{0, 0});
    }
    SUBCASE("empty set fails coverage") {
        const PropertyReport rep = check_pi_characterization(std::vector<Perm>{}, kLeftCore5);
        CHECK_FALSE(rep.passed("ii"));
        CHECK_FALSE(rep.passed("i"));
    }
}

TEST_CASE("induced groupoid realizes the lambda family as right translations") {
    // RIPQ source: the induced groupoid is its mirror LIPQ
    CHECK(induced_groupoid(kRightCore5) == kLeftCore5);
    CHECK(involutory_profile(induced_groupoid(kRightCore5)).passed("lip"));

    // the order-3 core reproduces itself
    CHECK(induced_groupoid(kCore3) == kCore3);

    CHECK(induced_groupoid(core_table(7, false)) == core_table(7, true));
    CHECK(involutory_profile(induced_groupoid(core_table(7, false))).passed("lip"));

    CHECK_THROWS_AS(induced_groupoid(core_table(4, true)), not_latin_error);
}

TEST_CASE("induced-groupoid LIP matches source RIP over the small enumeration") {
    for (std::size_t n : {1u, 3u, 4u, 5u})
        for (const Table& t : testsupport::enumerate_latin_quandles(n)) {
            const bool src_rip = involutory_profile(t).passed("rip");
            const Table u = induced_groupoid(t);
            bool u_lip = true;
            if (is_latin_quandle(u).all_pass()) {
                u_lip = involutory_profile(u).passed("lip");
            } else {
                // induced groupoid of a latin quandle is always latin here
                for (std::size_t x = 0; x < u.order(); ++x)
                    for (std::size_t y = 0; y < u.order(); ++y)
                        if (u.at(x, u.at(x, y)) != y) u_lip = false;
            }
            CHECK(u_lip == src_rip);
        }
}

TEST_CASE("rep_is_commutative") {
    CHECK(rep_is_commutative(kCore3).ok);
    CHECK(rep_is_commutative(ipq9()).ok);

    const Verdict v = rep_is_commutative(kRightCore5);
    CHECK_FALSE(v.ok);
    CHECK(v.witness == std::vector<Elem>{0, 1});
    // lambda_0(1) = 2 but phi_0(1) = 3 on the right core
    CHECK(left_middle(kRightCore5, 0)(1) == 2);
    CHECK(right_middle(kRightCore5, 0)(1) == 3);

    CHECK_THROWS_AS(rep_is_commutative(core_table(4, true)), not_latin_error);
}

TEST_CASE("rep_is_commutative is equivalent to lambda == phi") {
    for (const Table& t : {kLeftCore5, kRightCore5, kCore3, ipq9(),
                           affine_table(5, 3, 3), affine_table(9, 5, 5)}) {
        const bool eq = extract(t, MiddleKind::left_middle).members ==
                        extract(t, MiddleKind::right_middle).members;
        CHECK(rep_is_commutative(t).ok == eq);
    }
}

TEST_CASE("a commutative order-9 latin quandle with lambda == phi need not be IP") {
    // (Z_9, 5x+5y): the identity-of-representations does not force the
    // involutory property outside exponent-3 carriers.
    const Table q = affine_table(9, 5, 5);
    CHECK(is_latin_quandle(q).all_pass());
    CHECK(is_commutative(q).ok);
    CHECK(rep_is_commutative(q).ok);
    const PropertyReport p = involutory_profile(q);
    CHECK_FALSE(p.passed("lip"));
    CHECK_FALSE(p.passed("rip"));
    CHECK_FALSE(p.passed("ip"));
}

TEST_CASE("IP coincides with lambda == phi on commutative exponent-3 quandles") {
    for (const Table& t : {kCore3, ipq9()}) {
        CHECK(is_commutative(t).ok);
        const bool ip = involutory_profile(t).passed("ip");
        CHECK(ip == rep_is_commutative(t).ok);
    }
}
