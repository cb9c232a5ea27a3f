#include <doctest.h>

#include "flagres/chern_ring.hpp"
#include "flagres/flag_relations.hpp"
#include "flagres/poly_parser.hpp"
#include "oracles.hpp"

using namespace flagres;

namespace {

const VarSet& PS = ChernExpr::params();

MultiPoly param(const std::string& s) { return parse_polynomial(s, PS); }

ChernMonomial mono(int h, int e, int t) { return ChernMonomial{{h, e, t}}; }

ChernExpr random_graded_expr(testutil::Rng& rng, int degree) {
    ChernExpr out;
    for (int h = 0; h <= degree; ++h)
        for (int e = 0; h + e <= degree; ++e) {
            const int t = degree - h - e;
            if (testutil::random_in(rng, 0, 1))
                out.add_term(mono(h, e, t), testutil::random_poly(rng, PS, 2, 2, 3));
        }
    return out;
}

}  // namespace

TEST_SUITE("chern expressions") {
    TEST_CASE("products of generators") {
        CHECK(chern_h() * (chern_h() * chern_h()) == ChernExpr::term(mono(3, 0, 0), "1"));
        CHECK(chern_e() * (chern_e() * chern_e()) == ChernExpr::term(mono(0, 3, 0), "1"));
        const ChernExpr lhs = c1_n12_tilde() * ChernExpr::term(mono(2, 0, 0), "degC");
        ChernExpr expected = ChernExpr::term(mono(3, 0, 0), "(1+d1-d2)*degC");
        expected.add_term(mono(2, 1, 0), param("(2*l2-l1)*degC"));
        CHECK(lhs == expected);
    }

    TEST_CASE("ring laws on random graded expressions") {
        testutil::Rng rng(12001);
        for (int k = 0; k < 15; ++k) {
            const ChernExpr a = random_graded_expr(rng, 1);
            const ChernExpr b = random_graded_expr(rng, 1);
            const ChernExpr c = random_graded_expr(rng, 1);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
        }
    }

    TEST_CASE("grading adds under products") {
        testutil::Rng rng(12002);
        for (int k = 0; k < 10; ++k) {
            const ChernExpr a = random_graded_expr(rng, 1);
            const ChernExpr b = random_graded_expr(rng, 2);
            const ChernExpr ab = a * b;
            if (ab.is_zero()) continue;
            REQUIRE(ab.pure_degree().has_value());
            CHECK(*ab.pure_degree() == 3);
        }
    }
}

TEST_SUITE("twisted chern classes") {
    TEST_CASE("first Chern classes as stated") {
        CHECK(c1_f1_tilde() == ChernExpr::term(mono(1, 0, 0), "1-d1") + ChernExpr::term(mono(0, 1, 0), "l1"));
        CHECK(c1_f2_tilde() == ChernExpr::term(mono(1, 0, 0), "2-d2") + ChernExpr::term(mono(0, 1, 0), "2*l2"));
        CHECK(c1_n12_tilde() ==
              ChernExpr::term(mono(1, 0, 0), "1+d1-d2") + ChernExpr::term(mono(0, 1, 0), "2*l2-l1"));
    }

    TEST_CASE("c1(N12~) equals the difference of the two twists") {
        CHECK(c1_n12_tilde() == c1_f2_tilde() - c1_f1_tilde());
    }

    TEST_CASE("specializations collapse to zero") {
        CHECK(specialize(c1_f1_tilde(), {{"d1", 1}, {"l1", 0}}).is_zero());
        const auto zero = specialize(c1_n12_tilde(), {{"d1", 3}, {"d2", 4}, {"l1", 2}, {"l2", 1}});
        CHECK(zero.is_zero());
    }

    TEST_CASE("blow-up tangent classes") {
        CHECK(c2_tangent_blowup() == ChernExpr::term(mono(2, 0, 0), "6") +
                                         ChernExpr::term(mono(0, 2, 0), "-1") +
                                         ChernExpr::term(mono(0, 1, 1), "-1"));
        CHECK(c1_tangent_blowup() == ChernExpr::term(mono(1, 0, 0), "4") + ChernExpr::term(mono(0, 1, 0), "-1"));
    }

    TEST_CASE("the two c1(N2~) variants differ exactly in the E coefficient") {
        const ChernExpr printed = c1_n2_tilde_printed();
        const ChernExpr adjunction = c1_n2_tilde_adjunction();
        CHECK(printed.terms().at(mono(1, 0, 0)) == param("2+d2"));
        CHECK(adjunction.terms().at(mono(1, 0, 0)) == param("2+d2"));
        CHECK(printed.terms().at(mono(0, 1, 0)) == param("-(2*l2+l1)"));
        CHECK(adjunction.terms().at(mono(0, 1, 0)) == param("-(1+2*l2)"));
        CHECK(printed - adjunction == ChernExpr::term(mono(0, 1, 0), "1-l1"));
    }

    TEST_CASE("stated c2(N2~) and its recomputations") {
        const NormalC2 c2 = c2_n2_tilde();
        ChernExpr stated = ChernExpr::term(mono(2, 0, 0), "degC");
        stated.add_term(mono(1, 1, 0), param("-3*l2*d2-2*l2-d2+2"));
        stated.add_term(mono(0, 1, 1), param("-1"));
        stated.add_term(mono(0, 2, 0), param("3*l2^2+2*l2-1"));
        CHECK(c2.stated == stated);

        // The adjunction-variant recomputation reproduces the stated class;
        // the printed-variant one differs unless l1 = 1.
        CHECK(c2.from_adjunction_c1 == c2.stated);
        CHECK_FALSE(c2.from_printed_c1 == c2.stated);
        ChernExpr diff = c2.stated - c2.from_printed_c1;
        CHECK(specialize(diff, {{"l1", 1}}).is_zero());

        // specialization l2 = 0, d2 = 0 of the stated class
        const ChernExpr special = specialize(c2.stated, {{"l2", 0}, {"d2", 0}});
        ChernExpr expected = ChernExpr::term(mono(2, 0, 0), "degC");
        expected.add_term(mono(1, 1, 0), param("2"));
        expected.add_term(mono(0, 1, 1), param("-1"));
        expected.add_term(mono(0, 2, 0), param("-1"));
        CHECK(special == expected);
    }
}

TEST_SUITE("integration") {
    TEST_CASE("the six intersection numbers") {
        CHECK(integrate(ChernExpr::term(mono(3, 0, 0), "1")) == param("1"));
        CHECK(integrate(ChernExpr::term(mono(2, 1, 0), "1")).is_zero());
        CHECK(integrate(ChernExpr::term(mono(1, 2, 0), "1")) == param("-degC"));
        CHECK(integrate(ChernExpr::term(mono(0, 3, 0), "1")) == param("chi-4*degC"));
        CHECK(integrate(ChernExpr::term(mono(1, 1, 1), "1")).is_zero());
        CHECK(integrate(ChernExpr::term(mono(0, 2, 1), "1")) == param("chi"));
    }

    TEST_CASE("degree and table errors") {
        CHECK_THROWS_AS(integrate(chern_h() * chern_h()), NotTopDegree);
        CHECK_THROWS_AS(integrate(ChernExpr::term(mono(0, 1, 2), "1")), UnknownMonomial);  // T^2 E
        CHECK_THROWS_AS(integrate(ChernExpr::term(mono(2, 0, 1), "1")), UnknownMonomial);  // H^2 T
        CHECK(integrate(ChernExpr::term(mono(0, 0, 3), "1"), true).is_zero());  // permissive
        CHECK(integrate(ChernExpr()).is_zero());
    }

    TEST_CASE("linearity") {
        testutil::Rng rng(12003);
        for (int k = 0; k < 15; ++k) {
            const ChernExpr a = random_graded_expr(rng, 3);
            const ChernExpr b = random_graded_expr(rng, 3);
            CHECK(integrate(a + b, true) == integrate(a, true) + integrate(b, true));
        }
    }
}

TEST_SUITE("blow-up relation, symbolically") {
    TEST_CASE("the symbolic residual is the zero polynomial") {
        CHECK(verify_blowup_relation().is_zero());
        CHECK(verify_blowup_relation(true).is_zero());  // no unlisted monomials arise
    }

    TEST_CASE("integrated polynomial at l1 = l2 = 0") {
        MultiPoly p = blowup_relation_integrated();
        p = substitute(p, "l1", GaussRational(0));
        p = substitute(p, "l2", GaussRational(0));
        CHECK(p == param("degC*(2*(1+d1-d2))"));
    }

    TEST_CASE("integrated polynomial agrees with the integer residual") {
        testutil::Rng rng(12004);
        const MultiPoly integrated = blowup_relation_integrated();
        for (int k = 0; k < 50; ++k) {
            const long long d1 = testutil::random_in(rng, -4, 6);
            const long long d2 = testutil::random_in(rng, -4, 6);
            const long long l1 = testutil::random_in(rng, -5, 5);
            const long long l2 = testutil::random_in(rng, -5, 5);
            const long long degC = testutil::random_in(rng, 1, 8);
            const long long chi = testutil::random_in(rng, -10, 10);
            const std::vector<GaussRational> point{
                GaussRational(d1), GaussRational(d2), GaussRational(l1),
                GaussRational(l2), GaussRational(degC), GaussRational(chi)};
            const BigInt expected = blowup_relation_residual(FlagRelationInput{d1, d2, l1, l2, degC, chi});
            CHECK(eval(integrated, point) == GaussRational(Rational(expected)));
        }
    }
}
