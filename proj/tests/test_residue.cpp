#include <doctest.h>

#include "flagres/poly_parser.hpp"
#include "flagres/residue.hpp"
#include "oracles.hpp"

using namespace flagres;

namespace {

const VarSet z3v = projective_vars(3);

AffineForm quadric_on_u0() {
    const ProjForm f(3,
                     {parse_polynomial("-z0*z3", z3v), parse_polynomial("-z1*z3", z3v),
                      parse_polynomial("-z2*z3", z3v), parse_polynomial("z0^2+z1^2+z2^2", z3v)},
                     1);
    return dehomogenize_form(f, 0);
}

AffineForm pullback_on_u3() {
    const ProjForm f(3,
                     {parse_polynomial("(z0-z1)*z1 + z2*(z0-z2)", z3v), parse_polynomial("z0*(z1-z0)", z3v),
                      parse_polynomial("z0*(z2-z0)", z3v), MultiPoly(z3v)},
                     1);
    return dehomogenize_form(f, 3);
}

GaussRational I() { return GaussRational::i(); }

}  // namespace

TEST_SUITE("disc restriction and duality") {
    TEST_CASE("quadric form on the disc x = 0") {
        const PlanarForm f = restrict_form_to_disc(quadric_on_u0(), Disc{0, "x", GaussRational(0)});
        const VarSet& vs = f.a.vars();
        CHECK(vs.names() == std::vector<std::string>{"y", "z"});
        CHECK(f.a == parse_polynomial("-y*z", vs));
        CHECK(f.b == parse_polynomial("1+y^2", vs));

        const PlanarVF dual = dual_planar_field(f);
        CHECK(dual.p == parse_polynomial("1+y^2", vs));
        CHECK(dual.q == parse_polynomial("y*z", vs));
        CHECK(contract(f, dual).is_zero());
    }

    TEST_CASE("pullback form on the disc z = 1") {
        const PlanarForm f = restrict_form_to_disc(pullback_on_u3(), Disc{3, "z", GaussRational(1)});
        const VarSet& vs = f.a.vars();
        CHECK(vs.names() == std::vector<std::string>{"x", "y"});
        CHECK(f.a == parse_polynomial("(x-y)*y+(x-1)", vs));
        CHECK(f.b == parse_polynomial("x*(y-x)", vs));

        const PlanarVF dual = dual_planar_field(f);
        CHECK(dual.p == parse_polynomial("x*(y-x)", vs));
        CHECK(dual.q == -parse_polynomial("(x-y)*y+(x-1)", vs));
        CHECK(contract(f, dual).is_zero());
    }

    TEST_CASE("form untouched by an absent disc variable") {
        // no dx term and x-free coefficients: restriction changes nothing
        const VarSet av = affine_chart_vars(3);
        const AffineForm f{3, 0, av,
                           {MultiPoly(av), parse_polynomial("y+z", av), parse_polynomial("y^2", av)}};
        const PlanarForm planar = restrict_form_to_disc(f, Disc{0, "x", GaussRational(5)});
        const VarSet& vs = planar.a.vars();
        CHECK(planar.a == parse_polynomial("y+z", vs));
        CHECK(planar.b == parse_polynomial("y^2", vs));
    }

    TEST_CASE("du dualizes to -d/dw with zero contraction") {
        const VarSet uw({"u", "w"});
        const PlanarForm f{parse_polynomial("1", uw), MultiPoly(uw)};
        const PlanarVF dual = dual_planar_field(f);
        CHECK(dual.p.is_zero());
        CHECK(dual.q == parse_polynomial("-1", uw));
        CHECK(contract(f, dual).is_zero());
    }

    TEST_CASE("duality contraction vanishes for random forms") {
        testutil::Rng rng(10001);
        const VarSet uw({"u", "w"});
        for (int k = 0; k < 40; ++k) {
            const PlanarForm f{testutil::random_poly(rng, uw), testutil::random_poly(rng, uw)};
            CHECK(contract(f, dual_planar_field(f)).is_zero());
        }
    }

    TEST_CASE("unknown disc variable") {
        CHECK_THROWS_AS(restrict_form_to_disc(quadric_on_u0(), Disc{0, "q", GaussRational(0)}),
                        UnknownVariable);
    }
}

TEST_SUITE("jacobian") {
    TEST_CASE("quadric dual field") {
        const PlanarVF v = dual_planar_field(
            restrict_form_to_disc(quadric_on_u0(), Disc{0, "x", GaussRational(0)}));
        const Jacobian2 j = jacobian(v);
        const VarSet& vs = v.p.vars();
        CHECK(j.m00 == parse_polynomial("2*y", vs));
        CHECK(j.m01.is_zero());
        CHECK(j.m10 == parse_polynomial("z", vs));
        CHECK(j.m11 == parse_polynomial("y", vs));
    }

    TEST_CASE("pullback dual field") {
        const PlanarVF v = dual_planar_field(
            restrict_form_to_disc(pullback_on_u3(), Disc{3, "z", GaussRational(1)}));
        const Jacobian2 j = jacobian(v);
        const VarSet& vs = v.p.vars();
        CHECK(j.m00 == parse_polynomial("y-2*x", vs));
        CHECK(j.m01 == parse_polynomial("x", vs));
        CHECK(j.m10 == parse_polynomial("-y-1", vs));
        CHECK(j.m11 == parse_polynomial("-x+2*y", vs));
    }

    TEST_CASE("linear diagonal field") {
        const VarSet uw({"u", "w"});
        const PlanarVF v{parse_polynomial("3*u", uw), parse_polynomial("-2*w", uw)};
        const Jacobian2 j = jacobian(v);
        CHECK(j.m00 == parse_polynomial("3", uw));
        CHECK(j.m11 == parse_polynomial("-2", uw));
        CHECK(j.m01.is_zero());
        CHECK(j.m10.is_zero());
    }
}

TEST_SUITE("singular point solver") {
    TEST_CASE("quadric dual field on its disc") {
        const PlanarVF v = dual_planar_field(
            restrict_form_to_disc(quadric_on_u0(), Disc{0, "x", GaussRational(0)}));
        const PlanarSolve s = singular_points(v);
        CHECK(s.complete());
        REQUIRE(s.points.size() == 2);
        CHECK(s.points[0] == std::array<GaussRational, 2>{-I(), GaussRational(0)});
        CHECK(s.points[1] == std::array<GaussRational, 2>{I(), GaussRational(0)});
    }

    TEST_CASE("pullback dual field on its disc") {
        const PlanarVF v = dual_planar_field(
            restrict_form_to_disc(pullback_on_u3(), Disc{3, "z", GaussRational(1)}));
        const PlanarSolve s = singular_points(v);
        CHECK(s.complete());
        REQUIRE(s.points.size() == 3);
        CHECK(s.points[0] == std::array<GaussRational, 2>{GaussRational(0), -I()});
        CHECK(s.points[1] == std::array<GaussRational, 2>{GaussRational(0), I()});
        CHECK(s.points[2] == std::array<GaussRational, 2>{GaussRational(1), GaussRational(1)});
    }

    TEST_CASE("coordinate field vanishes at the origin only") {
        const VarSet uw({"u", "w"});
        const PlanarVF v{parse_polynomial("u", uw), parse_polynomial("w", uw)};
        const PlanarSolve s = singular_points(v);
        REQUIRE(s.points.size() == 1);
        CHECK(s.points[0] == std::array<GaussRational, 2>{GaussRational(0), GaussRational(0)});
    }

    TEST_CASE("shared factors are degenerate") {
        const VarSet uw({"u", "w"});
        CHECK_THROWS_AS(singular_points(PlanarVF{parse_polynomial("u*(u-w)", uw),
                                                 parse_polynomial("u*(u+w)", uw)}),
                        DegenerateSystem);
        CHECK_THROWS_AS(singular_points(PlanarVF{parse_polynomial("(w-1)*u", uw),
                                                 parse_polynomial("(w-1)*(u+1)", uw)}),
                        DegenerateSystem);
        CHECK_THROWS_AS(singular_points(PlanarVF{MultiPoly(uw), parse_polynomial("u", uw)}),
                        DegenerateSystem);
        CHECK_THROWS_AS(singular_points(PlanarVF{MultiPoly(uw), MultiPoly(uw)}), DegenerateSystem);
    }

    TEST_CASE("nonrational loci are reported unresolved") {
        const VarSet uw({"u", "w"});
        // zeros at w = ±sqrt(2): outside Q(i), must surface as a factor
        const PlanarVF v{parse_polynomial("u", uw), parse_polynomial("w^2-2", uw)};
        const PlanarSolve s = singular_points(v);
        CHECK(s.points.empty());
        CHECK_FALSE(s.complete());
    }

    TEST_CASE("solver matches the brute-force line oracle") {
        testutil::Rng rng(10002);
        const VarSet uw({"u", "w"});
        int done = 0;
        while (done < 40) {
            const int np = testutil::random_in(rng, 1, 2);
            const int nq = testutil::random_in(rng, 1, 2);
            std::vector<testutil::Line> ps, qs;
            for (int k = 0; k < np; ++k) ps.push_back(testutil::random_line(rng));
            for (int k = 0; k < nq; ++k) qs.push_back(testutil::random_line(rng));
            bool degenerate = false;
            for (const auto& p : ps)
                for (const auto& q : qs)
                    if (testutil::proportional(p, q)) degenerate = true;
            if (degenerate) continue;
            MultiPoly P = MultiPoly::constant(uw, GaussRational(1));
            MultiPoly Q = MultiPoly::constant(uw, GaussRational(1));
            for (const auto& l : ps) P *= testutil::line_poly(l, uw);
            for (const auto& l : qs) Q *= testutil::line_poly(l, uw);
            const auto expected = testutil::brute_force_intersections(ps, qs);
            const PlanarSolve got = singular_points(PlanarVF{P, Q});
            CHECK(got.complete());
            CHECK(got.points == expected);
            ++done;
        }
    }
}

TEST_SUITE("grothendieck residue") {
    TEST_CASE("quadric flag residue 9/2") {
        const PlanarVF v = dual_planar_field(
            restrict_form_to_disc(quadric_on_u0(), Disc{0, "x", GaussRational(0)}));
        CHECK(grothendieck_residue(ResidueSymbol::c1_squared, v, {I(), GaussRational(0)}) ==
              GaussRational(Rational(9, 2)));
        CHECK(grothendieck_residue(ResidueSymbol::c1_squared, v, {-I(), GaussRational(0)}) ==
              GaussRational(Rational(9, 2)));
        CHECK(grothendieck_residue(ResidueSymbol::c2, v, {I(), GaussRational(0)}) == GaussRational(1));
    }

    TEST_CASE("pullback flag residues 9/2, 9/2, 0") {
        const PlanarVF v = dual_planar_field(
            restrict_form_to_disc(pullback_on_u3(), Disc{3, "z", GaussRational(1)}));
        CHECK(grothendieck_residue(ResidueSymbol::c1_squared, v, {GaussRational(0), -I()}) ==
              GaussRational(Rational(9, 2)));
        CHECK(grothendieck_residue(ResidueSymbol::c1_squared, v, {GaussRational(0), I()}) ==
              GaussRational(Rational(9, 2)));
        CHECK(grothendieck_residue(ResidueSymbol::c1_squared, v, {GaussRational(1), GaussRational(1)}) ==
              GaussRational(0));
    }

    TEST_CASE("errors: not singular and degenerate") {
        const VarSet uw({"u", "w"});
        const PlanarVF v{parse_polynomial("u", uw), parse_polynomial("w", uw)};
        CHECK_THROWS_AS(grothendieck_residue(ResidueSymbol::c1_squared, v, {GaussRational(1), GaussRational(0)}),
                        NotSingular);
        const PlanarVF degen{parse_polynomial("u*u", uw), parse_polynomial("w", uw)};
        CHECK_THROWS_AS(grothendieck_residue(ResidueSymbol::c1_squared, degen,
                                             {GaussRational(0), GaussRational(0)}),
                        DegenerateSingularity);
    }

    TEST_CASE("c2 residue is 1 at random nondegenerate points") {
        testutil::Rng rng(10003);
        const VarSet uw({"u", "w"});
        for (int k = 0; k < 30; ++k) {
            const auto sf = testutil::random_nondegenerate_singularity(rng, uw);
            CHECK(grothendieck_residue(ResidueSymbol::c2, sf.field, sf.point) == GaussRational(1));
        }
    }

    TEST_CASE("residue is invariant under linear conjugation and scaling") {
        testutil::Rng rng(10004);
        const VarSet uw({"u", "w"});
        for (int k = 0; k < 30; ++k) {
            const auto sf = testutil::random_nondegenerate_singularity(rng, uw);
            const GaussRational expected =
                grothendieck_residue(ResidueSymbol::c1_squared, sf.field, sf.point);

            // nonzero rescaling
            const GaussRational lambda = testutil::random_gauss_nonzero(rng, 4);
            const PlanarVF scaled{lambda * sf.field.p, lambda * sf.field.q};
            CHECK(grothendieck_residue(ResidueSymbol::c1_squared, scaled, sf.point) == expected);

            // conjugation by an invertible M: v'(x) = M^{-1} v(Mx), p' = M^{-1} p
            GaussRational m00, m01, m10, m11, det;
            do {
                m00 = testutil::random_gauss_int(rng, 3);
                m01 = testutil::random_gauss_int(rng, 3);
                m10 = testutil::random_gauss_int(rng, 3);
                m11 = testutil::random_gauss_int(rng, 3);
                det = m00 * m11 - m01 * m10;
            } while (det.is_zero());
            const std::vector<MultiPoly> images{
                m00 * MultiPoly::variable(uw, size_t(0)) + m01 * MultiPoly::variable(uw, size_t(1)),
                m10 * MultiPoly::variable(uw, size_t(0)) + m11 * MultiPoly::variable(uw, size_t(1))};
            const MultiPoly pm = compose(sf.field.p, uw, images);
            const MultiPoly qm = compose(sf.field.q, uw, images);
            const PlanarVF conj{(m11 / det) * pm - (m01 / det) * qm,
                                (-m10 / det) * pm + (m00 / det) * qm};
            const std::array<GaussRational, 2> moved{(m11 * sf.point[0] - m01 * sf.point[1]) / det,
                                                     (-m10 * sf.point[0] + m00 * sf.point[1]) / det};
            CHECK(grothendieck_residue(ResidueSymbol::c1_squared, conj, moved) == expected);
            CHECK(grothendieck_residue(ResidueSymbol::c2, conj, moved) == GaussRational(1));
        }
    }
}
