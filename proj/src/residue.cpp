#include "flagres/residue.hpp"

#include <algorithm>

namespace flagres {

std::string to_string(ResidueSymbol s) {
    return s == ResidueSymbol::c1_squared ? "c1^2" : "c2";
}

ResidueSymbol parse_symbol(const std::string& text) {
    if (text == "c1^2") return ResidueSymbol::c1_squared;
    if (text == "c2") return ResidueSymbol::c2;
    throw ParseError("unknown residue symbol '" + text + "' (expected c1^2 or c2)", 1, 1);
}

PlanarForm restrict_form_to_disc(const AffineForm& f, const Disc& d) {
    if (d.chart != f.chart)
        throw PreconditionViolated("disc lives on chart U" + std::to_string(d.chart) + " but the form is on U" +
                                   std::to_string(f.chart));
    const auto fixed_opt = f.vars.index(d.fixed_var);
    if (!fixed_opt) throw UnknownVariable(d.fixed_var);
    const size_t fixed = *fixed_opt;
    if (f.vars.size() != 3) throw PreconditionViolated("disc restriction needs a three-variable chart");

    std::vector<MultiPoly> kept;
    for (size_t j = 0; j < f.coeffs.size(); ++j) {
        if (j == fixed) continue;  // the d(fixed) term dies on the disc
        kept.push_back(drop_variable(substitute(f.coeffs[j], fixed, d.value), fixed));
    }
    return PlanarForm{kept[0], kept[1]};
}

PlanarVF dual_planar_field(const PlanarForm& f) {
    return PlanarVF{f.b, -f.a};
}

MultiPoly contract(const PlanarForm& f, const PlanarVF& v) {
    return f.a * v.p + f.b * v.q;
}

Jacobian2 jacobian(const PlanarVF& v) {
    return Jacobian2{partial(v.p, 0), partial(v.p, 1), partial(v.q, 0), partial(v.q, 1)};
}

namespace {

void check_planar(const PlanarVF& v) {
    if (v.p.vars().size() != 2 || !(v.p.vars() == v.q.vars()))
        throw NotBivariate("planar field components must share one two-variable set");
}

// gcd of the coefficients of p with respect to u: the u-free content.
MultiPoly content_in_other_var(const MultiPoly& p, size_t u) {
    MultiPoly g(p.vars());
    const int d = p.degree_in(u);
    for (int k = 0; k <= d; ++k) {
        MultiPoly ck(p.vars());
        for (const auto& [m, c] : p.terms()) {
            if (m[u] != static_cast<std::uint32_t>(k)) continue;
            Monomial mm = m;
            mm[u] = 0;
            ck.add_term(std::move(mm), c);
        }
        g = gcd_univariate(g, ck);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

}  // namespace

PlanarSolve singular_points(const PlanarVF& v) {
    check_planar(v);
    const MultiPoly& p = v.p;
    const MultiPoly& q = v.q;
    if (p.is_zero() && q.is_zero())
        throw DegenerateSystem("both components vanish identically");
    if (p.is_zero() || q.is_zero()) {
        const MultiPoly& other = p.is_zero() ? q : p;
        if (other.is_constant()) return PlanarSolve{};  // no zeros at all
        throw DegenerateSystem("one component vanishes identically");
    }

    // A shared nonconstant factor means a positive-dimensional zero set.
    const MultiPoly content_gcd = gcd_univariate(content_in_other_var(p, 0), content_in_other_var(q, 0));
    if (!content_gcd.is_constant())
        throw DegenerateSystem("components share the factor " + to_string(content_gcd));

    PlanarSolve out;
    const MultiPoly r = resultant(p, q, 0);
    if (r.is_zero()) throw DegenerateSystem("components share a common factor");
    if (r.is_constant()) return out;

    RootsResult wr = roots_in_qi(r);
    for (auto& f : wr.unresolved) out.unresolved.push_back(UnresolvedLocus{std::move(f), std::nullopt});

    for (const auto& w0 : wr.roots) {
        const MultiPoly pu = substitute(p, 1, w0);
        const MultiPoly qu = substitute(q, 1, w0);
        if (pu.is_zero() && qu.is_zero())
            throw DegenerateSystem("the whole line " + p.vars().name(1) + " = " + w0.str() + " is singular");
        const MultiPoly g = gcd_univariate(pu, qu);
        if (g.is_constant()) continue;  // spurious eliminant root (leading terms dropped)
        RootsResult ur = roots_in_qi(g);
        for (auto& f : ur.unresolved) out.unresolved.push_back(UnresolvedLocus{std::move(f), w0});
        for (const auto& u0 : ur.roots) {
            const std::array<GaussRational, 2> pt{u0, w0};
            if (eval(p, pt).is_zero() && eval(q, pt).is_zero()) out.points.push_back(pt);
        }
    }

    std::sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) {
        if (!(a[0] == b[0])) return lex_less(a[0], b[0]);
        return lex_less(a[1], b[1]);
    });
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

GaussRational grothendieck_residue(ResidueSymbol sym, const PlanarVF& v,
                                   const std::array<GaussRational, 2>& point) {
    check_planar(v);
    if (!eval(v.p, point).is_zero() || !eval(v.q, point).is_zero())
        throw NotSingular("field does not vanish at (" + point[0].str() + ", " + point[1].str() + ")");
    const Jacobian2 j = jacobian(v);
    const GaussRational det = eval(j.det(), point);
    if (det.is_zero())
        throw DegenerateSingularity("det J = 0 at (" + point[0].str() + ", " + point[1].str() +
                                    "); only simple singularities are supported");
    if (sym == ResidueSymbol::c2) return det / det;
    const GaussRational tr = eval(j.trace(), point);
    return tr * tr / det;
}

}  // namespace flagres
