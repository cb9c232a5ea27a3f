#include "flagres/commands.hpp"

#include <sstream>

#include "flagres/poly_parser.hpp"

namespace flagres {

namespace {

int ambient_dim(const std::string& ambient) {
    return ambient == "P2" ? 2 : 3;
}

std::vector<MultiPoly> parse_entries(const std::vector<std::string>& texts, const VarSet& vars) {
    std::vector<MultiPoly> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, vars));
    return out;
}

Disc make_disc(const ComponentDescriptor& c) {
    return Disc{c.chart, c.disc.fix, parse_gauss(c.disc.value)};
}

std::string point_str(const std::array<GaussRational, 2>& p) {
    return "(" + p[0].str() + ", " + p[1].str() + ")";
}

void add_row(ValidateReport& rep, std::string name, bool pass, std::string detail = "") {
    rep.rows.push_back(CheckRow{std::move(name), pass ? "pass" : "fail", std::move(detail)});
    if (!pass) rep.ok = false;
}

void add_note(ValidateReport& rep, std::string name, std::string detail) {
    rep.rows.push_back(CheckRow{std::move(name), "note", std::move(detail)});
}

}  // namespace

ValidateReport cmd_validate(const FlagDescriptor& d) {
    const int n = ambient_dim(d.ambient);
    const VarSet vars = projective_vars(n);
    ValidateReport rep;

    if (d.form.size() != static_cast<size_t>(n + 1) || d.field.size() != static_cast<size_t>(n + 1)) {
        add_row(rep, "coefficient count", false,
                "expected " + std::to_string(n + 1) + " form coefficients and field components on " + d.ambient);
        return rep;
    }
    const auto form = parse_entries(d.form, vars);
    const auto field = parse_entries(d.field, vars);

    const auto form_rep = check_homogeneity(form);
    add_row(rep, "form homogeneity", form_rep.ok(),
            form_rep.ok() ? "coefficients homogeneous of degree " + std::to_string(form_rep.degree)
                          : (form_rep.any_nonzero || !form_rep.all_homogeneous
                                 ? "offending coefficient: " + d.form[form_rep.offender]
                                 : "form is identically zero"));

    if (form_rep.ok()) {
        add_row(rep, "form degree declaration", d.d2 == form_rep.degree - 1,
                "d2 = " + std::to_string(d.d2) + ", coefficient degree = " + std::to_string(form_rep.degree) +
                    " (d2 = degree - 1 required)");
        const MultiPoly euler = euler_contraction(form);
        add_row(rep, "Euler contraction", euler.is_zero(),
                euler.is_zero() ? "sum z_i*A_i = 0" : "residual: " + to_string(euler));
    }

    const auto field_rep = check_homogeneity(field);
    add_row(rep, "field homogeneity", field_rep.ok(),
            field_rep.ok() ? "components homogeneous of degree " + std::to_string(field_rep.degree)
                           : (field_rep.any_nonzero || !field_rep.all_homogeneous
                                  ? "offending component: " + d.field[field_rep.offender]
                                  : "field is identically zero"));

    if (field_rep.ok() && d.d1 != field_rep.degree) {
        add_note(rep, "field degree declaration",
                 "declared d1 = " + std::to_string(d.d1) + " but components have degree " +
                     std::to_string(field_rep.degree) + "; the convention d1 = component degree is advisory");
    }

    if (form_rep.ok() && field_rep.ok()) {
        const MultiPoly omega_x = pairing(form, field);
        add_row(rep, "flag pairing", omega_x.is_zero(),
                omega_x.is_zero() ? "omega(X) = 0" : "omega(X) = " + to_string(omega_x));
    }

    for (const auto& c : d.components) {
        if (c.chart < 0 || c.chart > n) {
            add_row(rep, "component '" + c.name + "' chart", false, "chart U" + std::to_string(c.chart));
            continue;
        }
        if (!c.defining_equations.empty()) {
            int product = 1;
            bool all_ok = true;
            for (const auto& eq : c.defining_equations) {
                const MultiPoly p = parse_polynomial(eq, vars);
                int deg = -1;
                if (p.is_zero() || !is_homogeneous(p, &deg)) {
                    add_row(rep, "component '" + c.name + "' defining equations", false,
                            "equation is zero or inhomogeneous: " + eq);
                    all_ok = false;
                    break;
                }
                product *= deg;
            }
            if (all_ok)
                add_row(rep, "component '" + c.name + "' degree", product == c.degree,
                        "declared " + std::to_string(c.degree) + ", complete intersection gives " +
                            std::to_string(product));
        }
    }

    for (size_t k = 0; k < d.isolated_points.size(); ++k) {
        const auto& coords = d.isolated_points[k];
        bool ok = coords.size() == static_cast<size_t>(n + 1);
        bool nonzero = false;
        if (ok)
            for (const auto& c : coords)
                if (!parse_gauss(c).is_zero()) nonzero = true;
        add_row(rep, "isolated point #" + std::to_string(k), ok && nonzero,
                ok ? (nonzero ? "" : "all coordinates vanish") : "expected " + std::to_string(n + 1) + " coordinates");
    }

    return rep;
}

ResiduesReport cmd_residues(const FlagDescriptor& d, std::optional<ResidueSymbol> symbol_override) {
    const int n = ambient_dim(d.ambient);
    const VarSet vars = projective_vars(n);

    const ProjForm form(n, parse_entries(d.form, vars), d.d2);
    const ProjVectorField field(n, parse_entries(d.field, vars), d.d1);
    const ProjectiveFlag flag(field, form);

    ResiduesReport rep;
    rep.symbol = symbol_override ? *symbol_override : parse_symbol(d.symbol);
    rep.factor = c1_n12_coefficient(BigInt(d.d1), BigInt(d.d2));

    std::vector<CurveComponent> curve_components;
    for (const auto& c : d.components) {
        ComponentResult res;
        res.name = c.name;
        res.degree = c.degree;
        res.chart = c.chart;
        res.disc = make_disc(c);

        const AffineForm affine = dehomogenize_form(flag.form(), c.chart);
        res.restricted = restrict_form_to_disc(affine, res.disc);
        const VarSet& disc_vars = res.restricted.a.vars();
        res.disc_vars = {disc_vars.name(0), disc_vars.name(1)};
        res.dual = dual_planar_field(res.restricted);
        res.jac = jacobian(res.dual);

        PlanarSolve solved = singular_points(res.dual);
        res.singular_points = solved.points;
        res.unresolved = std::move(solved.unresolved);

        res.point = {parse_gauss(c.point[0]), parse_gauss(c.point[1])};
        res.residue = grothendieck_residue(rep.symbol, res.dual, res.point);

        CurveComponent cc;
        cc.name = c.name;
        cc.degree = c.degree;
        cc.disc = res.disc;
        cc.point = res.point;
        cc.residues[rep.symbol] = res.residue;
        curve_components.push_back(std::move(cc));

        rep.components.push_back(std::move(res));
    }

    for (size_t k = 0; k < d.isolated_points.size(); ++k) {
        IsolatedPoint p;
        p.name = "p" + std::to_string(k);
        for (const auto& coord : d.isolated_points[k]) p.coords.push_back(parse_gauss(coord));
        rep.isolated.push_back(std::move(p));
    }

    rep.sum = flag_residue_sum(BigInt(d.d1), BigInt(d.d2), curve_components, rep.isolated, rep.symbol);
    return rep;
}

RelationReport cmd_relation(const RelationDescriptor& d) {
    RelationReport rep;
    rep.input = d;

    FlagRelationInput in;
    in.d1 = d.d1;
    in.d2 = d.d2;
    in.l1 = d.l1;
    in.l2 = d.l2;
    in.degC = d.degC;
    in.chi = d.chi.value_or(0);

    rep.chi_independent = 2 * d.l2 == d.l1;
    if (rep.chi_independent) {
        rep.residual = blowup_relation_residual(in);  // chi coefficient vanishes
        if (d.chi) rep.notes.push_back("relation independent of chi (its coefficient vanishes, 2*l2 = l1)");
        rep.degree_shift = consecutive_degree_check(in);
        if (rep.degree_shift->degenerate_factor)
            rep.notes.push_back("degenerate case 2 - l2*(2+3*l2) = 0: the relation does not force d2 = d1+1");
        else if (rep.degree_shift->residual_zero)
            rep.notes.push_back(rep.degree_shift->degree_shift_holds
                                    ? "relation holds and confirms d2 = d1+1"
                                    : "relation holds but d2 != d1+1 (unexpected)");
    } else {
        if (d.chi) rep.residual = blowup_relation_residual(in);
        const BigInt factor = 2 - BigInt(d.l2) * (2 + 3 * BigInt(d.l2));
        if (factor != 0) {
            rep.chi_from_relation =
                euler_characteristic_from_relation(in.d1, in.d2, in.l1, in.l2, in.degC);
            rep.residual_at_solved_chi =
                blowup_relation_residual(in.d1, in.d2, in.l1, in.l2, in.degC, *rep.chi_from_relation);
        } else {
            rep.notes.push_back("chi cannot be solved: 2 - l2*(2+3*l2) = 0");
        }
    }
    return rep;
}

BlowupReport cmd_blowup_verify(bool permissive) {
    BlowupReport rep;
    rep.integrated = blowup_relation_integrated(permissive);
    rep.closed_form = blowup_relation_closed_form();
    rep.residual = rep.integrated - rep.closed_form;
    rep.c1_n2_printed = c1_n2_tilde_printed();
    rep.c1_n2_adjunction = c1_n2_tilde_adjunction();
    const NormalC2 c2 = c2_n2_tilde();
    rep.c2_n2_stated = c2.stated;
    rep.c2_n2_from_printed = c2.from_printed_c1;
    rep.c2_n2_from_adjunction = c2.from_adjunction_c1;
    rep.c1_variants_agree = rep.c1_n2_printed == rep.c1_n2_adjunction;
    rep.stated_matches_adjunction_route = c2.stated == c2.from_adjunction_c1;
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string form_str(const PlanarForm& f, const std::array<std::string, 2>& vars) {
    return "(" + to_string(f.a) + ") d" + vars[0] + " + (" + to_string(f.b) + ") d" + vars[1];
}

std::string field_str(const PlanarVF& v, const std::array<std::string, 2>& vars) {
    return "(" + to_string(v.p) + ") d/d" + vars[0] + " + (" + to_string(v.q) + ") d/d" + vars[1];
}

std::string jacobian_str(const Jacobian2& j) {
    return "[[" + to_string(j.m00) + ", " + to_string(j.m01) + "], [" + to_string(j.m10) + ", " +
           to_string(j.m11) + "]]";
}

}  // namespace

std::string render_pretty(const ValidateReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows) {
        os << row.status << "  " << row.name;
        if (!row.detail.empty()) os << ": " << row.detail;
        os << "\n";
    }
    os << (r.ok ? "descriptor valid\n" : "descriptor INVALID\n");
    return os.str();
}

std::string render_pretty(const ResiduesReport& r) {
    std::ostringstream os;
    os << "symbol " << to_string(r.symbol) << ", factor 1+d1-d2 = " << r.factor.str() << "\n";
    for (const auto& c : r.components) {
        os << "component '" << c.name << "' (deg " << c.degree << "), chart U" << c.chart << ", disc {"
           << c.disc.fixed_var << " = " << c.disc.value.str() << "}\n";
        os << "  restricted form  " << form_str(c.restricted, c.disc_vars) << "\n";
        os << "  dual field       " << field_str(c.dual, c.disc_vars) << "\n";
        os << "  jacobian         " << jacobian_str(c.jac) << "\n";
        os << "  singular points ";
        for (const auto& p : c.singular_points) os << " " << point_str(p);
        os << "\n";
        for (const auto& u : c.unresolved) {
            os << "  unresolved factor " << to_string(u.factor);
            if (u.at_w) os << " on " << c.disc_vars[1] << " = " << u.at_w->str();
            os << "\n";
        }
        os << "  point            " << point_str(c.point) << "\n";
        os << "  residue          " << c.residue.str() << "\n";
    }
    for (const auto& p : r.isolated) {
        os << "isolated point " << p.name << " [";
        for (size_t k = 0; k < p.coords.size(); ++k) os << (k ? " : " : "") << p.coords[k].str();
        os << "]: contributes 0\n";
    }
    os << "flag residue sum = " << r.sum.str() << "\n";
    return os.str();
}

std::string render_pretty(const RelationReport& r) {
    std::ostringstream os;
    os << "d1=" << r.input.d1 << " d2=" << r.input.d2 << " l1=" << r.input.l1 << " l2=" << r.input.l2
       << " degC=" << r.input.degC;
    if (r.input.chi) os << " chi=" << *r.input.chi;
    os << "\n";
    if (r.residual) os << "relation residual = " << r.residual->str() << "\n";
    if (r.degree_shift) {
        os << "2*l2 = l1: residual is chi-independent; d2 = d1+1 "
           << (r.degree_shift->degree_shift_holds ? "holds" : "fails") << ", residual "
           << (r.degree_shift->residual_zero ? "vanishes" : "is nonzero") << "\n";
    }
    if (r.chi_from_relation) {
        os << "chi solved from the relation = " << r.chi_from_relation->str() << "\n";
        os << "residual at that chi = " << r.residual_at_solved_chi->str() << "\n";
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string render_pretty(const BlowupReport& r) {
    std::ostringstream os;
    os << "integrated  c1(N12~)c2(N2~) = " << to_string(r.integrated) << "\n";
    os << "closed form                 = " << to_string(r.closed_form) << "\n";
    os << "residual                    = " << to_string(r.residual) << "\n";
    os << "intersection numbers:\n";
    for (const auto& [m, v] : integration_table())
        os << "  " << to_string(m) << " -> " << to_string(v) << "\n";
    os << "c1(N2~) printed    = " << to_string(r.c1_n2_printed) << "\n";
    os << "c1(N2~) adjunction = " << to_string(r.c1_n2_adjunction) << "\n";
    if (!r.c1_variants_agree) {
        os << "note: the printed c1(N2~) and the adjunction value differ in the E coefficient;"
           << " the printed form is used. The stated c2(N2~) "
           << (r.stated_matches_adjunction_route ? "matches" : "does not match")
           << " the adjunction route c2(TP3~) - c2(F2~) - c1(F2~)c1(N2~).\n";
    }
    return os.str();
}

namespace {

using nlohmann::json;

json points_json(const std::vector<std::array<GaussRational, 2>>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back({p[0].str(), p[1].str()});
    return out;
}

}  // namespace

json render_machine(const ValidateReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"name", row.name}, {"status", row.status}, {"detail", row.detail}});
    return json{{"command", "validate"}, {"ok", r.ok}, {"checks", rows}};
}

json render_machine(const ResiduesReport& r) {
    json comps = json::array();
    for (const auto& c : r.components) {
        json unresolved = json::array();
        for (const auto& u : c.unresolved) {
            json uj{{"factor", to_string(u.factor)}};
            if (u.at_w) uj["at"] = u.at_w->str();
            unresolved.push_back(std::move(uj));
        }
        json jacobian = json::array();
        jacobian.push_back(json::array({to_string(c.jac.m00), to_string(c.jac.m01)}));
        jacobian.push_back(json::array({to_string(c.jac.m10), to_string(c.jac.m11)}));
        comps.push_back({{"name", c.name},
                         {"degree", c.degree},
                         {"chart", c.chart},
                         {"disc", {{"fix", c.disc.fixed_var}, {"value", c.disc.value.str()}}},
                         {"variables", json::array({c.disc_vars[0], c.disc_vars[1]})},
                         {"restricted_form", json::array({to_string(c.restricted.a), to_string(c.restricted.b)})},
                         {"dual_field", json::array({to_string(c.dual.p), to_string(c.dual.q)})},
                         {"jacobian", jacobian},
                         {"singular_points", points_json(c.singular_points)},
                         {"unresolved", unresolved},
                         {"point", json::array({c.point[0].str(), c.point[1].str()})},
                         {"residue", c.residue.str()}});
    }
    json isolated = json::array();
    for (const auto& p : r.isolated) {
        json coords = json::array();
        for (const auto& c : p.coords) coords.push_back(c.str());
        isolated.push_back({{"name", p.name}, {"coords", coords}, {"residue", "0"}});
    }
    return json{{"command", "residues"}, {"symbol", to_string(r.symbol)}, {"factor", r.factor.str()},
                {"components", comps},  {"isolated", isolated},          {"sum", r.sum.str()}};
}

json render_machine(const RelationReport& r) {
    json j{{"command", "relation"}, {"input", serialize(r.input)}};
    if (r.residual) j["residual"] = r.residual->str();
    j["chi_independent"] = r.chi_independent;
    if (r.degree_shift) {
        j["degree_shift"] = {{"residual_zero", r.degree_shift->residual_zero},
                             {"d2_equals_d1_plus_1", r.degree_shift->degree_shift_holds},
                             {"degenerate_factor", r.degree_shift->degenerate_factor},
                             {"confirmed", r.degree_shift->confirmed()}};
    }
    if (r.chi_from_relation) {
        j["chi_from_relation"] = r.chi_from_relation->str();
        j["residual_at_solved_chi"] = r.residual_at_solved_chi->str();
    }
    j["notes"] = r.notes;
    return j;
}

json render_machine(const BlowupReport& r) {
    json table = json::object();
    for (const auto& [m, v] : integration_table()) table[to_string(m)] = to_string(v);
    return json{{"command", "blowup-verify"},
                {"integrated", to_string(r.integrated)},
                {"closed_form", to_string(r.closed_form)},
                {"residual", to_string(r.residual)},
                {"integration_table", table},
                {"c1_n2_printed", to_string(r.c1_n2_printed)},
                {"c1_n2_adjunction", to_string(r.c1_n2_adjunction)},
                {"c1_variants_agree", r.c1_variants_agree},
                {"c2_n2_stated", to_string(r.c2_n2_stated)},
                {"c2_n2_from_printed", to_string(r.c2_n2_from_printed)},
                {"c2_n2_from_adjunction", to_string(r.c2_n2_from_adjunction)},
                {"stated_matches_adjunction_route", r.stated_matches_adjunction_route}};
}

}  // namespace flagres
