#include "flagres/projective.hpp"

namespace flagres {

VarSet projective_vars(int n) {
    if (n != 2 && n != 3) throw Error("only P^2 and P^3 are supported");
    std::vector<std::string> names;
    for (int j = 0; j <= n; ++j) names.push_back("z" + std::to_string(j));
    return VarSet(std::move(names));
}

VarSet affine_chart_vars(int n) {
    if (n == 3) return VarSet({"x", "y", "z"});
    if (n == 2) return VarSet({"x", "y"});
    throw Error("only P^2 and P^3 are supported");
}

HomogeneityReport check_homogeneity(std::span<const MultiPoly> entries) {
    HomogeneityReport rep;
    for (size_t i = 0; i < entries.size(); ++i) {
        int d = -1;
        if (!is_homogeneous(entries[i], &d)) {
            rep.all_homogeneous = false;
            rep.offender = i;
            return rep;
        }
        if (entries[i].is_zero()) continue;
        if (!rep.any_nonzero) {
            rep.any_nonzero = true;
            rep.degree = d;
        } else if (d != rep.degree) {
            rep.equal_degree = false;
            rep.offender = i;
            return rep;
        }
    }
    return rep;
}

namespace {

void require_projective_entries(std::span<const MultiPoly> entries, int n, const char* what) {
    if (entries.size() != static_cast<size_t>(n + 1))
        throw InvalidDistribution(std::string(what) + ": expected " + std::to_string(n + 1) + " entries");
    const VarSet expected = projective_vars(n);
    for (const auto& e : entries)
        if (!(e.vars() == expected)) throw VarSetMismatch("entries must live over z0..z" + std::to_string(n));
}

}  // namespace

MultiPoly euler_contraction(std::span<const MultiPoly> coeffs) {
    if (coeffs.empty()) throw Error("empty coefficient list");
    const VarSet& vs = coeffs[0].vars();
    MultiPoly out(vs);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!(coeffs[i].vars() == vs)) throw VarSetMismatch();
        out += MultiPoly::variable(vs, i) * coeffs[i];
    }
    return out;
}

MultiPoly pairing(std::span<const MultiPoly> form_coeffs, std::span<const MultiPoly> field_components) {
    if (form_coeffs.size() != field_components.size()) throw AmbientMismatch();
    if (form_coeffs.empty()) throw Error("empty coefficient list");
    const VarSet& vs = form_coeffs[0].vars();
    MultiPoly out(vs);
    for (size_t i = 0; i < form_coeffs.size(); ++i) out += form_coeffs[i] * field_components[i];
    return out;
}

ProjForm::ProjForm(int ambient, std::vector<MultiPoly> coeffs, int declared_degree)
    : n_(ambient), d2_(declared_degree), coeffs_(std::move(coeffs)) {
    require_projective_entries(coeffs_, n_, "form");
    const auto rep = check_homogeneity(coeffs_);
    if (!rep.all_homogeneous)
        throw InvalidDistribution("form coefficient A" + std::to_string(rep.offender) + " is not homogeneous: " +
                                  to_string(coeffs_[rep.offender]));
    if (!rep.equal_degree)
        throw InvalidDistribution("form coefficient A" + std::to_string(rep.offender) +
                                  " has a different degree: " + to_string(coeffs_[rep.offender]));
    if (!rep.any_nonzero) throw InvalidDistribution("form is identically zero");
    k_ = rep.degree;
    const MultiPoly residual = euler_contraction(coeffs_);
    if (!residual.is_zero())
        throw InvalidDistribution("form does not descend to P^" + std::to_string(n_) +
                                  ": Euler contraction is " + to_string(residual));
    if (d2_ != k_ - 1)
        throw InvalidDistribution("declared degree " + std::to_string(d2_) + " does not match coefficient degree " +
                                  std::to_string(k_) + " (expected d2 = " + std::to_string(k_ - 1) + ")");
}

ProjVectorField::ProjVectorField(int ambient, std::vector<MultiPoly> components, int declared_degree)
    : n_(ambient), d1_(declared_degree), components_(std::move(components)) {
    require_projective_entries(components_, n_, "vector field");
    const auto rep = check_homogeneity(components_);
    if (!rep.all_homogeneous)
        throw InvalidDistribution("field component X" + std::to_string(rep.offender) + " is not homogeneous: " +
                                  to_string(components_[rep.offender]));
    if (!rep.equal_degree)
        throw InvalidDistribution("field component X" + std::to_string(rep.offender) +
                                  " has a different degree: " + to_string(components_[rep.offender]));
    if (!rep.any_nonzero) throw InvalidDistribution("vector field is identically zero");
    k_ = rep.degree;
}

ProjectiveFlag::ProjectiveFlag(ProjVectorField f1, ProjForm f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
    if (f1_.ambient() != f2_.ambient()) throw AmbientMismatch();
    const MultiPoly residual = pairing(f2_.coeffs(), f1_.components());
    if (!residual.is_zero())
        throw InvalidFlag("pair is not a flag: omega(X) = " + to_string(residual));
}

MultiPoly euler_contraction(const ProjForm& f) { return euler_contraction(f.coeffs()); }

MultiPoly flag_pairing(const ProjForm& form, const ProjVectorField& field) {
    if (form.ambient() != field.ambient()) throw AmbientMismatch();
    return pairing(form.coeffs(), field.components());
}

MultiPoly flag_pairing(const ProjectiveFlag& flag) {
    return pairing(flag.form().coeffs(), flag.field().components());
}

namespace {

// Images of z0..zn in the chart coordinates: z_chart -> 1, others -> the
// affine variable standing for them.
std::vector<MultiPoly> chart_images(int n, int chart, const VarSet& affine) {
    std::vector<MultiPoly> images;
    for (int j = 0; j <= n; ++j) {
        if (j == chart) {
            images.push_back(MultiPoly::constant(affine, GaussRational(1)));
        } else {
            const size_t pos = static_cast<size_t>(j < chart ? j : j - 1);
            images.push_back(MultiPoly::variable(affine, pos));
        }
    }
    return images;
}

void check_chart(int n, int chart) {
    if (chart < 0 || chart > n) throw BadChartIndex("chart U" + std::to_string(chart) + " does not exist on P^" + std::to_string(n));
}

}  // namespace

std::vector<MultiPoly> dehomogenize_form_parts(int n, std::span<const MultiPoly> coeffs, int chart) {
    check_chart(n, chart);
    require_projective_entries(coeffs, n, "form");
    const VarSet affine = affine_chart_vars(n);
    const auto images = chart_images(n, chart, affine);
    std::vector<MultiPoly> out;
    for (int j = 0; j <= n; ++j) {
        if (j == chart) continue;  // dz_chart pulls back to 0 on the chart section
        out.push_back(compose(coeffs[static_cast<size_t>(j)], affine, images));
    }
    return out;
}

std::vector<MultiPoly> dehomogenize_field_parts(int n, std::span<const MultiPoly> components, int chart) {
    check_chart(n, chart);
    require_projective_entries(components, n, "vector field");
    const VarSet affine = affine_chart_vars(n);
    const auto images = chart_images(n, chart, affine);
    const MultiPoly xc = compose(components[static_cast<size_t>(chart)], affine, images);
    std::vector<MultiPoly> out;
    for (int j = 0; j <= n; ++j) {
        if (j == chart) continue;
        const size_t pos = static_cast<size_t>(j < chart ? j : j - 1);
        out.push_back(compose(components[static_cast<size_t>(j)], affine, images) -
                      MultiPoly::variable(affine, pos) * xc);
    }
    return out;
}

AffineForm dehomogenize_form(const ProjForm& f, int chart) {
    return AffineForm{f.ambient(), chart, affine_chart_vars(f.ambient()),
                      dehomogenize_form_parts(f.ambient(), f.coeffs(), chart)};
}

AffineVectorField dehomogenize_field(const ProjVectorField& f, int chart) {
    return AffineVectorField{f.ambient(), chart, affine_chart_vars(f.ambient()),
                             dehomogenize_field_parts(f.ambient(), f.components(), chart)};
}

}  // namespace flagres
