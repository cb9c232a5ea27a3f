#pragma once

#include <span>
#include <string>
#include <vector>

#include "flagres/multipoly.hpp"

namespace flagres {

/// Homogeneous coordinates z0..zn of P^n.
VarSet projective_vars(int n);

/// Affine coordinates of a chart U_i: x,y,z on P^3 (x,y on P^2), where the
/// j-th name stands for the j-th remaining homogeneous coordinate in
/// ascending index order (U0: x,y,z = z1/z0, z2/z0, z3/z0; U3: x,y,z =
/// z0/z3, z1/z3, z2/z3).
VarSet affine_chart_vars(int n);

/// Homogeneity / shared-degree report for a coefficient or component list.
/// Zero entries are compatible with any degree.
struct HomogeneityReport {
    bool all_homogeneous = true;
    bool equal_degree = true;
    bool any_nonzero = false;
    int degree = -1;       // shared degree of the nonzero entries when ok
    size_t offender = 0;   // first failing entry
    bool ok() const { return all_homogeneous && equal_degree && any_nonzero; }
};
HomogeneityReport check_homogeneity(std::span<const MultiPoly> entries);

/// Sum z_i * A_i; the zero polynomial exactly when the form descends to P^n.
MultiPoly euler_contraction(std::span<const MultiPoly> coeffs);

/// Sum A_i * X_i; the zero polynomial exactly when (X, omega) is a flag.
MultiPoly pairing(std::span<const MultiPoly> form_coeffs, std::span<const MultiPoly> field_components);

/// Codimension-one distribution on P^n given by a homogeneous 1-form
/// sum A_i dz_i with Euler contraction zero. degree() is the distribution
/// degree d2 = k - 1 where k is the coefficient degree.
class ProjForm {
public:
    ProjForm(int ambient, std::vector<MultiPoly> coeffs, int declared_degree);

    int ambient() const { return n_; }
    int coeff_degree() const { return k_; }
    int degree() const { return d2_; }
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

private:
    int n_;
    int k_;
    int d2_;
    std::vector<MultiPoly> coeffs_;
};

/// One-dimensional distribution on P^n given by a homogeneous vector field.
/// The declared degree is kept as given: the convention d1 = component
/// degree is advisory only (degree_convention_mismatch()).
class ProjVectorField {
public:
    ProjVectorField(int ambient, std::vector<MultiPoly> components, int declared_degree);

    int ambient() const { return n_; }
    int component_degree() const { return k_; }
    int degree() const { return d1_; }
    bool degree_convention_mismatch() const { return d1_ != k_; }
    const std::vector<MultiPoly>& components() const { return components_; }

private:
    int n_;
    int k_;
    int d1_;
    std::vector<MultiPoly> components_;
};

/// Validated 2-flag: omega(X) = 0 identically.
class ProjectiveFlag {
public:
    ProjectiveFlag(ProjVectorField f1, ProjForm f2);

    const ProjVectorField& field() const { return f1_; }
    const ProjForm& form() const { return f2_; }
    int ambient() const { return f2_.ambient(); }

private:
    ProjVectorField f1_;
    ProjForm f2_;
};

MultiPoly euler_contraction(const ProjForm& f);
MultiPoly flag_pairing(const ProjForm& form, const ProjVectorField& field);
MultiPoly flag_pairing(const ProjectiveFlag& flag);

/// Restriction of a form/field to an affine chart.
struct AffineForm {
    int ambient;
    int chart;
    VarSet vars;
    std::vector<MultiPoly> coeffs;  // one per affine variable, in vars order
};

struct AffineVectorField {
    int ambient;
    int chart;
    VarSet vars;
    std::vector<MultiPoly> components;
};

/// Substitute z_chart := 1 and rename the surviving coordinates; the
/// d(z_chart) term is redundant by the Euler relation and is dropped.
AffineForm dehomogenize_form(const ProjForm& f, int chart);
/// Affine components X_j - x_j * X_chart at z_chart = 1.
AffineVectorField dehomogenize_field(const ProjVectorField& f, int chart);

/// Same operations on raw coefficient lists (no validity requirements).
std::vector<MultiPoly> dehomogenize_form_parts(int n, std::span<const MultiPoly> coeffs, int chart);
std::vector<MultiPoly> dehomogenize_field_parts(int n, std::span<const MultiPoly> components, int chart);

}  // namespace flagres
