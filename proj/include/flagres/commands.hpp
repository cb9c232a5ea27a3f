#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagres/chern_ring.hpp"
#include "flagres/descriptor.hpp"
#include "flagres/flag_relations.hpp"

namespace flagres {

/// One validation check; status is "pass", "fail" or "note" (advisory).
struct CheckRow {
    std::string name;
    std::string status;
    std::string detail;
};

struct ValidateReport {
    std::vector<CheckRow> rows;
    bool ok = true;  // no "fail" rows
};

/// Per-component trace of the residue pipeline.
struct ComponentResult {
    std::string name;
    int degree = 1;
    int chart = 0;
    Disc disc;
    std::array<std::string, 2> disc_vars;  // surviving chart coordinates
    PlanarForm restricted;
    PlanarVF dual;
    Jacobian2 jac;
    std::vector<std::array<GaussRational, 2>> singular_points;
    std::vector<UnresolvedLocus> unresolved;
    std::array<GaussRational, 2> point;
    GaussRational residue;
};

struct ResiduesReport {
    ResidueSymbol symbol = ResidueSymbol::c1_squared;
    BigInt factor;  // 1 + d1 - d2
    std::vector<ComponentResult> components;
    std::vector<IsolatedPoint> isolated;
    GaussRational sum;
};

struct RelationReport {
    RelationDescriptor input;
    std::optional<BigInt> residual;                  // with the given (or any) chi
    bool chi_independent = false;                    // 2 l2 == l1
    std::optional<DegreeShiftCheck> degree_shift;    // when 2 l2 == l1
    std::optional<Rational> chi_from_relation;       // when 2 l2 != l1 and the factor is nonzero
    std::optional<Rational> residual_at_solved_chi;  // round trip with that chi
    std::vector<std::string> notes;
};

struct BlowupReport {
    MultiPoly integrated;
    MultiPoly closed_form;
    MultiPoly residual;
    ChernExpr c1_n2_printed;
    ChernExpr c1_n2_adjunction;
    ChernExpr c2_n2_stated;
    ChernExpr c2_n2_from_printed;
    ChernExpr c2_n2_from_adjunction;
    bool c1_variants_agree = false;
    bool stated_matches_adjunction_route = false;
};

/// Euler contraction, flag pairing, homogeneity and degree bookkeeping,
/// reported row by row. Polynomial strings that fail to parse throw
/// ParseError.
ValidateReport cmd_validate(const FlagDescriptor& d);

/// Full residue pipeline: per component the restricted form, dual field,
/// Jacobian, solved singular points and the Grothendieck residue, then the
/// global flag-residue sum.
ResiduesReport cmd_residues(const FlagDescriptor& d,
                            std::optional<ResidueSymbol> symbol_override = std::nullopt);

/// Blow-up relation arithmetic on one parameter tuple.
RelationReport cmd_relation(const RelationDescriptor& d);

/// Symbolic verification of the blow-up relation in the intersection ring.
BlowupReport cmd_blowup_verify(bool permissive = false);

std::string render_pretty(const ValidateReport& r);
std::string render_pretty(const ResiduesReport& r);
std::string render_pretty(const RelationReport& r);
std::string render_pretty(const BlowupReport& r);

nlohmann::json render_machine(const ValidateReport& r);
nlohmann::json render_machine(const ResiduesReport& r);
nlohmann::json render_machine(const RelationReport& r);
nlohmann::json render_machine(const BlowupReport& r);

}  // namespace flagres
