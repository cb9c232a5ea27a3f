#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagres/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw flagres::Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

template <typename Report>
void emit(const Report& report, bool machine) {
    if (machine)
        std::cout << flagres::render_machine(report).dump(2) << "\n";
    else
        std::cout << flagres::render_pretty(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact flag-residue calculator for distributions on P^3"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "emit one structured JSON document instead of text");

    std::string validate_file;
    auto* validate = app.add_subcommand("validate", "check a flag descriptor");
    validate->add_option("file", validate_file, "descriptor file")->required();

    std::string residues_file;
    std::string symbol;
    auto* residues = app.add_subcommand("residues", "residues and the global flag sum");
    residues->add_option("file", residues_file, "descriptor file")->required();
    residues->add_option("--symbol", symbol, "residue symbol: c1^2 or c2");

    std::string relation_file;
    auto* relation = app.add_subcommand("relation", "blow-up relation on one parameter tuple");
    relation->add_option("file", relation_file, "relation descriptor file")->required();

    bool permissive = false;
    auto* blowup = app.add_subcommand("blowup-verify", "symbolic check of the blow-up relation");
    blowup->add_flag("--permissive", permissive, "map unlisted degree-3 monomials to zero");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            const auto report = flagres::cmd_validate(flagres::parse_flag_descriptor(read_file(validate_file)));
            emit(report, machine);
            return report.ok ? 0 : 1;
        }
        if (residues->parsed()) {
            std::optional<flagres::ResidueSymbol> sym;
            if (!symbol.empty()) sym = flagres::parse_symbol(symbol);
            emit(flagres::cmd_residues(flagres::parse_flag_descriptor(read_file(residues_file)), sym), machine);
            return 0;
        }
        if (relation->parsed()) {
            emit(flagres::cmd_relation(flagres::parse_relation_descriptor(read_file(relation_file))), machine);
            return 0;
        }
        if (blowup->parsed()) {
            const auto report = flagres::cmd_blowup_verify(permissive);
            emit(report, machine);
            return report.residual.is_zero() ? 0 : 1;
        }
    } catch (const flagres::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
