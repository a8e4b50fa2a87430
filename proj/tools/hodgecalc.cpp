#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hodgecalc/catalog.hpp"

namespace {

using namespace hodgecalc;

int emit(const Report& report, const std::string& format, const std::string& out) {
    const std::string text = format == "json" ? to_json(report) : to_table(report);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + out);
        f << text;
    }
    return exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge and de Rham cohomology rings of BG2 and BSpin(n) in characteristic 2"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List catalog scenarios");

    std::string scenario, format = "table", out;
    int max_degree = default_max_degree;
    unsigned prime = 2;

    auto* run = app.add_subcommand("run", "Run every check for a scenario");
    run->add_option("scenario", scenario, "Scenario name")->required();
    run->add_option("--max-degree", max_degree, "Total degree bound");
    run->add_option("--prime", prime, "Characteristic (2 only)");
    run->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    run->add_option("--out", out, "Write the report to FILE");

    auto* compare = app.add_subcommand("compare", "Compare de Rham and singular dimension tables");
    compare->add_option("scenario", scenario, "Scenario name")->required();
    compare->add_option("--max-degree", max_degree, "Total degree bound");
    compare->add_option("--prime", prime, "Characteristic (2 only)");
    compare->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    compare->add_option("--out", out, "Write the report to FILE");

    std::string datum;
    auto* rootdatum = app.add_subcommand("rootdatum", "Check a Levi root datum");
    rootdatum->add_option("which", datum, "g2-levi")->required()->check(CLI::IsMember({"g2-levi"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            for (const auto& s : list_scenarios()) std::cout << s.name << "\t" << s.description << "\n";
            return 0;
        }
        if (rootdatum->parsed()) {
            const bool ok = verify_g2_levi_root_datum();
            std::cout << "g2-levi root datum: " << (ok ? "isomorphism onto X2, chi1 - chi2 = (-2,1,1)" : "FAILED") << "\n";
            return ok ? 0 : 1;
        }
        if (run->parsed()) return emit(run_scenario(scenario, max_degree, prime), format, out);
        if (compare->parsed()) return emit(compare_dr_singular(scenario, max_degree, prime), format, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
