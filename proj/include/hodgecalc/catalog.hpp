#pragma once

// Scenario catalog (G2, Spin(7)..Spin(11), an SO(n) baseline) and the
// end-to-end verification pipeline.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hodgecalc/counting.hpp"
#include "hodgecalc/invariants.hpp"
#include "hodgecalc/report.hpp"
#include "hodgecalc/restriction.hpp"
#include "hodgecalc/spectral.hpp"

namespace hodgecalc {

/// Bad scenario name or option; the CLI maps it to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Scenario {
    std::string name;
    std::string description;
    AlgebraPresentation column_ring;
    AlgebraPresentation abutment_ring;
    InvariantPresentationClaim invariants_claim;
    ModelSpectralSequence model;
    AlgebraPresentation candidate_ring;
    AlgebraPresentation singular_ring;
    std::vector<SplitBijectionSpec> split_bijections;
    /// Hodge-to-de Rham degeneration taken from the literature.
    bool hodge_degeneration_assumed = true;
    std::string degeneration_citation;
    /// Spin(n-1) scenario whose candidate ring must agree below `agreement_bound`.
    std::optional<std::string> predecessor;
    int agreement_bound = 0;
};

struct ScenarioInfo {
    std::string name;
    std::string description;
};

std::vector<ScenarioInfo> list_scenarios();
/// Throws UsageError for an unknown name or for "so-baseline".
Scenario make_scenario(const std::string& name);

constexpr int default_max_degree = 40;
constexpr int min_max_degree = 17;

/// Throws UsageError for an unknown scenario, N < 17, or p != 2.
Report run_scenario(const std::string& name, int max_degree = default_max_degree, unsigned prime = 2);
Report compare_dr_singular(const std::string& name, int max_degree = default_max_degree, unsigned prime = 2);

struct RootDatumMap {
    std::array<int, 3> chi1;
    std::array<int, 3> chi2;
    std::array<int, 3> alpha;
};

RootDatumMap g2_levi_root_datum();
/// Images lie in {a + b + c = 0}, form a basis of that lattice, and
/// chi1 - chi2 hits alpha.
bool verify_root_datum(const RootDatumMap& m);
bool verify_g2_levi_root_datum();

/// Exit status for a report: 0 if every check passed, else 1.
int exit_code(const Report& r);

}  // namespace hodgecalc
