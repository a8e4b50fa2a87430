#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodgecalc/graded_algebra.hpp"

namespace hodgecalc {

enum class CheckStatus { pass, fail, info };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct DiscoveredRelation {
    int degree = 0;
    Polynomial polynomial;
};

/// Table keys in emission order.
inline const std::vector<std::string>& report_table_keys() {
    static const std::vector<std::string> keys{"column", "abutment", "invariants", "candidate", "singular", "de_rham"};
    return keys;
}

struct Report {
    std::string scenario;
    unsigned prime = 2;
    int max_degree = 0;
    std::vector<CheckResult> checks;
    /// keyed by report_table_keys(); absent tables are emitted empty
    std::vector<std::pair<std::string, DimensionTable>> tables;
    std::vector<DiscoveredRelation> discovered_relations;

    void add(std::string name, bool ok, std::string detail);
    void info(std::string name, std::string detail);
    void set_table(const std::string& key, DimensionTable t);
    const DimensionTable* table(const std::string& key) const;
    const CheckResult* check(const std::string& name) const;
    /// No check has status fail.
    bool passed() const;
};

/// Deterministic JSON text (two-space indent, trailing newline).
std::string to_json(const Report& r);
/// Human-readable summary.
std::string to_table(const Report& r);

/// Polynomial as the list of [exponent-vector, coefficient] pairs sorted by
/// exponent vector, serialized compactly.
std::string polynomial_json(const Polynomial& p);

std::string join_table(const DimensionTable& t);

}  // namespace hodgecalc
