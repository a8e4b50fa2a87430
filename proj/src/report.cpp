#include "hodgecalc/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hodgecalc {

using ordered_json = nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::info: return "info";
    }
    return "fail";
}

void Report::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

void Report::info(std::string name, std::string detail) {
    checks.push_back({std::move(name), CheckStatus::info, std::move(detail)});
}

void Report::set_table(const std::string& key, DimensionTable t) {
    const auto& keys = report_table_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ContractError("unknown report table " + key);
    for (auto& [k, v] : tables)
        if (k == key) {
            v = std::move(t);
            return;
        }
    tables.emplace_back(key, std::move(t));
}

const DimensionTable* Report::table(const std::string& key) const {
    for (const auto& [k, v] : tables)
        if (k == key) return &v;
    return nullptr;
}

const CheckResult* Report::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool Report::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

ordered_json polynomial_value(const Polynomial& p) {
    std::vector<Term> terms = p.terms();
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponents < b.exponents; });
    ordered_json out = ordered_json::array();
    for (const auto& t : terms) {
        ordered_json exps = ordered_json::array();
        for (auto e : t.exponents) exps.push_back(static_cast<int>(e));
        out.push_back(ordered_json::array({exps, t.coefficient}));
    }
    return out;
}

}  // namespace

std::string polynomial_json(const Polynomial& p) { return polynomial_value(p).dump(); }

std::string to_json(const Report& r) {
    ordered_json j;
    j["scenario"] = r.scenario;
    j["prime"] = r.prime;
    j["max_degree"] = r.max_degree;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back(ordered_json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    ordered_json tables = ordered_json::object();
    for (const auto& key : report_table_keys()) {
        const auto* t = r.table(key);
        tables[key] = t ? ordered_json(t->entries) : ordered_json::array();
    }
    j["tables"] = tables;
    j["discovered_relations"] = ordered_json::array();
    for (const auto& d : r.discovered_relations)
        j["discovered_relations"].push_back(ordered_json{{"degree", d.degree}, {"polynomial", polynomial_value(d.polynomial)}});
    return j.dump(2) + "\n";
}

std::string join_table(const DimensionTable& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.entries.size(); ++i) os << (i ? " " : "") << t.entries[i];
    return os.str();
}

std::string to_table(const Report& r) {
    std::ostringstream os;
    os << "scenario " << r.scenario << "  prime " << r.prime << "  max degree " << r.max_degree << "\n\n";
    std::size_t width = 5;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    for (const auto& c : r.checks)
        os << "  [" << std::setw(4) << std::left << to_string(c.status) << "] " << std::setw(static_cast<int>(width))
           << c.name << "  " << c.detail << "\n";
    os << "\n";
    for (const auto& key : report_table_keys()) {
        const auto* t = r.table(key);
        if (!t) continue;
        os << "  " << std::setw(10) << std::left << key << " " << join_table(*t) << "\n";
    }
    if (!r.discovered_relations.empty()) {
        os << "\n";
        for (const auto& d : r.discovered_relations)
            os << "  relation (degree " << d.degree << "): " << d.polynomial.to_string() << " = 0\n";
    }
    os << "\n" << (r.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace hodgecalc
