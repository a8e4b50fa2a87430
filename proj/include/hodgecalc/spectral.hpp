#pragma once

// Dimension-level multiplicative model spectral sequences. Index (i, j):
// i is the row-ring degree (classifying-space side), j the column-ring
// degree (fibre side); d_r moves (i, j) to (i + r, j - r + 1).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgecalc/graded_algebra.hpp"

namespace hodgecalc {

class BigradedDimensionTable {
public:
    BigradedDimensionTable() = default;
    explicit BigradedDimensionTable(int bound) : bound_(bound) {}

    int bound() const noexcept { return bound_; }
    /// Zero outside the first quadrant and above the total-degree bound.
    std::uint64_t at(int i, int j) const;
    void set(int i, int j, std::uint64_t v);
    void add(int i, int j, std::uint64_t v) { set(i, j, at(i, j) + v); }
    /// Nonzero entries only.
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const noexcept { return entries_; }

    /// Sum over i + j = n.
    std::uint64_t antidiagonal(int n) const;
    DimensionTable totals() const;
    DimensionTable row(int j) const;     ///< entries (i, j) for i = 0..bound - j
    DimensionTable column(int i) const;  ///< entries (i, j) for j = 0..bound - i

    friend bool operator==(const BigradedDimensionTable&, const BigradedDimensionTable&) = default;

private:
    int bound_ = 0;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Graded basis of the surviving part of the 0-column, e.g. {0,2,4}.
struct SurvivorFactor {
    std::vector<int> column_basis_degrees;
};

/// Exterior class e in bidegree (0, m) with d_{m+1}(e y^k) = y^{k+1}, where y
/// is the named generator of the E2 row ring (degree m + 1).
struct TransgressiveFactor {
    std::string class_name;
    int class_degree = 0;
    std::string target;
};

/// Ring of permanent 0-row cycles.
struct PermanentRowFactor {
    AlgebraPresentation presentation;
};

/// Ideal imposed on the E2 row ring, with the extra E-infinity block it
/// leaves: survivors(j - column) * permanent(i - row).
struct QuotientTwist {
    std::string description;
    std::string relation;  ///< in the E2 row ring's generators
    int summand_row = 0;
    int summand_column = 0;
};

class ModelSpectralSequence {
public:
    /// Throws ContractError on malformed factors (survivors without a single
    /// 0, transgression targets of the wrong degree or clashing names).
    ModelSpectralSequence(std::string name, SurvivorFactor survivors, std::vector<TransgressiveFactor> transgressive,
                          PermanentRowFactor permanent, std::optional<QuotientTwist> twist = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    const SurvivorFactor& survivors() const noexcept { return survivors_; }
    const std::vector<TransgressiveFactor>& transgressive() const noexcept { return transgressive_; }
    const PermanentRowFactor& permanent() const noexcept { return permanent_; }
    const std::optional<QuotientTwist>& twist() const noexcept { return twist_; }

    /// E2 0-row ring: permanent generators plus transgression targets,
    /// modulo the permanent relations and the twist relation.
    const AlgebraPresentation& row_ring() const noexcept { return row_ring_; }
    /// Same model with the twist removed.
    ModelSpectralSequence untwisted() const;

    /// 0-column of E2: survivors times the exterior algebra on the
    /// transgressive classes.
    DimensionTable column_table(int max_degree) const;
    DimensionTable survivor_table(int max_degree) const;

private:
    std::string name_;
    SurvivorFactor survivors_;
    std::vector<TransgressiveFactor> transgressive_;
    PermanentRowFactor permanent_;
    std::optional<QuotientTwist> twist_;
    AlgebraPresentation row_ring_;
};

BigradedDimensionTable e2_table(const ModelSpectralSequence& model, int max_degree);
/// Closed rule: survivors (x) permanent row, plus the twist block.
BigradedDimensionTable einfty_rule(const ModelSpectralSequence& model, int max_degree);
/// Closed rule after asserting agreement with the oracle; throws
/// std::logic_error on any disagreement.
BigradedDimensionTable einfty_table(const ModelSpectralSequence& model, int max_degree);

struct OraclePages {
    /// pages[r] for r = 2 .. last page at which something changed, plus infinity.
    std::map<int, BigradedDimensionTable> pages;
    BigradedDimensionTable infinity;
    /// every differential component checked to move (i, j) by (r, 1 - r)
    bool bidegree_additive = true;
};

/// Explicit bookkeeping on labeled E2 bases; F_2 only (throws ContractError
/// otherwise).
OraclePages einfty_oracle_pages(const ModelSpectralSequence& model, int max_degree);
BigradedDimensionTable einfty_oracle(const ModelSpectralSequence& model, int max_degree);

struct DegreeCheck {
    int degree = 0;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    bool ok() const { return expected == actual; }
};

struct AbutmentReport {
    std::vector<DegreeCheck> degrees;
    std::vector<int> failing;
    bool ok() const { return failing.empty(); }
};

/// sum_{i+j=n} E_inf(i, j) against the abutment ring table.
AbutmentReport abutment_check(const ModelSpectralSequence& model, const AlgebraPresentation& abutment, int max_degree);
AbutmentReport abutment_check(const BigradedDimensionTable& einf, const DimensionTable& abutment);

struct Certification {
    bool certified = false;
    std::optional<int> failing_degree;
    std::string reason;
    /// certified 0-row dimensions (the model's E2 row) through `range`
    DimensionTable row_table;
    int range = 0;
};

/// Comparison-theorem certification at the level of dimensions: checks the
/// model's 0-column against `column`, E-infinity against `abutment`, then
/// compares `candidate_row` with the certified 0-row.
Certification zeeman_certify(const ModelSpectralSequence& model, const AlgebraPresentation& candidate_row,
                             const AlgebraPresentation& column, const AlgebraPresentation& abutment, int max_degree);

}  // namespace hodgecalc
