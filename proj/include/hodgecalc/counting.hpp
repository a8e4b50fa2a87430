#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hodgecalc/graded_algebra.hpp"

namespace hodgecalc {

/// Multiset of positive generator weights.
class WeightSystem {
public:
    WeightSystem() = default;
    explicit WeightSystem(std::vector<int> weights);

    const std::vector<int>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }

private:
    std::vector<int> weights_;
};

/// Number of nonnegative solutions of sum w_i x_i = n.
std::uint64_t count_solutions(const WeightSystem& ws, int n);
/// count_solutions for every n in 0..max_degree.
DimensionTable count_table(const WeightSystem& ws, int max_degree);
/// All solutions of sum w_i x_i = n, lexicographically descending.
std::vector<std::vector<int>> enumerate_solutions(const WeightSystem& ws, int n);

/// Euclidean split of the weight `split_weight` by `multiplier` m:
/// left = {u} + common, right = common + {m u}; the map sends
/// (a, rest) to (rest, a div m) in component i = a mod m at n - i u.
struct SplitBijectionSpec {
    std::string name;
    int split_weight = 1;
    int multiplier = 2;
    WeightSystem common;

    WeightSystem left() const;
    WeightSystem right() const;
};

struct BijectionDegreeResult {
    int n = 0;
    std::uint64_t left_count = 0;
    std::uint64_t right_sum = 0;
    bool counts_match = false;
    bool map_well_defined = false;  ///< every image is a right-hand solution
    bool injective = false;
    bool surjective = false;
    bool roundtrip = false;
    bool ok() const { return counts_match && map_well_defined && injective && surjective && roundtrip; }
};

struct BijectionReport {
    std::string name;
    std::vector<BijectionDegreeResult> degrees;
    std::vector<int> failing;
    bool ok() const { return failing.empty(); }
};

/// Throws ContractError if u < 1 or m < 2.
BijectionReport verify_split_bijection(const SplitBijectionSpec& spec, int max_degree);

/// Explicit forward map on one left solution; returns (component, right solution).
std::pair<int, std::vector<int>> split_forward(const SplitBijectionSpec& spec, const std::vector<int>& left);
std::vector<int> split_inverse(const SplitBijectionSpec& spec, int component, const std::vector<int>& right);

enum class CompareMode { equal, dominates };

struct TableComparison {
    CompareMode mode = CompareMode::equal;
    std::vector<bool> holds;              ///< per-degree verdict
    std::map<int, std::int64_t> strict;   ///< dominates: degree -> a[d] - b[d] > 0
    std::vector<int> failing;
    bool ok() const { return failing.empty(); }
};

/// Throws ContractError when the tables cover different ranges.
TableComparison compare_tables(const DimensionTable& a, const DimensionTable& b, CompareMode mode);

}  // namespace hodgecalc
