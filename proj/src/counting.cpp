#include "hodgecalc/counting.hpp"

#include <set>

namespace hodgecalc {

WeightSystem::WeightSystem(std::vector<int> weights) : weights_(std::move(weights)) {
    for (int w : weights_)
        if (w < 1) throw ContractError("weights must be positive");
}

DimensionTable count_table(const WeightSystem& ws, int max_degree) {
    if (max_degree < 0) throw ContractError("negative degree bound");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(max_degree) + 1, 0);
    c[0] = 1;
    for (int w : ws.weights())
        for (int i = w; i <= max_degree; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - w)];
    return DimensionTable{std::move(c)};
}

std::uint64_t count_solutions(const WeightSystem& ws, int n) {
    if (n < 0) return 0;
    return count_table(ws, n)[n];
}

namespace {

void enumerate_rec(const std::vector<int>& w, std::size_t i, int remaining, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (i == w.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int k = remaining / w[i]; k >= 0; --k) {
        cur[i] = k;
        enumerate_rec(w, i + 1, remaining - k * w[i], cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<std::vector<int>> enumerate_solutions(const WeightSystem& ws, int n) {
    std::vector<std::vector<int>> out;
    if (n < 0) return out;
    std::vector<int> cur(ws.size(), 0);
    enumerate_rec(ws.weights(), 0, n, cur, out);
    return out;
}

WeightSystem SplitBijectionSpec::left() const {
    std::vector<int> w{split_weight};
    w.insert(w.end(), common.weights().begin(), common.weights().end());
    return WeightSystem(std::move(w));
}

WeightSystem SplitBijectionSpec::right() const {
    std::vector<int> w = common.weights();
    w.push_back(multiplier * split_weight);
    return WeightSystem(std::move(w));
}

std::pair<int, std::vector<int>> split_forward(const SplitBijectionSpec& spec, const std::vector<int>& left) {
    const int a = left.at(0);
    const int i = a % spec.multiplier;
    std::vector<int> right(left.begin() + 1, left.end());
    right.push_back((a - i) / spec.multiplier);
    return {i, right};
}

std::vector<int> split_inverse(const SplitBijectionSpec& spec, int component, const std::vector<int>& right) {
    std::vector<int> left{right.back() * spec.multiplier + component};
    left.insert(left.end(), right.begin(), right.end() - 1);
    return left;
}

BijectionReport verify_split_bijection(const SplitBijectionSpec& spec, int max_degree) {
    if (spec.split_weight < 1) throw ContractError("split weight must be >= 1");
    if (spec.multiplier < 2) throw ContractError("multiplier must be >= 2");
    const auto left = spec.left();
    const auto right = spec.right();
    const auto right_counts = count_table(right, std::max(max_degree, 0));

    BijectionReport report{spec.name, {}, {}};
    for (int n = 0; n <= max_degree; ++n) {
        BijectionDegreeResult r;
        r.n = n;
        const auto sols = enumerate_solutions(left, n);
        r.left_count = sols.size();
        for (int i = 0; i < spec.multiplier; ++i) {
            const int m = n - i * spec.split_weight;
            if (m >= 0) r.right_sum += right_counts[m];
        }
        r.counts_match = r.left_count == r.right_sum;

        std::set<std::pair<int, std::vector<int>>> images;
        r.map_well_defined = true;
        r.roundtrip = true;
        for (const auto& s : sols) {
            auto img = split_forward(spec, s);
            int weight = 0;
            for (std::size_t k = 0; k < img.second.size(); ++k) {
                if (img.second[k] < 0) r.map_well_defined = false;
                weight += img.second[k] * right.weights()[k];
            }
            if (weight != n - img.first * spec.split_weight) r.map_well_defined = false;
            if (split_inverse(spec, img.first, img.second) != s) r.roundtrip = false;
            images.insert(std::move(img));
        }
        r.injective = images.size() == sols.size();
        // surjective: every right-hand solution in every component is hit
        r.surjective = true;
        for (int i = 0; i < spec.multiplier && r.surjective; ++i) {
            const int m = n - i * spec.split_weight;
            for (const auto& t : enumerate_solutions(right, m))
                if (!images.contains({i, t})) {
                    r.surjective = false;
                    break;
                }
        }
        if (!r.ok()) report.failing.push_back(n);
        report.degrees.push_back(r);
    }
    return report;
}

TableComparison compare_tables(const DimensionTable& a, const DimensionTable& b, CompareMode mode) {
    if (a.max_degree() != b.max_degree()) throw ContractError("compared tables cover different degree ranges");
    TableComparison out;
    out.mode = mode;
    for (int d = 0; d <= a.max_degree(); ++d) {
        const auto x = static_cast<std::int64_t>(a[d]);
        const auto y = static_cast<std::int64_t>(b[d]);
        const bool ok = mode == CompareMode::equal ? x == y : x >= y;
        out.holds.push_back(ok);
        if (!ok) out.failing.push_back(d);
        if (mode == CompareMode::dominates && x > y) out.strict[d] = x - y;
    }
    return out;
}

}  // namespace hodgecalc
