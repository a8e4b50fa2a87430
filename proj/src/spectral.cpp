#include "hodgecalc/spectral.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "hodgecalc/counting.hpp"

namespace hodgecalc {

std::uint64_t BigradedDimensionTable::at(int i, int j) const {
    if (i < 0 || j < 0 || i + j > bound_) return 0;
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BigradedDimensionTable::set(int i, int j, std::uint64_t v) {
    if (i < 0 || j < 0) throw ContractError("bigraded entry outside the first quadrant");
    if (i + j > bound_) throw ContractError("bigraded entry above the total-degree bound");
    if (v == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = v;
}

std::uint64_t BigradedDimensionTable::antidiagonal(int n) const {
    std::uint64_t s = 0;
    for (int i = 0; i <= n; ++i) s += at(i, n - i);
    return s;
}

DimensionTable BigradedDimensionTable::totals() const {
    DimensionTable t;
    for (int n = 0; n <= bound_; ++n) t.entries.push_back(antidiagonal(n));
    return t;
}

DimensionTable BigradedDimensionTable::row(int j) const {
    DimensionTable t;
    for (int i = 0; i + j <= bound_; ++i) t.entries.push_back(at(i, j));
    return t;
}

DimensionTable BigradedDimensionTable::column(int i) const {
    DimensionTable t;
    for (int j = 0; i + j <= bound_; ++j) t.entries.push_back(at(i, j));
    return t;
}

// ---------------------------------------------------------------------------

namespace {

AlgebraPresentation build_row_ring(const PermanentRowFactor& perm, const std::vector<TransgressiveFactor>& trans,
                                   const std::optional<QuotientTwist>& twist) {
    const auto& p = perm.presentation;
    if (!p.elimination().empty()) throw ContractError("permanent row ring must not carry an elimination");
    std::vector<Variable> vars = p.variables()->variables();
    for (const auto& t : trans) vars.push_back(Variable{t.target, t.class_degree + 1, std::nullopt});
    auto vs = make_variables(std::move(vars));
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < p.variables()->size(); ++i) images.push_back(Polynomial::variable(vs, p.field(), i));
    std::vector<Polynomial> rels;
    for (const auto& r : p.relations()) rels.push_back(images.empty() ? r : substitute(r, images));
    if (twist) rels.push_back(parse_polynomial(vs, p.field(), twist->relation));
    return AlgebraPresentation(vs, p.field(), std::move(rels));
}

}  // namespace

ModelSpectralSequence::ModelSpectralSequence(std::string name, SurvivorFactor survivors,
                                             std::vector<TransgressiveFactor> transgressive,
                                             PermanentRowFactor permanent, std::optional<QuotientTwist> twist)
    : name_(std::move(name)),
      survivors_(std::move(survivors)),
      transgressive_(std::move(transgressive)),
      permanent_(std::move(permanent)),
      twist_(std::move(twist)),
      row_ring_(build_row_ring(permanent_, transgressive_, twist_)) {
    const auto& s = survivors_.column_basis_degrees;
    if (std::count(s.begin(), s.end(), 0) != 1) throw ContractError("survivor factor must contain degree 0 exactly once");
    for (int d : s)
        if (d < 0) throw ContractError("negative survivor degree");
    for (const auto& t : transgressive_)
        if (t.class_degree < 1) throw ContractError("transgressive class of nonpositive degree");
    if (twist_ && (twist_->summand_row < 0 || twist_->summand_column < 0))
        throw ContractError("twist summand outside the first quadrant");
}

ModelSpectralSequence ModelSpectralSequence::untwisted() const {
    return ModelSpectralSequence(name_ + "-untwisted", survivors_, transgressive_, permanent_, std::nullopt);
}

DimensionTable ModelSpectralSequence::survivor_table(int max_degree) const {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d : survivors_.column_basis_degrees)
        if (d <= max_degree) ++t[static_cast<std::size_t>(d)];
    return DimensionTable{std::move(t)};
}

DimensionTable ModelSpectralSequence::column_table(int max_degree) const {
    auto t = survivor_table(max_degree).entries;
    for (const auto& tr : transgressive_) {
        // multiply by (1 + q^m)
        for (int d = max_degree; d >= tr.class_degree; --d)
            t[static_cast<std::size_t>(d)] += t[static_cast<std::size_t>(d - tr.class_degree)];
    }
    return DimensionTable{std::move(t)};
}

BigradedDimensionTable e2_table(const ModelSpectralSequence& model, int max_degree) {
    if (max_degree < 0) throw ContractError("negative degree bound");
    const auto row = dimension_table(model.row_ring(), max_degree);
    const auto col = model.column_table(max_degree);
    BigradedDimensionTable t(max_degree);
    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j) t.set(i, j, row[i] * col[j]);
    return t;
}

BigradedDimensionTable einfty_rule(const ModelSpectralSequence& model, int max_degree) {
    if (max_degree < 0) throw ContractError("negative degree bound");
    const auto perm = dimension_table(model.permanent().presentation, max_degree);
    const auto surv = model.survivor_table(max_degree);
    BigradedDimensionTable t(max_degree);
    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; i + j <= max_degree; ++j) {
            std::uint64_t v = perm[i] * surv[j];
            if (const auto& tw = model.twist()) {
                const int a = i - tw->summand_row, b = j - tw->summand_column;
                if (a >= 0 && b >= 0) v += perm[a] * surv[b];
            }
            t.set(i, j, v);
        }
    return t;
}

BigradedDimensionTable einfty_table(const ModelSpectralSequence& model, int max_degree) {
    auto rule = einfty_rule(model, max_degree);
    const auto oracle = einfty_oracle(model, max_degree);
    if (!(rule == oracle)) {
        std::ostringstream os;
        os << "E-infinity rule and oracle disagree for " << model.name();
        for (int n = 0; n <= max_degree; ++n)
            for (int i = 0; i <= n; ++i)
                if (rule.at(i, n - i) != oracle.at(i, n - i)) {
                    os << " at (" << i << "," << n - i << "): rule " << rule.at(i, n - i) << ", oracle "
                       << oracle.at(i, n - i);
                    throw std::logic_error(os.str());
                }
        throw std::logic_error(os.str());
    }
    return rule;
}

// ---------------------------------------------------------------------------
// Oracle: the Koszul-type part Lambda(e_1..e_T) (x) R, R the E2 row ring,
// carries the derivation D(e_k) = y_k. Filtering the total complex by row
// degree i gives the model's pages; survivors have zero differential and
// enter as a tensor factor on j.

namespace {

struct TotalDegree {
    // basis element: (mask, standard monomial index within slice i)
    struct Element {
        unsigned mask;
        int i;
        int j;
        std::size_t standard;
    };
    std::vector<Element> basis;
    std::map<std::tuple<unsigned, std::size_t>, std::size_t> index;  // (mask, standard) -> position
};

class KoszulComplex {
public:
    KoszulComplex(const ModelSpectralSequence& model, int top)
        : model_(model), ring_(model.row_ring(), top + 1), top_(top) {
        const auto& tr = model.transgressive();
        if (tr.size() > 16) throw ContractError("too many transgressive classes");
        for (const auto& t : tr) {
            const auto& vars = *model.row_ring().variables();
            target_index_.push_back(vars.index_of(t.target));
        }
        for (int n = 0; n <= top + 1; ++n) degrees_.push_back(build(n));
    }

    const TotalDegree& degree(int n) const { return degrees_.at(static_cast<std::size_t>(n)); }

    // D on C_n as bit rows over C_{n+1}; also checks bidegree moves.
    std::vector<BitVector> differential(int n, bool& additive) const {
        const auto& src = degree(n);
        const auto& dst = degree(n + 1);
        const std::size_t words = (dst.basis.size() + 63) / 64;
        std::vector<BitVector> rows;
        const auto& tr = model_.transgressive();
        for (const auto& el : src.basis) {
            BitVector row(words, 0);
            const auto& slice = ring_.slice(el.i);
            const auto std_exp = slice.monomials()[slice.standard()[el.standard]];
            for (std::size_t k = 0; k < tr.size(); ++k) {
                if (!(el.mask & (1u << k))) continue;
                const int r = tr[k].class_degree + 1;
                const int ti = el.i + r;
                if (ti > top_ + 1) continue;
                Exponents e = std_exp;
                ++e[target_index_[k]];
                const auto nf = ring_.slice(ti).normal_form_of_monomial(e);
                const unsigned tmask = el.mask & ~(1u << k);
                for (std::size_t s = 0; s < nf.size(); ++s) {
                    if (nf[s] % 2 == 0) continue;
                    const auto pos = dst.index.at({tmask, s});
                    const auto& t = dst.basis[pos];
                    if (t.i - el.i != r || t.j - el.j != 1 - r) additive = false;
                    row[pos / 64] ^= std::uint64_t{1} << (pos % 64);
                }
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

private:
    TotalDegree build(int n) const {
        TotalDegree td;
        const auto& tr = model_.transgressive();
        const unsigned masks = 1u << tr.size();
        for (unsigned mask = 0; mask < masks; ++mask) {
            int j = 0;
            for (std::size_t k = 0; k < tr.size(); ++k)
                if (mask & (1u << k)) j += tr[k].class_degree;
            const int i = n - j;
            if (i < 0) continue;
            for (std::size_t s = 0; s < ring_.slice(i).dimension(); ++s) {
                td.index[{mask, s}] = td.basis.size();
                td.basis.push_back({mask, i, j, s});
            }
        }
        return td;
    }

    const ModelSpectralSequence& model_;
    QuotientRing ring_;
    int top_;
    std::vector<std::size_t> target_index_;
    std::vector<TotalDegree> degrees_;
};

bool test_bit(const BitVector& b, std::size_t k) { return (b[k / 64] >> (k % 64)) & 1u; }

// Rank data for one total degree n: D_n : C_n -> C_{n+1} with source and
// target filtrations (row degree i).
class RankData {
public:
    RankData(const std::vector<BitVector>& rows, std::vector<int> src_filt, std::vector<int> dst_filt)
        : rows_(rows), src_(std::move(src_filt)), dst_(std::move(dst_filt)) {}

    // rank of pi_{<q} D restricted to F^p, for all q, computed lazily per p.
    std::uint64_t rank_below(int p, int q) {
        auto it = cache_.find(p);
        if (it == cache_.end()) it = cache_.emplace(p, profile(p)).first;
        const auto& prof = it->second;  // (level, rank with filt <= level), ascending
        std::uint64_t r = 0;
        for (const auto& [level, rank] : prof) {
            if (level >= q) break;
            r = rank;
        }
        return r;
    }

    std::uint64_t source_size(int p) const {
        return static_cast<std::uint64_t>(std::count_if(src_.begin(), src_.end(), [p](int f) { return f >= p; }));
    }

    static constexpr int infinity = 1 << 20;

private:
    std::vector<std::pair<int, std::uint64_t>> profile(int p) const {
        std::vector<std::size_t> sources;
        for (std::size_t s = 0; s < src_.size(); ++s)
            if (src_[s] >= p) sources.push_back(s);
        std::vector<std::size_t> order(dst_.size());
        for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dst_[a] < dst_[b]; });
        BitEchelon eb(sources.size());
        std::vector<std::pair<int, std::uint64_t>> prof;
        for (std::size_t k = 0; k < order.size(); ++k) {
            const auto t = order[k];
            BitVector col(eb.words(), 0);
            for (std::size_t s = 0; s < sources.size(); ++s)
                if (test_bit(rows_[sources[s]], t)) col[s / 64] |= std::uint64_t{1} << (s % 64);
            eb.insert(std::move(col));
            if (k + 1 == order.size() || dst_[order[k + 1]] != dst_[t]) prof.emplace_back(dst_[t], eb.rank());
        }
        return prof;
    }

    const std::vector<BitVector>& rows_;
    std::vector<int> src_;
    std::vector<int> dst_;
    std::map<int, std::vector<std::pair<int, std::uint64_t>>> cache_;
};

struct DegreeData {
    std::vector<BitVector> rows;
    std::unique_ptr<RankData> ranks;

    std::uint64_t z(int r, int p) {
        // F^p is everything for p < 0, but the target cutoff stays p + r
        const int pp = std::max(p, 0);
        const int q = r >= RankData::infinity ? RankData::infinity : p + r;
        return ranks->source_size(pp) - ranks->rank_below(pp, q);
    }
    std::uint64_t k(int p) { return z(RankData::infinity, p); }
    // dim D(Z_s^q)
    std::uint64_t image(int s, int q) { return z(s, q) - k(q); }
};

}  // namespace

OraclePages einfty_oracle_pages(const ModelSpectralSequence& model, int max_degree) {
    if (max_degree < 0) throw ContractError("negative degree bound");
    if (model.row_ring().field().characteristic() != 2) throw ContractError("the oracle is implemented over F_2 only");

    KoszulComplex cx(model, max_degree);
    OraclePages out;

    // data for n = -1 .. max_degree (n = -1 is the empty complex)
    std::map<int, DegreeData> data;
    for (int n = 0; n <= max_degree; ++n) {
        auto& dd = data[n];
        dd.rows = cx.differential(n, out.bidegree_additive);
        std::vector<int> src, dst;
        for (const auto& e : cx.degree(n).basis) src.push_back(e.i);
        for (const auto& e : cx.degree(n + 1).basis) dst.push_back(e.i);
        dd.ranks = std::make_unique<RankData>(dd.rows, std::move(src), std::move(dst));
    }
    {
        auto& empty = data[-1];
        empty.ranks = std::make_unique<RankData>(empty.rows, std::vector<int>{}, std::vector<int>{});
    }

    const auto surv = model.survivor_table(max_degree);
    auto tensor_survivors = [&](const BigradedDimensionTable& k) {
        BigradedDimensionTable t(max_degree);
        for (const auto& [ij, v] : k.entries())
            for (int a = 0; ij.first + ij.second + a <= max_degree; ++a)
                if (surv[a] != 0) t.add(ij.first, ij.second + a, v * surv[a]);
        return t;
    };

    auto page = [&](int r) {
        BigradedDimensionTable k(max_degree);
        for (int n = 0; n <= max_degree; ++n) {
            auto& cur = data[n];
            auto& prev = data[n - 1];
            for (int p = 0; p <= n; ++p) {
                const std::int64_t v = static_cast<std::int64_t>(cur.z(r, p)) -
                                       static_cast<std::int64_t>(cur.z(r - 1, p + 1)) -
                                       static_cast<std::int64_t>(prev.image(r - 1, p - r + 1)) +
                                       static_cast<std::int64_t>(prev.image(r, p - r + 1));
                if (v < 0) throw std::logic_error("negative page dimension in oracle");
                if (v > 0) k.set(p, n - p, static_cast<std::uint64_t>(v));
            }
        }
        return tensor_survivors(k);
    };

    BigradedDimensionTable last;
    for (int r = 2; r <= max_degree + 2; ++r) {
        auto t = page(r);
        if (r == 2 || !(t == last)) out.pages.emplace(r, t);
        last = std::move(t);
    }

    BigradedDimensionTable inf(max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        auto& cur = data[n];
        // F^p C_n intersected with the image of D_{n-1}
        auto& prev = data[n - 1];
        const std::uint64_t total_image = prev.ranks->rank_below(0, RankData::infinity);
        auto boundary = [&](int p) { return total_image - prev.ranks->rank_below(0, p); };
        for (int p = 0; p <= n; ++p) {
            const std::int64_t v = static_cast<std::int64_t>(cur.k(p)) - static_cast<std::int64_t>(cur.k(p + 1)) -
                                   (static_cast<std::int64_t>(boundary(p)) - static_cast<std::int64_t>(boundary(p + 1)));
            if (v < 0) throw std::logic_error("negative E-infinity dimension in oracle");
            if (v > 0) inf.set(p, n - p, static_cast<std::uint64_t>(v));
        }
    }
    out.infinity = tensor_survivors(inf);
    return out;
}

BigradedDimensionTable einfty_oracle(const ModelSpectralSequence& model, int max_degree) {
    return einfty_oracle_pages(model, max_degree).infinity;
}

AbutmentReport abutment_check(const BigradedDimensionTable& einf, const DimensionTable& abutment) {
    AbutmentReport rep;
    for (int n = 0; n <= einf.bound(); ++n) {
        DegreeCheck c{n, abutment[n], einf.antidiagonal(n)};
        if (!c.ok()) rep.failing.push_back(n);
        rep.degrees.push_back(c);
    }
    return rep;
}

AbutmentReport abutment_check(const ModelSpectralSequence& model, const AlgebraPresentation& abutment, int max_degree) {
    return abutment_check(einfty_table(model, max_degree), dimension_table(abutment, max_degree));
}

Certification zeeman_certify(const ModelSpectralSequence& model, const AlgebraPresentation& candidate_row,
                             const AlgebraPresentation& column, const AlgebraPresentation& abutment, int max_degree) {
    Certification c;
    c.range = max_degree;
    const auto model_col = model.column_table(max_degree);
    const auto col = dimension_table(column, max_degree);
    for (int j = 0; j <= max_degree; ++j)
        if (model_col[j] != col[j]) {
            c.failing_degree = j;
            c.reason = "0-column mismatch";
            return c;
        }
    const auto ab = abutment_check(model, abutment, max_degree);
    if (!ab.ok()) {
        c.failing_degree = ab.failing.front();
        c.reason = "E-infinity does not match the abutment";
        return c;
    }
    c.row_table = dimension_table(model.row_ring(), max_degree);
    const auto cand = dimension_table(candidate_row, max_degree);
    for (int i = 0; i <= max_degree; ++i)
        if (cand[i] != c.row_table[i]) {
            c.failing_degree = i;
            c.reason = "candidate 0-row differs from the certified row";
            return c;
        }
    c.certified = true;
    return c;
}

}  // namespace hodgecalc
