#include "hodgecalc/graded_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace hodgecalc {

std::uint64_t DimensionTable::total() const { return std::accumulate(entries.begin(), entries.end(), std::uint64_t{0}); }

DimensionTable DimensionTable::truncated(int n) const {
    if (n > max_degree()) throw ContractError("cannot truncate a table beyond its range");
    return DimensionTable{{entries.begin(), entries.begin() + n + 1}};
}

AlgebraPresentation::AlgebraPresentation(VariableSetPtr vars, PrimeField field, std::vector<Polynomial> relations,
                                         LinearElimination elimination)
    : vars_(std::move(vars)), field_(field), elimination_(std::move(elimination)) {
    if (!elimination_.empty() && !same_variables(elimination_.variables(), vars_))
        throw StructuralError("elimination over a different variable set");
    for (auto& r : relations) {
        if (!same_variables(r.variables(), vars_)) throw StructuralError("relation over a different variable set");
        if (r.is_zero()) throw ContractError("zero relation");
        if (!r.is_homogeneous()) throw ContractError("inhomogeneous relation " + r.to_string());
        if (*r.degree() == 0) throw ContractError("degree-0 relation " + r.to_string());
        auto reduced = elimination_.apply(r);
        if (!reduced.is_zero()) relations_.push_back(std::move(reduced));
    }
}

AlgebraPresentation AlgebraPresentation::free(const std::vector<std::string>& names, const std::vector<int>& degrees,
                                              PrimeField field) {
    return AlgebraPresentation(make_variables(names, degrees), field);
}

AlgebraPresentation AlgebraPresentation::parse(const std::vector<std::string>& names, const std::vector<int>& degrees,
                                               const std::vector<std::string>& relations, PrimeField field) {
    auto vars = make_variables(names, degrees);
    std::vector<Polynomial> rels;
    for (const auto& r : relations) rels.push_back(parse_polynomial(vars, field, r));
    return AlgebraPresentation(vars, field, std::move(rels));
}

Polynomial AlgebraPresentation::canonical(const Polynomial& p) const {
    if (!same_variables(p.variables(), vars_)) throw StructuralError("polynomial over a different variable set");
    return elimination_.apply(p);
}

std::vector<bool> AlgebraPresentation::free_mask() const {
    std::vector<bool> mask(vars_->size(), true);
    for (const auto& [idx, unused] : elimination_.substitutions()) mask[idx] = false;
    return mask;
}

std::vector<int> AlgebraPresentation::generator_degrees() const {
    std::vector<int> out;
    const auto mask = free_mask();
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if (mask[i]) out.push_back(vars_->degree(i));
    return out;
}

namespace {

void enumerate(const VariableSet& vars, const std::vector<bool>& allowed, std::size_t i, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
    if (i == vars.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (!allowed[i]) {
        enumerate(vars, allowed, i + 1, remaining, cur, out);
        return;
    }
    const int w = vars.degree(i);
    for (int k = remaining / w; k >= 0; --k) {
        cur[i] = static_cast<std::uint16_t>(k);
        enumerate(vars, allowed, i + 1, remaining - k * w, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(const VariableSet& vars, int d, const std::vector<bool>& allowed) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    Exponents cur(vars.size(), 0);
    // descending exponents on earlier variables first = descending lex
    enumerate(vars, allowed, 0, d, cur, out);
    return out;
}

DegreeSlice::DegreeSlice(const AlgebraPresentation& pres, int degree)
    : degree_(degree),
      field_(pres.field()),
      monomials_(monomials_of_degree(*pres.variables(), degree, pres.free_mask())),
      ideal_(pres.field(), monomials_.size()) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
    const auto mask = pres.free_mask();
    for (const auto& r : pres.relations()) {
        const int rd = *r.degree();
        if (rd > degree) continue;
        for (const auto& m : monomials_of_degree(*pres.variables(), degree - rd, mask)) {
            DenseVector v(monomials_.size(), 0);
            for (const auto& t : r.terms()) {
                Exponents e(m.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(m[k] + t.exponents[k]);
                const auto idx = index_.at(e);
                v[idx] = field_.add(v[idx], t.coefficient);
            }
            ideal_.insert(std::move(v));
        }
    }
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        if (!ideal_.is_pivot(i)) standard_.push_back(i);
}

std::vector<Exponents> DegreeSlice::basis() const {
    std::vector<Exponents> out;
    for (auto i : standard_) out.push_back(monomials_[i]);
    return out;
}

std::optional<std::size_t> DegreeSlice::monomial_index(const Exponents& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

DenseVector DegreeSlice::coordinates(const Polynomial& p) const {
    DenseVector v(monomials_.size(), 0);
    for (const auto& t : p.terms()) {
        auto idx = monomial_index(t.exponents);
        if (!idx) throw ContractError("term of " + p.to_string() + " is not a free degree-" + std::to_string(degree_) +
                                      " monomial");
        v[*idx] = field_.add(v[*idx], t.coefficient);
    }
    return v;
}

DenseVector DegreeSlice::standard_part(const DenseVector& full) const {
    const auto reduced = ideal_.reduce(full);
    DenseVector out(standard_.size());
    for (std::size_t k = 0; k < standard_.size(); ++k) out[k] = reduced[standard_[k]];
    return out;
}

DenseVector DegreeSlice::normal_form(const Polynomial& p) const { return standard_part(coordinates(p)); }

DenseVector DegreeSlice::normal_form_of_monomial(const Exponents& e) const {
    DenseVector v(monomials_.size(), 0);
    auto idx = monomial_index(e);
    if (!idx) throw ContractError("monomial is not a free monomial of this degree");
    v[*idx] = 1;
    return standard_part(v);
}

bool DegreeSlice::is_zero(const Polynomial& p) const { return ideal_.contains(coordinates(p)); }

QuotientRing::QuotientRing(AlgebraPresentation pres, int max_degree) : pres_(std::move(pres)) {
    if (max_degree < 0) throw ContractError("negative degree bound");
    slices_.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) slices_.emplace_back(pres_, d);
}

const DegreeSlice& QuotientRing::slice(int d) const {
    if (d < 0 || d > max_degree())
        throw ContractError("degree " + std::to_string(d) + " outside precomputed range 0.." +
                            std::to_string(max_degree()));
    return slices_[static_cast<std::size_t>(d)];
}

DimensionTable QuotientRing::table() const {
    DimensionTable t;
    for (const auto& s : slices_) t.entries.push_back(s.dimension());
    return t;
}

Polynomial QuotientRing::from_coordinates(int degree, const DenseVector& coords) const {
    const auto& s = slice(degree);
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0) terms.push_back({s.monomials()[s.standard()[k]], coords[k]});
    return Polynomial::from_terms(pres_.variables(), pres_.field(), std::move(terms));
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
    const auto q = pres_.canonical(p);
    if (q.is_zero()) return q;
    if (!q.is_homogeneous()) throw ContractError("normal form needs a homogeneous polynomial");
    const int d = *q.degree();
    return from_coordinates(d, slice(d).normal_form(q));
}

bool QuotientRing::is_zero(const Polynomial& p) const {
    const auto q = pres_.canonical(p);
    if (q.is_zero()) return true;
    if (!q.is_homogeneous()) throw ContractError("zero test needs a homogeneous polynomial");
    return slice(*q.degree()).is_zero(q);
}

std::vector<Exponents> graded_piece_basis(const AlgebraPresentation& pres, int d) {
    if (d < 0) throw ContractError("negative degree");
    return DegreeSlice(pres, d).basis();
}

DimensionTable dimension_table(const AlgebraPresentation& pres, int max_degree) {
    if (max_degree < 0) throw ContractError("negative degree bound");
    DimensionTable t;
    for (int d = 0; d <= max_degree; ++d) t.entries.push_back(DegreeSlice(pres, d).dimension());
    return t;
}

bool is_zero_in_quotient(const Polynomial& p, const AlgebraPresentation& pres) {
    if (!p.is_homogeneous()) throw ContractError("is_zero_in_quotient requires a homogeneous polynomial");
    const auto q = pres.canonical(p);
    if (q.is_zero()) return true;
    return DegreeSlice(pres, *q.degree()).is_zero(q);
}

AlgebraPresentation permute_variables(const AlgebraPresentation& pres, const std::vector<std::size_t>& order) {
    const auto& old_vars = *pres.variables();
    if (order.size() != old_vars.size()) throw StructuralError("permutation length mismatch");
    std::vector<bool> seen(order.size(), false);
    std::vector<Variable> vars;
    for (auto o : order) {
        if (o >= order.size() || seen[o]) throw StructuralError("not a permutation");
        seen[o] = true;
        vars.push_back(old_vars[o]);
    }
    auto new_vars = make_variables(std::move(vars));
    std::vector<Polynomial> images;
    images.reserve(order.size());
    for (std::size_t old = 0; old < order.size(); ++old) {
        const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), old) - order.begin());
        images.push_back(Polynomial::variable(new_vars, pres.field(), pos));
    }
    auto move_poly = [&](const Polynomial& p) { return substitute(p, images); };
    std::vector<Polynomial> rels;
    for (const auto& r : pres.relations()) rels.push_back(move_poly(r));
    std::map<std::size_t, Polynomial> subs;
    for (const auto& [idx, target] : pres.elimination().substitutions()) {
        const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), idx) - order.begin());
        subs.emplace(pos, move_poly(target));
    }
    LinearElimination elim;
    if (!subs.empty()) elim = LinearElimination(new_vars, pres.field(), std::move(subs));
    return AlgebraPresentation(new_vars, pres.field(), std::move(rels), std::move(elim));
}

// ---------------------------------------------------------------------------

RingMap::RingMap(AlgebraPresentation source, std::shared_ptr<const QuotientRing> target,
                 const std::map<std::string, Polynomial>& images)
    : source_(std::move(source)), target_(std::move(target)), images_(source_.variables()->size()) {
    if (!target_) throw StructuralError("ring map needs a target ring");
    const auto& tp = target_->presentation();
    for (const auto& [name, img] : images) {
        const auto idx = source_.variables()->index_of(name);
        if (!same_variables(img.variables(), tp.variables()))
            throw StructuralError("image of " + name + " is not in the target ring");
        auto canon = tp.canonical(img);
        if (!canon.is_homogeneous()) throw ContractError("image of " + name + " is inhomogeneous");
        if (!canon.is_zero() && *canon.degree() != source_.variables()->degree(idx))
            throw ContractError("image of " + name + " has the wrong degree");
        images_[idx] = std::move(canon);
    }
}

Polynomial RingMap::apply(const Polynomial& p) const {
    const auto q = source_.canonical(p);
    const auto& tp = target_->presentation();
    std::vector<Polynomial> images;
    images.reserve(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i]) {
            images.push_back(*images_[i]);
        } else if (q.involves(i)) {
            throw StructuralError("generator " + (*source_.variables())[i].name + " is unmapped");
        } else {
            images.push_back(Polynomial(tp.variables(), tp.field()));
        }
    }
    return target_->reduce(substitute(q, images));
}

bool RingMap::well_defined() const {
    for (const auto& r : source_.relations()) {
        if (*r.degree() > target_->max_degree()) continue;
        if (!apply(r).is_zero()) return false;
    }
    return true;
}

Polynomial apply_ring_map(const RingMap& f, const Polynomial& p) { return f.apply(p); }

std::vector<DenseVector> relation_kernel(const std::vector<Polynomial>& candidates, const RingMap& f) {
    if (candidates.empty()) return {};
    std::optional<int> degree;
    for (const auto& c : candidates) {
        if (c.is_zero() || !c.is_homogeneous()) throw ContractError("relation candidates must be homogeneous and nonzero");
        if (degree && *degree != *c.degree()) throw ContractError("relation candidates have mixed degrees");
        degree = *c.degree();
    }
    const auto& slice = f.target().slice(*degree);
    std::vector<DenseVector> columns;
    for (const auto& c : candidates) {
        const auto img = f.apply(c);
        columns.push_back(img.is_zero() ? DenseVector(slice.dimension(), 0) : slice.normal_form(img));
    }
    return kernel_basis(f.target().presentation().field(), columns, slice.dimension());
}

}  // namespace hodgecalc
