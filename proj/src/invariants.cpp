#include "hodgecalc/invariants.hpp"

#include <algorithm>
#include <set>

#include "hodgecalc/counting.hpp"

namespace hodgecalc {

namespace {

std::vector<Polynomial> variable_images(const PermutationAction& a, const Permutation& g) {
    std::vector<Polynomial> images;
    images.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) images.push_back(Polynomial::variable(a.variables(), a.field(), g[i]));
    return images;
}

struct MonomialIndex {
    std::vector<Exponents> monomials;
    std::map<Exponents, std::size_t> index;

    MonomialIndex(const VariableSet& vars, int d, const std::vector<bool>& allowed)
        : monomials(monomials_of_degree(vars, d, allowed)) {
        for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
    }

    void accumulate(const Polynomial& p, DenseVector& out, std::size_t offset, const PrimeField& f) const {
        for (const auto& t : p.terms()) {
            auto it = index.find(t.exponents);
            if (it == index.end()) throw ContractError("polynomial leaves the monomial basis: " + p.to_string());
            auto& slot = out[offset + it->second];
            slot = f.add(slot, t.coefficient);
        }
    }
};

// Kernel of (g - id) over the allowed monomials of degree d.
std::vector<DenseVector> fixed_space(const PermutationAction& a, const MonomialIndex& mi,
                                     const std::vector<std::vector<Polynomial>>& images) {
    const auto& f = a.field();
    const std::size_t n = mi.monomials.size();
    const std::size_t len = n * images.size();
    std::vector<DenseVector> columns;
    columns.reserve(n);
    for (const auto& e : mi.monomials) {
        DenseVector col(len, 0);
        const auto m = Polynomial::monomial(a.variables(), f, e);
        for (std::size_t g = 0; g < images.size(); ++g) {
            const auto moved = a.canonical(substitute(m, images[g]));
            mi.accumulate(moved, col, g * n, f);
            mi.accumulate(m.scaled(f.neg(1)), col, g * n, f);
        }
        columns.push_back(std::move(col));
    }
    return kernel_basis(f, columns, len);
}

}  // namespace

PermutationAction::PermutationAction(VariableSetPtr vars, PrimeField field, std::vector<Permutation> generators,
                                     LinearElimination elimination)
    : vars_(std::move(vars)), field_(field), generators_(std::move(generators)), elimination_(std::move(elimination)) {
    const std::size_t n = vars_->size();
    for (const auto& g : generators_) {
        if (g.size() != n) throw ContractError("permutation length does not match the variable count");
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] >= n || seen[g[i]]) throw ContractError("generator is not a bijection of the variable indices");
            seen[g[i]] = true;
            if (vars_->degree(g[i]) != vars_->degree(i)) throw ContractError("generator does not preserve degrees");
        }
    }
    if (!elimination_.empty()) {
        if (!same_variables(elimination_.variables(), vars_)) throw StructuralError("elimination over a different ring");
        for (const auto& g : generators_) {
            const auto images = variable_images(*this, g);
            for (const auto& [idx, target] : elimination_.substitutions()) {
                const auto rel = Polynomial::variable(vars_, field_, idx) - target;
                if (!elimination_.apply(substitute(rel, images)).is_zero())
                    throw StructuralError("elimination for " + (*vars_)[idx].name + " is not stable under the action");
            }
        }
    }
}

Polynomial PermutationAction::act(const Permutation& g, const Polynomial& p) const {
    return canonical(substitute(p, variable_images(*this, g)));
}

bool PermutationAction::fixes(const Polynomial& p) const {
    const auto q = canonical(p);
    return std::all_of(generators_.begin(), generators_.end(), [&](const Permutation& g) { return act(g, q) == q; });
}

std::vector<bool> PermutationAction::free_mask() const {
    std::vector<bool> mask(vars_->size(), true);
    for (const auto& [idx, unused] : elimination_.substitutions()) mask[idx] = false;
    return mask;
}

Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
    Permutation g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = i;
    std::swap(g.at(a), g.at(b));
    return g;
}

Permutation cycle(std::size_t n, const std::vector<std::size_t>& indices) {
    Permutation g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = i;
    for (std::size_t k = 0; k < indices.size(); ++k) g.at(indices[k]) = indices[(k + 1) % indices.size()];
    return g;
}

std::vector<Polynomial> invariant_basis(const PermutationAction& action, int d) {
    if (d < 0) throw ContractError("negative degree");
    const MonomialIndex mi(*action.variables(), d, action.free_mask());
    std::vector<std::vector<Polynomial>> images;
    for (const auto& g : action.generators()) images.push_back(variable_images(action, g));
    std::vector<Polynomial> out;
    if (images.empty()) {
        for (const auto& e : mi.monomials) out.push_back(Polynomial::monomial(action.variables(), action.field(), e));
        return out;
    }
    for (const auto& v : fixed_space(action, mi, images)) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) terms.push_back({mi.monomials[i], v[i]});
        out.push_back(Polynomial::from_terms(action.variables(), action.field(), std::move(terms)));
    }
    return out;
}

DimensionTable invariant_dimensions(const PermutationAction& action, int max_degree) {
    if (max_degree < 0) throw ContractError("negative degree bound");
    const auto& vars = *action.variables();
    const std::size_t n = vars.size();
    std::vector<bool> inert(n, true);
    for (const auto& g : action.generators())
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] != i) inert[i] = false;
    for (const auto& [idx, target] : action.elimination().substitutions()) {
        inert[idx] = false;
        for (std::size_t i = 0; i < n; ++i)
            if (target.involves(i)) inert[i] = false;
    }
    std::vector<bool> moving = action.free_mask();
    std::vector<int> inert_weights;
    for (std::size_t i = 0; i < n; ++i)
        if (inert[i]) {
            moving[i] = false;
            inert_weights.push_back(vars.degree(i));
        }

    std::vector<std::vector<Polynomial>> images;
    for (const auto& g : action.generators()) images.push_back(variable_images(action, g));
    std::vector<std::uint64_t> moving_dims(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        const MonomialIndex mi(vars, d, moving);
        moving_dims[static_cast<std::size_t>(d)] =
            images.empty() ? mi.monomials.size() : fixed_space(action, mi, images).size();
    }
    const auto inert_dims = count_table(WeightSystem(inert_weights), max_degree);
    std::vector<std::uint64_t> out(moving_dims.size(), 0);
    for (int d = 0; d <= max_degree; ++d)
        for (int a = 0; a <= d; ++a) out[static_cast<std::size_t>(d)] += inert_dims[a] * moving_dims[static_cast<std::size_t>(d - a)];
    return DimensionTable{std::move(out)};
}

std::uint64_t monomial_orbit_count(const PermutationAction& action, int d) {
    const auto monomials = monomials_of_degree(*action.variables(), d, action.free_mask());
    std::set<Exponents> seen;
    std::uint64_t orbits = 0;
    for (const auto& start : monomials) {
        if (seen.contains(start)) continue;
        ++orbits;
        std::vector<Exponents> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            const auto e = std::move(stack.back());
            stack.pop_back();
            for (const auto& g : action.generators()) {
                Exponents moved(e.size(), 0);
                for (std::size_t i = 0; i < e.size(); ++i) moved[g[i]] = e[i];
                if (seen.insert(moved).second) stack.push_back(std::move(moved));
            }
        }
    }
    return orbits;
}

namespace {

// Rank of the degree-d products of `gens` inside the free monomial basis.
std::uint64_t product_span(const PermutationAction& a, const std::vector<Polynomial>& gens,
                           const std::vector<int>& degrees, int d) {
    const MonomialIndex mi(*a.variables(), d, a.free_mask());
    EchelonBasis eb(a.field(), mi.monomials.size());
    // depth-first over exponent vectors, carrying the prefix product
    auto rec = [&](auto&& self, std::size_t i, int remaining, const Polynomial& prefix) -> void {
        if (remaining == 0) {
            DenseVector v(mi.monomials.size(), 0);
            mi.accumulate(prefix, v, 0, a.field());
            eb.insert(v);
            return;
        }
        if (i == gens.size()) return;
        Polynomial cur = prefix;
        for (int used = 0; used * degrees[i] <= remaining; ++used) {
            self(self, i + 1, remaining - used * degrees[i], cur);
            if ((used + 1) * degrees[i] <= remaining) cur = a.canonical(cur * gens[i]);
            if (cur.is_zero()) break;
        }
    };
    rec(rec, 0, d, Polynomial::constant(a.variables(), a.field(), 1));
    return eb.rank();
}

}  // namespace

InvariantReport verify_invariant_presentation(const InvariantPresentationClaim& claim, int max_degree) {
    const auto& action = claim.action;
    std::vector<Polynomial> gens;
    std::vector<int> degrees;
    std::vector<bool> fixed;
    for (const auto& g : claim.generators) {
        if (!g.is_homogeneous() || g.is_zero()) throw ContractError("claimed generator must be nonzero homogeneous");
        gens.push_back(action.canonical(g));
        degrees.push_back(*g.degree());
        fixed.push_back(action.fixes(g));
    }
    InvariantReport report;
    report.name = claim.name;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!fixed[i]) report.non_invariant_generators.push_back(claim.generators[i].to_string());

    report.invariant_table = invariant_dimensions(action, std::max(max_degree, 0));
    const auto free_counts = count_table(WeightSystem(degrees), std::max(max_degree, 0));
    for (int d = 0; d <= max_degree; ++d) {
        InvariantDegreeCheck c;
        c.degree = d;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (degrees[i] == d && !fixed[i]) c.generators_fixed = false;
        c.invariant_dim = report.invariant_table[d];
        c.span_dim = product_span(action, gens, degrees, d);
        if (claim.claimed_free) c.free_count = free_counts[d];
        if (!c.ok()) report.failing.push_back(d);
        report.degrees.push_back(c);
    }
    return report;
}

DimensionTable to_hodge_grading(const DimensionTable& poly, int hodge_max) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(hodge_max, 0)) + 1, 0);
    for (int i = 0; 2 * i <= hodge_max; ++i) {
        if (i > poly.max_degree()) throw ContractError("polynomial table too short for the Hodge range");
        out[static_cast<std::size_t>(2 * i)] = poly[i];
    }
    return DimensionTable{std::move(out)};
}

InvariantPresentationClaim levi_double_cover_claim(int r, PrimeField field) {
    if (r < 2) throw ContractError("Levi claim needs r >= 2");
    const auto n = static_cast<std::size_t>(r);
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("A");
    auto vars = make_variables(names, std::vector<int>(n + 1, 1));

    Polynomial sum_rest(vars, field);
    for (std::size_t i = 0; i + 1 < n; ++i) sum_rest = sum_rest + Polynomial::variable(vars, field, i);
    LinearElimination elim(vars, field, {{n - 1, sum_rest.scaled(field.neg(1))}});

    std::vector<std::size_t> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = i;
    std::vector<Permutation> gens{transposition(n + 1, 0, 1)};
    if (r > 2) gens.push_back(cycle(n + 1, xs));
    PermutationAction action(vars, field, gens, elim);

    // elementary symmetric polynomials by the usual recurrence
    std::vector<Polynomial> e(n + 1, Polynomial(vars, field));
    e[0] = Polynomial::constant(vars, field, 1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = Polynomial::variable(vars, field, i);
        for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * x;
    }
    std::vector<Polynomial> claimed{Polynomial::variable(vars, field, "A")};
    for (std::size_t k = 2; k <= n; ++k) claimed.push_back(e[k]);
    return {"levi-r" + std::to_string(r), std::move(action), std::move(claimed), true};
}

}  // namespace hodgecalc
