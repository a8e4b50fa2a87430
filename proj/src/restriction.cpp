#include "hodgecalc/restriction.hpp"

#include <algorithm>

namespace hodgecalc {

namespace {

// Linear elimination of the last variable in [first, first + count).
LinearElimination sum_elimination(const VariableSetPtr& vars, PrimeField field, std::size_t first, std::size_t count) {
    Polynomial rest(vars, field);
    for (std::size_t k = first; k + 1 < first + count; ++k) rest = rest + Polynomial::variable(vars, field, k);
    return LinearElimination(vars, field, {{first + count - 1, rest.scaled(field.neg(1))}});
}

LinearElimination combine(const VariableSetPtr& vars, PrimeField field, const LinearElimination& a,
                          const LinearElimination& b) {
    auto subs = a.substitutions();
    for (const auto& [k, v] : b.substitutions()) subs.emplace(k, v);
    return LinearElimination(vars, field, std::move(subs));
}

// All k-subsets of {0..n-1}, lexicographic.
void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

AlgebraPresentation ElementaryAbelianTarget::presentation(PrimeField field) const {
    if (t_count < 0 || s_count < 0) throw ContractError("negative variable count");
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 1; i <= t_count; ++i) {
        names.push_back("t" + std::to_string(i));
        degrees.push_back(2);
    }
    for (int j = 1; j <= s_count; ++j) {
        names.push_back(s_count == 1 ? std::string("s") : "s" + std::to_string(j));
        degrees.push_back(1);
    }
    auto vars = make_variables(names, degrees);
    LinearElimination elim;
    if (t_sum_relation && t_count > 0) elim = sum_elimination(vars, field, 0, static_cast<std::size_t>(t_count));
    if (s_sum_relation && s_count > 0) {
        auto s = sum_elimination(vars, field, static_cast<std::size_t>(t_count), static_cast<std::size_t>(s_count));
        elim = elim.empty() ? s : combine(vars, field, elim, s);
    }
    return AlgebraPresentation(vars, field, {}, elim);
}

RestrictionPlan RestrictionPlan::for_so(int n) {
    if (n < 2) throw ContractError("SO(n) restriction plan needs n >= 2");
    RestrictionPlan p;
    p.so_rank = n;
    p.r = n / 2;
    p.h_target = {p.r, p.r, n % 2 == 0, false};
    p.k_target = {p.r, 1, false, true};
    return p;
}

AlgebraPresentation RestrictionPlan::source(PrimeField field) const {
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 2; i <= so_rank; ++i) {
        names.push_back("u" + std::to_string(i));
        degrees.push_back(i);
    }
    return AlgebraPresentation::free(names, degrees, field);
}

Polynomial u_pullback(int i, const RestrictionPlan& plan) {
    if (i < 2 || i > plan.so_rank) throw ContractError("u index out of range: " + std::to_string(i));
    const auto h = plan.h_target.presentation();
    const auto& vars = h.variables();
    const auto field = h.field();
    const int r = plan.h_target.t_count;
    const int m = i / 2;
    auto t_product = [&](const std::vector<int>& idx) {
        Exponents e(vars->size(), 0);
        for (int k : idx) e[static_cast<std::size_t>(k)] = 1;
        return Polynomial::monomial(vars, field, e);
    };
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    subsets(r, m, 0, cur, sets);
    Polynomial out(vars, field);
    if (i % 2 == 0) {
        std::vector<Term> terms;
        for (const auto& s : sets) terms.push_back(t_product(s).terms().front());
        out = Polynomial::from_terms(vars, field, std::move(terms));
    } else {
        std::vector<Term> terms;
        for (int j = 0; j < plan.h_target.s_count; ++j) {
            const auto sj = Polynomial::variable(vars, field, static_cast<std::size_t>(r + j));
            for (const auto& s : sets)
                if (std::find(s.begin(), s.end(), j) != s.end()) {
                    auto p = t_product(s) * sj;
                    terms.push_back(p.terms().front());
                }
        }
        out = Polynomial::from_terms(vars, field, std::move(terms));
    }
    return h.canonical(out);
}

Polynomial collapse_to_K(const Polynomial& p, const RestrictionPlan& plan) {
    const auto h = plan.h_target.presentation();
    const auto k = plan.k_target.presentation();
    if (!same_variables(p.variables(), h.variables())) throw StructuralError("polynomial is not over the H target");
    const auto& kv = k.variables();
    std::vector<Polynomial> images;
    for (int i = 0; i < plan.h_target.t_count; ++i)
        images.push_back(Polynomial::variable(kv, k.field(), static_cast<std::size_t>(i)));
    const auto s = k.var("s");
    for (int j = 0; j < plan.h_target.s_count; ++j) images.push_back(s);
    return k.canonical(substitute(p, images));
}

RingMap restriction_map(const RestrictionPlan& plan, int max_degree) {
    auto target = std::make_shared<const QuotientRing>(plan.k_target.presentation(), max_degree);
    std::map<std::string, Polynomial> images;
    for (int i = 2; i <= plan.so_rank; ++i)
        images.emplace("u" + std::to_string(i), collapse_to_K(u_pullback(i, plan), plan));
    return RingMap(plan.source(), target, images);
}

std::vector<DenseVector> discover_relation(const std::vector<Polynomial>& candidates, const RestrictionPlan& plan) {
    int top = 0;
    for (const auto& c : candidates) {
        if (!c.is_homogeneous()) throw ContractError("candidate is not homogeneous");
        if (const auto d = c.degree()) top = std::max(top, *d);
    }
    return relation_kernel(candidates, restriction_map(plan, top));
}

}  // namespace hodgecalc
