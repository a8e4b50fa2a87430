// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "hodgecalc/catalog.hpp"

using namespace hodgecalc;

namespace {

const PrimeField F2(2);

struct Outcome {
    bool ok = true;
    std::ostringstream notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << (notes.tellp() > 0 ? "; " : "") << what;
        }
    }
};

const std::vector<std::string> group_scenarios{"g2", "spin7", "spin8", "spin9", "spin10", "spin11"};

Outcome criterion1() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_scenario("g2", 40);
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& c : r.checks)
        o.require(c.status != CheckStatus::fail, "check " + c.name + " failed");
    const auto expected = dimension_table(AlgebraPresentation::free({"y4", "y6", "y7"}, {4, 6, 7}), 40);
    o.require(*r.table("candidate") == expected, "candidate table differs from k[y4,y6,y7]");
    o.require(r.check("zeeman") && r.check("zeeman")->status == CheckStatus::pass, "not certified");
    o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto vars = make_variables({"t1", "t2", "t3"}, {1, 1, 1});
    LinearElimination elim(vars, F2, {{2, parse_polynomial(vars, F2, "t1 + t2")}});
    PermutationAction s3(vars, F2, {transposition(3, 0, 1), cycle(3, {0, 1, 2})}, elim);
    const auto t = invariant_dimensions(s3, 6);
    o.require(t.entries == std::vector<std::uint64_t>{1, 0, 1, 1, 1, 1, 2}, "S3 table " + join_table(t));
    o.require(t == count_table(WeightSystem({2, 3}), 6), "S3 table differs from k[deg2,deg3]");
    for (int r = 2; r <= 5; ++r) {
        const auto rep = verify_invariant_presentation(levi_double_cover_claim(r), 10);
        if (!rep.ok()) {
            std::ostringstream os;
            os << "Levi r=" << r << " fails at degrees";
            for (int d : rep.failing) os << " " << d;
            os << " (invariants " << join_table(rep.invariant_table.truncated(6)) << ", claim counts";
            for (int d = 0; d <= 6; ++d) os << " " << *rep.degrees[static_cast<std::size_t>(d)].free_count;
            os << ")";
            o.require(false, os.str());
        }
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    int specs = 0;
    for (const auto& name : group_scenarios)
        for (const auto& spec : make_scenario(name).split_bijections) {
            ++specs;
            const auto rep = verify_split_bijection(spec, 60);
            o.require(rep.ok(), spec.name + " fails");
        }
    o.require(specs == 5, "expected five specs, found " + std::to_string(specs));
    o.require(count_solutions(WeightSystem({2, 4}), 6) == 2, "|S6| != 2");
    o.require(dimension_table(make_scenario("spin7").abutment_ring, 6)[6] == 3, "dim H6(BL) != 3 for Spin(7)");
    const auto s10 = make_scenario("spin10");
    const auto d16 = verify_split_bijection(s10.split_bijections.front(), 16).degrees.back();
    const auto untw = einfty_rule(s10.model.untwisted(), 16).antidiagonal(16);
    o.require(d16.left_count == 18 && d16.right_sum == 18 && untw == 17, "Spin(10) degree 16 is not 18 = 1 + 17");
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const auto& name : group_scenarios) {
        const auto s = make_scenario(name);
        const auto rule = einfty_rule(s.model, 40);
        const auto oracle = einfty_oracle(s.model, 40);
        o.require(rule == oracle, name + ": rule and oracle disagree");
        for (int n = 1; n <= 40; n += 2) o.require(rule.antidiagonal(n) == 0, name + ": odd antidiagonal " + std::to_string(n));
        const auto ab = abutment_check(rule, dimension_table(s.abutment_ring, 40));
        o.require(ab.ok(), name + ": abutment fails");
    }
    o.require(make_scenario("spin10").model.twist().has_value() && make_scenario("spin11").model.twist().has_value(),
              "twisted models missing");
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto so11 = RestrictionPlan::for_so(11);
    const auto src = so11.source();
    const auto ker = discover_relation(
        {src.parse_element("u11*u6"), src.parse_element("u7*u10"), src.parse_element("u7*u4*u6")}, so11);
    o.require(ker == std::vector<DenseVector>{{1, 1, 0}}, "SO(11) kernel is not span{(1,1,0)}");

    const auto r10 = run_scenario("spin10", 20);
    const auto* path = r10.check("restriction:spin8-path");
    o.require(path && path->status == CheckStatus::pass, "Spin(10) path does not give a = 0");
    o.require(r10.discovered_relations.size() == 1 && r10.discovered_relations[0].polynomial.to_string() == "y7*y10",
              "Spin(10) relation is not y7*y10");

    const auto so8 = RestrictionPlan::for_so(8);
    const auto k = so8.k_target.presentation();
    const auto img = collapse_to_K(u_pullback(7, so8), so8);
    const auto expected = k.parse_element(
        "s*((t1+t2)*t1*t2 + (t1+t3)*t1*t3 + (t2+t3)*t2*t3)");
    o.require(img == expected && !img.is_zero(), "SO(8) u7 collapse is " + img.to_string());
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto* name : {"g2", "spin7", "spin8", "spin9", "spin10"}) {
        const auto r = compare_dr_singular(name, 40);
        o.require(r.passed(), std::string(name) + ": dR and singular tables differ");
    }
    const auto r = compare_dr_singular("spin11", 40);
    const auto* dom = r.check("dominance");
    o.require(dom && dom->status == CheckStatus::pass, "spin11 dominance fails");
    const auto* gap = r.check("strict-gap");
    o.require(gap && gap->status == CheckStatus::pass, "spin11 " + (gap ? gap->detail : std::string("gap missing")));
    return o;
}

Outcome criterion7() {
    Outcome o;
    o.require(verify_g2_levi_root_datum(), "stated map rejected");
    auto m = g2_levi_root_datum();
    m.chi2 = {1, -1, 0};
    o.require(!verify_root_datum(m), "perturbed map accepted");
    return o;
}

Polynomial random_poly(std::mt19937& rng, const VariableSetPtr& vars, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> nterms(0, max_terms), ex(0, max_exp), coef(0, 1);
    std::vector<Term> terms;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Exponents e(vars->size());
        for (auto& x : e) x = static_cast<std::uint16_t>(ex(rng));
        terms.push_back({e, static_cast<Scalar>(coef(rng))});
    }
    return Polynomial::from_terms(vars, F2, terms);
}

Outcome criterion8() {
    Outcome o;
    std::mt19937 rng(8);
    {
        auto vs = make_variables({"a", "b", "c"}, {1, 2, 3});
        int bad = 0;
        for (int k = 0; k < 1000; ++k) {
            const auto p = random_poly(rng, vs, 5, 3), q = random_poly(rng, vs, 5, 3);
            if (!((p + q).pow(2) == p.pow(2) + q.pow(2))) ++bad;
        }
        o.require(bad == 0, "Frobenius identity fails " + std::to_string(bad) + " times");
    }
    {
        auto vs = make_variables({"x1", "x2", "x3", "x4"}, {1, 1, 1, 1});
        auto elim = LinearElimination::from_relation(vs, F2, "x4", parse_polynomial(vs, F2, "x1 + x2 + x3 + x4"));
        int bad = 0;
        for (int k = 0; k < 1000; ++k) {
            const auto p = random_poly(rng, vs, 4, 2), q = random_poly(rng, vs, 4, 2);
            if (!(elim.apply(p * q) == elim.apply(elim.apply(p) * elim.apply(q)))) ++bad;
            if (!(elim.apply(p + q) == elim.apply(p) + elim.apply(q))) ++bad;
        }
        o.require(bad == 0, "elimination homomorphism fails " + std::to_string(bad) + " times");
    }
    for (int r = 1; r <= 5; ++r) {
        std::vector<std::string> names;
        for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
        auto vars = make_variables(names, std::vector<int>(static_cast<std::size_t>(r), 1));
        std::vector<std::size_t> all(static_cast<std::size_t>(r));
        std::iota(all.begin(), all.end(), 0);
        std::vector<Permutation> gens;
        if (r >= 2) gens.push_back(transposition(all.size(), 0, 1));
        if (r >= 3) gens.push_back(cycle(all.size(), all));
        PermutationAction a(vars, F2, gens);
        for (int d = 0; d <= 12; ++d)
            o.require(monomial_orbit_count(a, d) == invariant_basis(a, d).size(),
                      "orbit count differs for S" + std::to_string(r) + " at degree " + std::to_string(d));
    }
    {
        int bad = 0, total = 0;
        for (const auto& name : group_scenarios) {
            const auto s = make_scenario(name);
            for (const auto* p : {&s.column_ring, &s.abutment_ring, &s.candidate_ring, &s.singular_ring,
                                  &s.model.row_ring(), &s.model.permanent().presentation}) {
                ++total;
                std::vector<std::size_t> order(p->variables()->size());
                std::iota(order.begin(), order.end(), 0);
                std::reverse(order.begin(), order.end());
                std::shuffle(order.begin(), order.end(), rng);
                if (!(dimension_table(permute_variables(*p, order), 40) == dimension_table(*p, 40))) ++bad;
            }
        }
        o.require(bad == 0, std::to_string(bad) + " of " + std::to_string(total) + " presentations depend on variable order");
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    auto suite = [] {
        std::string all;
        for (const auto& s : list_scenarios()) {
            all += to_json(run_scenario(s.name, 40));
            all += to_json(compare_dr_singular(s.name, 40));
        }
        return all;
    };
    const auto first = suite();
    const auto second = suite();
    o.require(first == second, "JSON reports differ between runs");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
        {"G2 end-to-end", criterion1},          {"invariants", criterion2},
        {"bijections", criterion3},             {"spectral models", criterion4},
        {"relation discovery", criterion5},     {"dR vs singular comparison", criterion6},
        {"root datum", criterion7},             {"property suites", criterion8},
        {"determinism", criterion9}};
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes << "exception: " << e.what();
        }
        all = all && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first;
        if (!o.ok) std::cout << " -- " << o.notes.str();
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
