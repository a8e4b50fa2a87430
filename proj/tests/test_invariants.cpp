#include <doctest.h>

#include <numeric>

#include "hodgecalc/invariants.hpp"

using namespace hodgecalc;

namespace {

const PrimeField F2(2);

PermutationAction s3_on_t() {
    auto vars = make_variables({"t1", "t2", "t3"}, {1, 1, 1});
    LinearElimination elim(vars, F2, {{2, parse_polynomial(vars, F2, "t1 + t2")}});
    return PermutationAction(vars, F2, {transposition(3, 0, 1), cycle(3, {0, 1, 2})}, elim);
}

PermutationAction symmetric_group(int r) {
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
    auto vars = make_variables(names, std::vector<int>(static_cast<std::size_t>(r), 1));
    std::vector<std::size_t> all(static_cast<std::size_t>(r));
    std::iota(all.begin(), all.end(), 0);
    std::vector<Permutation> gens;
    if (r >= 2) gens.push_back(transposition(static_cast<std::size_t>(r), 0, 1));
    if (r >= 3) gens.push_back(cycle(static_cast<std::size_t>(r), all));
    return PermutationAction(vars, F2, gens);
}

}  // namespace

TEST_CASE("S3 on k[t1,t2,t3]/(sum t)") {
    const auto a = s3_on_t();
    CHECK(invariant_basis(a, 1).empty());
    const auto b2 = invariant_basis(a, 2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == a.canonical(parse_polynomial(a.variables(), F2, "t1*t2 + t1*t3 + t2*t3")));
    const auto t = invariant_dimensions(a, 6);
    CHECK(t.entries == std::vector<std::uint64_t>{1, 0, 1, 1, 1, 1, 2});
}

TEST_CASE("invariant basis vectors are literally fixed") {
    const auto a = s3_on_t();
    for (int d = 0; d <= 9; ++d)
        for (const auto& p : invariant_basis(a, d))
            for (const auto& g : a.generators()) CHECK(a.act(g, p) == p);
}

TEST_CASE("trivial action fixes every monomial") {
    auto vars = make_variables({"a", "b"}, {1, 2});
    PermutationAction a(vars, F2, {});
    CHECK(invariant_basis(a, 4).size() == 3);
}

TEST_CASE("action validation") {
    auto vars = make_variables({"a", "b", "c"}, {1, 1, 2});
    CHECK_THROWS_AS(PermutationAction(vars, F2, {Permutation{0, 0, 2}}), ContractError);
    CHECK_THROWS_AS(PermutationAction(vars, F2, {Permutation{2, 1, 0}}), ContractError);
    // eliminating a alone is not stable under a <-> b
    LinearElimination elim(vars, F2, {{0, parse_polynomial(vars, F2, "b")}});
    CHECK_NOTHROW(PermutationAction(vars, F2, {transposition(3, 0, 1)}, elim));
    LinearElimination bad(vars, F2, {{1, Polynomial(vars, F2)}});
    CHECK_THROWS_AS(PermutationAction(vars, F2, {transposition(3, 0, 1)}, bad), StructuralError);
}

TEST_CASE("G2 claim and its negative control") {
    const auto a = s3_on_t();
    InvariantPresentationClaim good{"g2", a,
                                    {parse_polynomial(a.variables(), F2, "t1*t2 + t1*t3 + t2*t3"),
                                     parse_polynomial(a.variables(), F2, "t1*t2*t3")},
                                    true};
    CHECK(verify_invariant_presentation(good, 24).ok());

    InvariantPresentationClaim bad{"t1", a, {parse_polynomial(a.variables(), F2, "t1")}, true};
    const auto rep = verify_invariant_presentation(bad, 4);
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.failing.empty());
    CHECK(rep.failing.front() == 1);
    CHECK_FALSE(rep.degrees[1].generators_fixed);
}

TEST_CASE("Levi double-cover claims") {
    // r = 2 in characteristic 2: x2 = x1, S2 acts trivially, invariants are k[x1, A]
    const auto r2 = verify_invariant_presentation(levi_double_cover_claim(2), 6);
    CHECK_FALSE(r2.ok());
    CHECK(r2.invariant_table.entries == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
    CHECK(r2.failing.front() == 1);

    const std::vector<std::vector<std::uint64_t>> expected{
        {1, 1, 2, 3, 4, 5, 7}, {1, 1, 2, 3, 5, 6, 9}, {1, 1, 2, 3, 5, 7, 10}};
    for (int r = 3; r <= 5; ++r) {
        const auto rep = verify_invariant_presentation(levi_double_cover_claim(r), 10);
        CHECK_MESSAGE(rep.ok(), "r = " << r);
        CHECK(rep.invariant_table.truncated(6).entries == expected[static_cast<std::size_t>(r - 3)]);
    }
}

TEST_CASE("split-off invariant dimensions agree with the direct kernel") {
    const auto claim = levi_double_cover_claim(4);
    const auto t = invariant_dimensions(claim.action, 7);
    for (int d = 0; d <= 7; ++d) CHECK(invariant_basis(claim.action, d).size() == t[d]);
}

TEST_CASE("property: orbit counts equal fixed-space dimensions for S_r, r <= 5, d <= 12") {
    int failures = 0;
    for (int r = 1; r <= 5; ++r) {
        const auto a = symmetric_group(r);
        const auto t = invariant_dimensions(a, 12);
        for (int d = 0; d <= 12; ++d) {
            if (monomial_orbit_count(a, d) != t[d]) ++failures;
            if (d <= 8 && invariant_basis(a, d).size() != t[d]) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("Hodge grading doubles degrees") {
    DimensionTable t{{1, 0, 1, 1}};
    CHECK(to_hodge_grading(t, 6).entries == std::vector<std::uint64_t>{1, 0, 0, 0, 1, 0, 1});
    CHECK_THROWS_AS(to_hodge_grading(t, 8), ContractError);
}
