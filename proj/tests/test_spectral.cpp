#include <doctest.h>

#include "hodgecalc/catalog.hpp"
#include "hodgecalc/spectral.hpp"

using namespace hodgecalc;

namespace {

AlgebraPresentation free_ring(std::vector<std::string> names, std::vector<int> degrees) {
    return AlgebraPresentation::free(names, degrees);
}

}  // namespace

TEST_CASE("E2 entries") {
    const auto g2 = make_scenario("g2").model;
    const auto e2 = e2_table(g2, 40);
    CHECK(e2.at(0, 0) == 1);
    CHECK(e2.at(0, 6) == 1);
    CHECK(e2.at(7, 0) == 1);
    CHECK(e2.at(-1, 3) == 0);
    const auto spin7 = make_scenario("spin7").model;
    CHECK(e2_table(spin7, 20).at(4, 2) == 1);
    CHECK(einfty_table(spin7, 20).at(4, 2) == 1);
}

TEST_CASE("G2 E-infinity is survivors times k[y4,y6]") {
    const auto s = make_scenario("g2");
    const auto einf = einfty_table(s.model, 40);
    for (const auto& [ij, v] : einf.entries()) CHECK((ij.second == 0 || ij.second == 2 || ij.second == 4));
    CHECK(einf.row(0) == dimension_table(s.model.permanent().presentation, 40));
    const auto pages = einfty_oracle_pages(s.model, 40);
    // d7 kills w against y7
    REQUIRE(pages.pages.count(8));
    CHECK(pages.pages.at(2).at(0, 6) == 1);
    CHECK(pages.pages.at(8).at(0, 6) == 0);
    CHECK(pages.pages.at(8).at(7, 0) == 0);
    CHECK(pages.bidegree_additive);
}

TEST_CASE("pure transgressive model is contractible") {
    ModelSpectralSequence m("pure", {{0}}, {{"e", 3, "y"}}, {free_ring({}, {})});
    const auto einf = einfty_table(m, 30);
    CHECK(einf.entries().size() == 1);
    CHECK(einf.at(0, 0) == 1);
}

TEST_CASE("zero-differential model has E-infinity = E2") {
    ModelSpectralSequence m("flat", {{0, 2, 4}}, {}, {free_ring({"a"}, {4})});
    CHECK(einfty_oracle(m, 24) == e2_table(m, 24));
}

TEST_CASE("twisted models") {
    // the twist adds one class at its summand bidegree
    const auto spin10 = make_scenario("spin10").model;
    const auto inf10 = einfty_table(spin10, 40);
    const auto plain10 = einfty_rule(spin10.untwisted(), 40);
    CHECK(inf10.at(10, 6) == plain10.at(10, 6) + 1);
    CHECK(inf10.antidiagonal(16) == plain10.antidiagonal(16) + 1);

    const auto spin11 = make_scenario("spin11").model;
    const auto inf11 = einfty_table(spin11, 40);
    const auto plain11 = einfty_rule(spin11.untwisted(), 40);
    CHECK(inf11.at(6, 10) == plain11.at(6, 10) + 1);
    CHECK(inf11.at(0, 0) == 1);
}

TEST_CASE("rule and oracle agree for all six models through degree 40") {
    for (const auto* name : {"g2", "spin7", "spin8", "spin9", "spin10", "spin11"}) {
        const auto m = make_scenario(name).model;
        const auto rule = einfty_rule(m, 40);
        const auto pages = einfty_oracle_pages(m, 40);
        CHECK_MESSAGE(rule == pages.infinity, name);
        CHECK(pages.bidegree_additive);
        const auto e2 = e2_table(m, 40);
        for (const auto& [ij, v] : rule.entries()) CHECK(v <= e2.at(ij.first, ij.second));
        for (int n = 1; n <= 40; n += 2) CHECK(rule.antidiagonal(n) == 0);
    }
}

TEST_CASE("abutment checks") {
    const auto g2 = make_scenario("g2");
    CHECK(abutment_check(g2.model, g2.abutment_ring, 40).ok());
    const auto spin10 = make_scenario("spin10");
    const auto rep = abutment_check(spin10.model, spin10.abutment_ring, 40);
    CHECK(rep.ok());
    CHECK(rep.degrees[16].actual == 18);
    CHECK(rep.degrees[16].expected == 18);
    const auto untw = abutment_check(einfty_rule(spin10.model.untwisted(), 40), dimension_table(spin10.abutment_ring, 40));
    CHECK(untw.failing.front() == 16);
    CHECK(untw.degrees[16].actual == 17);

    ModelSpectralSequence unit("unit", {{0}}, {}, {free_ring({}, {})});
    CHECK(abutment_check(unit, free_ring({}, {}), 10).ok());
}

TEST_CASE("Zeeman certification") {
    const auto g2 = make_scenario("g2");
    const auto ok = zeeman_certify(g2.model, g2.candidate_ring, g2.column_ring, g2.abutment_ring, 40);
    CHECK(ok.certified);
    CHECK(ok.row_table == dimension_table(free_ring({"y4", "y6", "y7"}, {4, 6, 7}), 40));

    const auto wrong = zeeman_certify(g2.model, free_ring({"y4", "y6"}, {4, 6}), g2.column_ring, g2.abutment_ring, 40);
    CHECK_FALSE(wrong.certified);
    CHECK(wrong.failing_degree == 7);

    const auto bad_column = zeeman_certify(g2.model, g2.candidate_ring, free_ring({"v"}, {2}), g2.abutment_ring, 20);
    CHECK_FALSE(bad_column.certified);

    const auto spin11 = make_scenario("spin11");
    CHECK(zeeman_certify(spin11.model, spin11.candidate_ring, spin11.column_ring, spin11.abutment_ring, 40).certified);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(ModelSpectralSequence("x", {{2}}, {}, {free_ring({}, {})}), ContractError);
    CHECK_THROWS_AS(ModelSpectralSequence("x", {{0, 0}}, {}, {free_ring({}, {})}), ContractError);
    auto odd = AlgebraPresentation::free({"a"}, {2}, PrimeField(3));
    ModelSpectralSequence m("odd", {{0}}, {{"e", 1, "y"}}, {odd});
    CHECK_THROWS_AS(einfty_oracle(m, 6), ContractError);
}
