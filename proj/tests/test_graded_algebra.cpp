#include <doctest.h>

#include <numeric>
#include <random>

#include "hodgecalc/catalog.hpp"
#include "hodgecalc/graded_algebra.hpp"

using namespace hodgecalc;

TEST_CASE("column ring of G2") {
    auto r = AlgebraPresentation::parse({"v", "w"}, {2, 6}, {"v^3", "w^2"});
    auto t = dimension_table(r, 14);
    CHECK(t.entries == std::vector<std::uint64_t>{1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0});
    CHECK(t.total() == 6);
}

TEST_CASE("Spin column ring k[e1..e4]/(e_i^2 = e_2i)") {
    auto r = AlgebraPresentation::parse({"e1", "e2", "e3", "e4"}, {2, 4, 6, 8},
                                        {"e1^2 + e2", "e2^2 + e4", "e3^2", "e4^2"});
    auto t = dimension_table(r, 22);
    CHECK(t[0] == 1);
    CHECK(t[6] == 2);
    CHECK(t[20] == 1);
    CHECK(t[22] == 0);
    CHECK(t.total() == 16);
    CHECK(is_zero_in_quotient(r.parse_element("e1^8"), r));
    CHECK_FALSE(is_zero_in_quotient(r.parse_element("e1^7"), r));
    CHECK_THROWS_AS(is_zero_in_quotient(r.parse_element("e1 + e2"), r), ContractError);
}

TEST_CASE("polynomial rings count compositions") {
    auto r = AlgebraPresentation::free({"x1", "x2"}, {2, 4});
    CHECK(dimension_table(r, 8).entries == std::vector<std::uint64_t>{1, 0, 1, 0, 2, 0, 2, 0, 3});
}

TEST_CASE("relations are validated") {
    CHECK_THROWS_AS(AlgebraPresentation::parse({"x", "y"}, {1, 2}, {"x + y"}), ContractError);
    CHECK_THROWS_AS(AlgebraPresentation::parse({"x"}, {1}, {"x + x"}), ContractError);
}

TEST_CASE("quotient normal forms") {
    auto r = AlgebraPresentation::parse({"y6", "y7", "y10", "y11"}, {6, 7, 10, 11}, {"y7*y10 + y6*y11"});
    QuotientRing q(r, 17);
    CHECK(q.slice(17).dimension() == 1);
    CHECK(q.is_zero(r.parse_element("y7*y10 + y6*y11")));
    CHECK(q.reduce(r.parse_element("y7*y10")) == q.reduce(r.parse_element("y6*y11")));
}

TEST_CASE("ring maps") {
    auto src = AlgebraPresentation::free({"a", "b"}, {2, 4});
    auto tgt = std::make_shared<const QuotientRing>(AlgebraPresentation::parse({"x"}, {2}, {"x^3"}), 8);
    std::map<std::string, Polynomial> images{{"a", tgt->presentation().var("x")}};
    RingMap f(src, tgt, images);
    CHECK(f.apply(src.parse_element("a^2")).to_string() == "x^2");
    CHECK(f.apply(src.parse_element("a^3")).is_zero());
    CHECK_THROWS_AS(f.apply(src.parse_element("b")), StructuralError);

    std::map<std::string, Polynomial> bad{{"b", tgt->presentation().var("x")}};
    CHECK_THROWS_AS(RingMap(src, tgt, bad), ContractError);

    std::map<std::string, Polynomial> both{{"a", tgt->presentation().var("x")},
                                           {"b", tgt->presentation().parse_element("x^2")}};
    RingMap g(src, tgt, both);
    auto ker = relation_kernel({src.parse_element("a^2"), src.parse_element("b")}, g);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == DenseVector{1, 1});
    CHECK_THROWS_AS(relation_kernel({src.parse_element("a"), src.parse_element("b")}, g), ContractError);
}

TEST_CASE("property: dimension tables are independent of variable order (every catalog presentation)") {
    std::vector<AlgebraPresentation> all;
    for (const auto& info : list_scenarios()) {
        if (info.name == "so-baseline") continue;
        const auto s = make_scenario(info.name);
        for (const auto* p : {&s.column_ring, &s.abutment_ring, &s.candidate_ring, &s.singular_ring,
                              &s.model.row_ring(), &s.model.permanent().presentation})
            all.push_back(*p);
    }
    std::mt19937 rng(11);
    int failures = 0;
    for (const auto& p : all) {
        const auto base = dimension_table(p, 40);
        std::vector<std::size_t> order(p.variables()->size());
        std::iota(order.begin(), order.end(), 0);
        for (int trial = 0; trial < 2; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            if (!(dimension_table(permute_variables(p, order), 40) == base)) ++failures;
        }
        std::reverse(order.begin(), order.end());
        if (!(dimension_table(permute_variables(p, order), 40) == base)) ++failures;
    }
    CHECK(all.size() == 36);
    CHECK(failures == 0);
}
