#include <doctest.h>

#include "hodgecalc/catalog.hpp"
#include "hodgecalc/counting.hpp"

using namespace hodgecalc;

TEST_CASE("composition counts") {
    CHECK(count_solutions(WeightSystem({2, 4}), 6) == 2);
    CHECK(count_solutions(WeightSystem({2, 4, 6}), 6) == 3);
    CHECK(count_solutions(WeightSystem({2, 4}), 5) == 0);
    CHECK(count_solutions(WeightSystem(), 0) == 1);
    CHECK(count_solutions(WeightSystem({3}), -1) == 0);
    CHECK(enumerate_solutions(WeightSystem({2, 4}), 6) == std::vector<std::vector<int>>{{3, 0}, {1, 1}});
    CHECK_THROWS_AS(WeightSystem({0}), ContractError);
}

TEST_CASE("split bijection on single solutions") {
    SplitBijectionSpec g2{"g2", 2, 3, WeightSystem({4})};
    auto [i, right] = split_forward(g2, {4, 1});
    CHECK(i == 1);
    CHECK(right == std::vector<int>{1, 1});
    CHECK(split_inverse(g2, i, right) == std::vector<int>{4, 1});
}

TEST_CASE("split bijection verification") {
    SplitBijectionSpec spin10{"spin10", 2, 16, WeightSystem({4, 6, 8, 10})};
    auto rep = verify_split_bijection(spin10, 16);
    CHECK(rep.ok());
    CHECK(rep.degrees[16].left_count == 18);
    CHECK(rep.degrees[16].right_sum == 18);
    CHECK_THROWS_AS(verify_split_bijection({"bad", 0, 2, WeightSystem()}, 4), ContractError);
    CHECK_THROWS_AS(verify_split_bijection({"bad", 2, 1, WeightSystem()}, 4), ContractError);
}

TEST_CASE("every catalog split bijection holds through n = 60") {
    int specs = 0;
    for (const auto& info : list_scenarios()) {
        if (info.name == "so-baseline") continue;
        for (const auto& spec : make_scenario(info.name).split_bijections) {
            ++specs;
            CHECK_MESSAGE(verify_split_bijection(spec, 60).ok(), spec.name);
        }
    }
    CHECK(specs == 5);
}

TEST_CASE("table comparison") {
    DimensionTable a{{1, 2, 3}}, b{{1, 1, 3}};
    auto eq = compare_tables(a, b, CompareMode::equal);
    CHECK(eq.failing == std::vector<int>{1});
    auto dom = compare_tables(a, b, CompareMode::dominates);
    CHECK(dom.ok());
    CHECK(dom.strict == std::map<int, std::int64_t>{{1, 1}});
    CHECK_FALSE(compare_tables(b, a, CompareMode::dominates).ok());
    CHECK_THROWS_AS(compare_tables(a, DimensionTable{{1}}, CompareMode::equal), ContractError);
}
