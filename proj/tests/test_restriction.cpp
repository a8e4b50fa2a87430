#include <doctest.h>

#include "hodgecalc/restriction.hpp"

using namespace hodgecalc;

TEST_CASE("pullback formulas") {
    const auto so11 = RestrictionPlan::for_so(11);
    CHECK(so11.r == 5);
    CHECK(u_pullback(2, so11).to_string() == "t1 + t2 + t3 + t4 + t5");

    const auto so3 = RestrictionPlan::for_so(3);
    CHECK(u_pullback(3, so3).to_string() == "t1*s");

    CHECK_THROWS_AS(u_pullback(1, so11), ContractError);
    CHECK_THROWS_AS(u_pullback(12, so11), ContractError);
}

TEST_CASE("SO(8) u7 image") {
    const auto plan = RestrictionPlan::for_so(8);
    const auto h = plan.h_target.presentation();
    const auto expected = h.parse_element(
        "s1*(t1+t4)*(t2*t3) + s2*(t2+t4)*(t1*t3) + s3*(t3+t4)*(t1*t2)");
    CHECK(u_pullback(7, plan) == expected);

    const auto k = plan.k_target.presentation();
    const auto collapsed = collapse_to_K(u_pullback(7, plan), plan);
    CHECK(collapsed == k.parse_element("s*t1^2*t2 + s*t1*t2^2 + s*t1^2*t3 + s*t1*t3^2 + s*t2^2*t3 + s*t2*t3^2"));
    CHECK_FALSE(collapsed.is_zero());
}

TEST_CASE("SO(11) collapses of u7 and u11") {
    const auto plan = RestrictionPlan::for_so(11);
    const auto k = plan.k_target.presentation();
    CHECK(collapse_to_K(u_pullback(7, plan), plan) ==
          k.parse_element("s*(t1*t2*t3 + t1*t2*t4 + t1*t2*t5 + t1*t3*t4 + t1*t3*t5 + t1*t4*t5 + t2*t3*t4 + t2*t3*t5 + "
                          "t2*t4*t5 + t3*t4*t5)"));
    CHECK(collapse_to_K(u_pullback(11, plan), plan) == k.parse_element("s*t1*t2*t3*t4*t5"));
}

TEST_CASE("pullbacks preserve degree") {
    for (int n : {8, 10, 11}) {
        const auto plan = RestrictionPlan::for_so(n);
        for (int i = 2; i <= n; ++i) {
            const auto p = u_pullback(i, plan);
            CHECK(p.is_homogeneous());
            if (!p.is_zero()) CHECK(*p.degree() == i);
        }
    }
}

TEST_CASE("parity identity on odd plans") {
    for (int n : {7, 9, 11}) {
        const auto plan = RestrictionPlan::for_so(n);
        const auto k = plan.k_target.presentation();
        for (int m = 1; 2 * m + 1 <= n; ++m) {
            Polynomial em(k.variables(), k.field());
            // e_m via the product expansion of prod (1 + t_i)
            std::vector<Polynomial> e(static_cast<std::size_t>(plan.r) + 1, Polynomial(k.variables(), k.field()));
            e[0] = Polynomial::constant(k.variables(), k.field(), 1);
            for (int i = 0; i < plan.r; ++i)
                for (int j = i + 1; j >= 1; --j)
                    e[static_cast<std::size_t>(j)] =
                        e[static_cast<std::size_t>(j)] +
                        e[static_cast<std::size_t>(j - 1)] * Polynomial::variable(k.variables(), k.field(), static_cast<std::size_t>(i));
            em = e[static_cast<std::size_t>(m)];
            const auto expected = m % 2 ? k.canonical(k.var("s") * em) : Polynomial(k.variables(), k.field());
            CHECK(collapse_to_K(u_pullback(2 * m + 1, plan), plan) == expected);
        }
    }
}

TEST_CASE("relation discovery") {
    const auto so11 = RestrictionPlan::for_so(11);
    const auto src = so11.source();
    const auto ker = discover_relation(
        {src.parse_element("u11*u6"), src.parse_element("u7*u10"), src.parse_element("u7*u4*u6")}, so11);
    CHECK(ker == std::vector<DenseVector>{{1, 1, 0}});
    CHECK(discover_relation({src.parse_element("u4")}, so11).empty());
    CHECK_THROWS_AS(discover_relation({src.parse_element("u4"), src.parse_element("u6")}, so11), ContractError);
}
