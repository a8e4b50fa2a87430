#include <doctest.h>

#include "hodgecalc/linalg.hpp"

using namespace hodgecalc;

TEST_CASE("echelon basis over F2") {
    EchelonBasis eb(PrimeField(2), 4);
    CHECK(eb.insert({1, 1, 0, 0}));
    CHECK(eb.insert({0, 1, 1, 0}));
    CHECK_FALSE(eb.insert({1, 0, 1, 0}));
    CHECK(eb.rank() == 2);
    CHECK(eb.pivots() == std::vector<std::size_t>{0, 1});
    CHECK(eb.contains({1, 0, 1, 0}));
    CHECK(eb.reduce({0, 0, 1, 1}) == DenseVector{0, 0, 1, 1});
    CHECK(eb.reduce({1, 0, 0, 0}) == DenseVector{0, 0, 1, 0});
}

TEST_CASE("echelon basis over F3") {
    EchelonBasis eb(PrimeField(3), 3);
    CHECK(eb.insert({2, 1, 0}));
    CHECK(eb.insert({0, 2, 1}));
    CHECK_FALSE(eb.insert({2, 0, 1}));
    CHECK(eb.contains({1, 2, 1}) == false);
    CHECK(eb.rank() == 2);
    CHECK_THROWS_AS(eb.insert({1, 2}), ContractError);
}

TEST_CASE("kernel basis") {
    // columns c0 = (1,1), c1 = (1,1), c2 = (0,1)
    auto ker = kernel_basis(PrimeField(2), {{1, 1}, {1, 1}, {0, 1}}, 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == DenseVector{1, 1, 0});
    CHECK(kernel_basis(PrimeField(2), {{1, 0}, {0, 1}}, 2).empty());
    auto k3 = kernel_basis(PrimeField(3), {{1}, {1}}, 1);
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == DenseVector{1, 2});
}

TEST_CASE("bit echelon rank") {
    BitEchelon b(130);
    BitVector v(3, 0), w(3, 0);
    v[2] = 1;  // bit 128
    w[0] = 1;
    w[2] = 1;
    CHECK(b.insert(v));
    CHECK(b.insert(w));
    BitVector u(3, 0);
    u[0] = 1;
    CHECK_FALSE(b.insert(u));
    CHECK(b.rank() == 2);
}
