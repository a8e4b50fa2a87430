#pragma once

// Restriction of the SO(n) classes u_2..u_n to elementary abelian subgroup
// targets, read in the radical quotient k[t_1..t_i, s_1..s_j] (t of degree
// 2, s of degree 1), and detection of relations among u-monomials.

#include <memory>
#include <vector>

#include "hodgecalc/graded_algebra.hpp"

namespace hodgecalc {

struct ElementaryAbelianTarget {
    int t_count = 0;
    int s_count = 0;
    bool s_sum_relation = false;  ///< s_1 + ... + s_j = 0, eliminating s_j
    bool t_sum_relation = false;  ///< t_1 + ... + t_i = 0, eliminating t_i

    /// Variables t1..ti then s1..sj (a single s is named "s").
    AlgebraPresentation presentation(PrimeField field = PrimeField(2)) const;
};

struct RestrictionPlan {
    int so_rank = 0;  ///< n of SO(n)
    int r = 0;        ///< floor(n / 2)
    ElementaryAbelianTarget h_target;
    ElementaryAbelianTarget k_target;

    /// r t's; r s's, summing to zero when n is even; K has one s and the t-sum.
    static RestrictionPlan for_so(int n);

    /// k[u_2..u_n], deg u_i = i.
    AlgebraPresentation source(PrimeField field = PrimeField(2)) const;
};

/// u_{2m} -> e_m(t); u_{2m+1} -> sum_j s_j * (sum of m-fold t-products whose
/// index set contains j); reduced by the H-target elimination. Throws
/// ContractError unless 2 <= i <= n.
Polynomial u_pullback(int i, const RestrictionPlan& plan);

/// s_j -> s, then the t-sum elimination.
Polynomial collapse_to_K(const Polynomial& p, const RestrictionPlan& plan);

/// The composite k[u] -> K-target as a ring map, with the target
/// precomputed through max_degree.
RingMap restriction_map(const RestrictionPlan& plan, int max_degree);

/// Normalized kernel basis of the composite on the candidates (polynomials
/// in the plan's source ring). Throws ContractError on mixed degrees.
std::vector<DenseVector> discover_relation(const std::vector<Polynomial>& candidates, const RestrictionPlan& plan);

}  // namespace hodgecalc
