#pragma once

// Fixed subspaces of permutation actions on graded polynomial rings, with an
// optional linear elimination, and degreewise checks of claimed invariant
// ring presentations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodgecalc/graded_algebra.hpp"

namespace hodgecalc {

/// g[i] is the image of variable i.
using Permutation = std::vector<std::size_t>;

class PermutationAction {
public:
    /// Throws ContractError if a generator is not a bijection of the index
    /// set, and StructuralError if the elimination is not stable under
    /// some generator.
    PermutationAction(VariableSetPtr vars, PrimeField field, std::vector<Permutation> generators,
                      LinearElimination elimination = {});

    const VariableSetPtr& variables() const noexcept { return vars_; }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const LinearElimination& elimination() const noexcept { return elimination_; }

    /// g applied to p, then eliminated.
    Polynomial act(const Permutation& g, const Polynomial& p) const;
    /// p (eliminated) is fixed by every generator.
    bool fixes(const Polynomial& p) const;
    Polynomial canonical(const Polynomial& p) const { return elimination_.empty() ? p : elimination_.apply(p); }
    std::vector<bool> free_mask() const;

private:
    VariableSetPtr vars_;
    PrimeField field_;
    std::vector<Permutation> generators_;
    LinearElimination elimination_;
};

/// Permutation of `n` indices exchanging a and b.
Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
/// Permutation of `n` indices cycling the listed indices forward.
Permutation cycle(std::size_t n, const std::vector<std::size_t>& indices);

/// Basis of the fixed subspace of the degree-d piece (after elimination):
/// kernel of (g - id) stacked over all generators.
std::vector<Polynomial> invariant_basis(const PermutationAction& action, int d);

/// Fixed-space dimensions for degrees 0..max_degree. Variables fixed by
/// every generator and untouched by the elimination are split off as a
/// polynomial tensor factor.
DimensionTable invariant_dimensions(const PermutationAction& action, int max_degree);

/// Number of monomial orbits in degree d. Only meaningful without
/// elimination, where the action permutes the monomial basis.
std::uint64_t monomial_orbit_count(const PermutationAction& action, int d);

struct InvariantPresentationClaim {
    std::string name;
    PermutationAction action;
    std::vector<Polynomial> generators;
    bool claimed_free = true;
};

struct InvariantDegreeCheck {
    int degree = 0;
    bool generators_fixed = true;             ///< (1) for generators of this degree
    std::uint64_t invariant_dim = 0;
    std::uint64_t span_dim = 0;                ///< (2) products of claimed generators
    std::optional<std::uint64_t> free_count;   ///< (3) when claimed free
    bool ok() const {
        return generators_fixed && span_dim == invariant_dim && (!free_count || *free_count == span_dim);
    }
};

struct InvariantReport {
    std::string name;
    std::vector<InvariantDegreeCheck> degrees;
    std::vector<std::string> non_invariant_generators;
    std::vector<int> failing;
    DimensionTable invariant_table;  ///< polynomial grading
    bool ok() const { return failing.empty(); }
};

/// Throws ContractError on an inhomogeneous claimed generator.
InvariantReport verify_invariant_presentation(const InvariantPresentationClaim& claim, int max_degree);

/// Polynomial-degree table to Hodge grading: entry i moves to 2i, odd
/// degrees are zero. Truncated at `hodge_max`.
DimensionTable to_hodge_grading(const DimensionTable& poly, int hodge_max);

/// S_r on k[x_1..x_r, A]/(x_1 + ... + x_r) with x_r eliminated, together with
/// the claim k[A, c_2, ..., c_r] (c_i elementary symmetric in the x's).
InvariantPresentationClaim levi_double_cover_claim(int r, PrimeField field = PrimeField(2));

}  // namespace hodgecalc
