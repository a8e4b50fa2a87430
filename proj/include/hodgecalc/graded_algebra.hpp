#pragma once

// Finitely presented graded commutative algebras over F_p. Quotient
// dimensions come from degreewise linear algebra on the ideal slice
// {m * r : r relation, deg(m * r) = d}; no Groebner machinery.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodgecalc/field_poly.hpp"
#include "hodgecalc/linalg.hpp"

namespace hodgecalc {

/// Degree -> dimension, explicit for every degree 0..max_degree.
struct DimensionTable {
    std::vector<std::uint64_t> entries;

    int max_degree() const noexcept { return static_cast<int>(entries.size()) - 1; }
    std::uint64_t operator[](int d) const { return entries.at(static_cast<std::size_t>(d)); }
    std::uint64_t total() const;
    /// Entries in [0, n]; requires n <= max_degree.
    DimensionTable truncated(int n) const;

    friend bool operator==(const DimensionTable&, const DimensionTable&) = default;
};

class AlgebraPresentation {
public:
    /// Relations are stored after applying `elimination`. Throws
    /// ContractError on inhomogeneous, zero, or degree-0 relations.
    AlgebraPresentation(VariableSetPtr vars, PrimeField field, std::vector<Polynomial> relations = {},
                        LinearElimination elimination = {});

    /// Polynomial ring on `names` with the given degrees.
    static AlgebraPresentation free(const std::vector<std::string>& names, const std::vector<int>& degrees,
                                    PrimeField field = PrimeField(2));
    /// Presentation with relations given in parse_polynomial syntax.
    static AlgebraPresentation parse(const std::vector<std::string>& names, const std::vector<int>& degrees,
                                     const std::vector<std::string>& relations, PrimeField field = PrimeField(2));

    const VariableSetPtr& variables() const noexcept { return vars_; }
    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Polynomial>& relations() const noexcept { return relations_; }
    const LinearElimination& elimination() const noexcept { return elimination_; }

    Polynomial var(const std::string& name) const { return Polynomial::variable(vars_, field_, name); }
    Polynomial parse_element(const std::string& text) const { return canonical(parse_polynomial(vars_, field_, text)); }
    /// Applies the linear elimination (free-ring canonical representative).
    Polynomial canonical(const Polynomial& p) const;
    /// Variables that survive elimination.
    std::vector<bool> free_mask() const;
    std::vector<int> generator_degrees() const;

private:
    VariableSetPtr vars_;
    PrimeField field_;
    std::vector<Polynomial> relations_;
    LinearElimination elimination_;
};

/// Weighted-degree-d monomials in the allowed variables, descending grlex.
std::vector<Exponents> monomials_of_degree(const VariableSet& vars, int d, const std::vector<bool>& allowed);

/// One graded piece of a quotient: all degree-d monomials, the row-reduced
/// ideal slice, and the standard monomials (non-pivots) spanning the
/// quotient.
class DegreeSlice {
public:
    DegreeSlice(const AlgebraPresentation& pres, int degree);

    int degree() const noexcept { return degree_; }
    const std::vector<Exponents>& monomials() const noexcept { return monomials_; }
    const std::vector<std::size_t>& standard() const noexcept { return standard_; }
    std::vector<Exponents> basis() const;
    std::size_t dimension() const noexcept { return standard_.size(); }
    std::size_t ideal_rank() const noexcept { return ideal_.rank(); }

    /// Coordinates of an eliminated, homogeneous degree-d polynomial on all
    /// degree-d monomials.
    DenseVector coordinates(const Polynomial& p) const;
    /// Coordinates of p's class on the standard monomials.
    DenseVector normal_form(const Polynomial& p) const;
    /// Normal form coordinates of the monomial with the given index.
    DenseVector normal_form_of_monomial(const Exponents& e) const;
    bool is_zero(const Polynomial& p) const;

    std::optional<std::size_t> monomial_index(const Exponents& e) const;

private:
    DenseVector standard_part(const DenseVector& full) const;

    int degree_;
    PrimeField field_;
    std::vector<Exponents> monomials_;
    std::map<Exponents, std::size_t> index_;
    EchelonBasis ideal_;
    std::vector<std::size_t> standard_;
};

/// A presentation with every degree slice 0..max_degree precomputed.
class QuotientRing {
public:
    QuotientRing(AlgebraPresentation pres, int max_degree);

    const AlgebraPresentation& presentation() const noexcept { return pres_; }
    int max_degree() const noexcept { return static_cast<int>(slices_.size()) - 1; }
    const DegreeSlice& slice(int d) const;

    DimensionTable table() const;
    /// Normal-form representative on standard monomials.
    Polynomial reduce(const Polynomial& p) const;
    bool is_zero(const Polynomial& p) const;
    /// Standard monomials times the normal-form vector -> polynomial.
    Polynomial from_coordinates(int degree, const DenseVector& coords) const;

private:
    AlgebraPresentation pres_;
    std::vector<DegreeSlice> slices_;
};

std::vector<Exponents> graded_piece_basis(const AlgebraPresentation& pres, int d);
DimensionTable dimension_table(const AlgebraPresentation& pres, int max_degree);
/// Throws ContractError for inhomogeneous p.
bool is_zero_in_quotient(const Polynomial& p, const AlgebraPresentation& pres);

/// Same algebra with variables reordered: new variable k is old order[k].
AlgebraPresentation permute_variables(const AlgebraPresentation& pres, const std::vector<std::size_t>& order);

/// Degree-preserving algebra map given by images of source generators.
class RingMap {
public:
    /// `images` maps source variable names to polynomials in the target
    /// ring's variables. Unlisted generators are unmapped. Throws
    /// ContractError if an image is inhomogeneous or of the wrong degree.
    RingMap(AlgebraPresentation source, std::shared_ptr<const QuotientRing> target,
            const std::map<std::string, Polynomial>& images);

    const AlgebraPresentation& source() const noexcept { return source_; }
    const QuotientRing& target() const noexcept { return *target_; }

    /// Substitutes, eliminates, and reduces to the target normal form.
    /// Throws StructuralError if p uses an unmapped generator.
    Polynomial apply(const Polynomial& p) const;
    /// Every source relation maps to zero in the target quotient (relations
    /// above the target's precomputed range are reported as unchecked).
    bool well_defined() const;

private:
    AlgebraPresentation source_;
    std::shared_ptr<const QuotientRing> target_;
    std::vector<std::optional<Polynomial>> images_;
};

Polynomial apply_ring_map(const RingMap& f, const Polynomial& p);

/// Basis of {a : sum a_i f(candidate_i) = 0 in the target}, each vector
/// scaled so its first nonzero coefficient is 1. Throws ContractError on
/// mixed degrees.
std::vector<DenseVector> relation_kernel(const std::vector<Polynomial>& candidates, const RingMap& f);

}  // namespace hodgecalc
