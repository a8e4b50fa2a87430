#pragma once

// Exact graded multivariate polynomials over a prime field.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgecalc {

using Scalar = std::uint32_t;

/// Raised when operands live in incompatible structures (different variable
/// sets, unknown variables, cyclic substitutions).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a caller violates an operation's precondition (inhomogeneous
/// input where a homogeneous one is required, mismatched ranges, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class PrimeField {
public:
    explicit PrimeField(Scalar p = 2);

    Scalar characteristic() const noexcept { return p_; }

    Scalar reduce(std::int64_t v) const noexcept;
    Scalar add(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} + b) % p_); }
    Scalar sub(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} + p_ - b) % p_); }
    Scalar mul(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((std::uint64_t{a} * b) % p_); }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    /// Multiplicative inverse; throws ContractError on zero.
    Scalar inv(Scalar a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    Scalar p_;
};

struct Variable {
    std::string name;
    int degree = 1;
    /// (cohomological index, form index) when the generator carries a Hodge
    /// bidegree; the two always sum to `degree`.
    std::optional<std::pair<int, int>> bidegree;

    friend bool operator==(const Variable&, const Variable&) = default;
};

class VariableSet {
public:
    explicit VariableSet(std::vector<Variable> vars);

    std::size_t size() const noexcept { return vars_.size(); }
    const Variable& operator[](std::size_t i) const { return vars_[i]; }
    const std::vector<Variable>& variables() const noexcept { return vars_; }
    int degree(std::size_t i) const { return vars_[i].degree; }

    std::optional<std::size_t> find(const std::string& name) const;
    /// Index of `name`; throws StructuralError if absent.
    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.vars_ == b.vars_; }

private:
    std::vector<Variable> vars_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

VariableSetPtr make_variables(std::vector<Variable> vars);

/// Convenience: variables named `names[i]` of degree `degrees[i]`.
VariableSetPtr make_variables(const std::vector<std::string>& names, const std::vector<int>& degrees);

bool same_variables(const VariableSetPtr& a, const VariableSetPtr& b);

using Exponents = std::vector<std::uint16_t>;

int weighted_degree(const VariableSet& vars, const Exponents& e);

/// Graded lexicographic comparison: weighted degree first, then the
/// exponent of the earliest variable. Returns true if a precedes b in
/// descending order (a is "larger").
bool grlex_greater(const VariableSet& vars, const Exponents& a, const Exponents& b);

struct Term {
    Exponents exponents;
    Scalar coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
    Polynomial(VariableSetPtr vars, PrimeField field);

    static Polynomial constant(VariableSetPtr vars, PrimeField field, Scalar c);
    static Polynomial variable(VariableSetPtr vars, PrimeField field, const std::string& name);
    static Polynomial variable(VariableSetPtr vars, PrimeField field, std::size_t index);
    static Polynomial monomial(VariableSetPtr vars, PrimeField field, Exponents e, Scalar c = 1);
    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static Polynomial from_terms(VariableSetPtr vars, PrimeField field, std::vector<Term> terms);

    const VariableSetPtr& variables() const noexcept { return vars_; }
    const PrimeField& field() const noexcept { return field_; }
    /// Canonical terms, descending graded-lex, no zero coefficients.
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Weighted degree of the leading term; nullopt for zero.
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    /// Common bidegree of all terms when every variable carries one.
    std::optional<std::pair<int, int>> bidegree() const;
    /// True if the variable at `index` occurs in some term.
    bool involves(std::size_t index) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(Scalar c) const;
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    void require_compatible(const Polynomial& other) const;

    VariableSetPtr vars_;
    PrimeField field_;
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Substitutes `images[i]` for variable i of `p`. All images must share one
/// variable set (the target); `images.size()` must equal p's variable count.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Parses a small polynomial syntax over `vars`: sums of products of
/// `name` or `name^k`, optional integer coefficients, e.g. "t1*t2 + t3^2".
Polynomial parse_polynomial(const VariableSetPtr& vars, PrimeField field, const std::string& text);

/// One-pass substitution of eliminated variables by linear forms in the
/// remaining variables. Realizes linear quotients such as
/// k[t1,t2,t3]/(t1+t2+t3) via t3 -> t1+t2.
class LinearElimination {
public:
    LinearElimination() = default;
    /// Throws StructuralError if a target mentions an eliminated variable,
    /// is non-linear, or is inhomogeneous with the eliminated variable.
    LinearElimination(VariableSetPtr vars, PrimeField field, std::map<std::size_t, Polynomial> substitutions);

    /// Eliminates the variable whose defining relation is `relation` (a
    /// linear form with coefficient 1 on that variable) in favour of the rest.
    static LinearElimination from_relation(VariableSetPtr vars, PrimeField field, const std::string& eliminated,
                                           const Polynomial& relation);

    bool empty() const noexcept { return substitutions_.empty(); }
    bool eliminates(std::size_t index) const { return substitutions_.contains(index); }
    const std::map<std::size_t, Polynomial>& substitutions() const noexcept { return substitutions_; }
    const VariableSetPtr& variables() const noexcept { return vars_; }

    Polynomial apply(const Polynomial& p) const;

private:
    VariableSetPtr vars_;
    PrimeField field_;
    std::map<std::size_t, Polynomial> substitutions_;
};

Polynomial eliminate(const Polynomial& p, const LinearElimination& elim);

}  // namespace hodgecalc
