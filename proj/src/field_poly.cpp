#include <functional>
#include "hodgecalc/field_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hodgecalc {

namespace {

bool is_prime(Scalar p) {
    if (p < 2) return false;
    for (Scalar d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(Scalar p) : p_(p) {
    if (!is_prime(p)) throw ContractError("field characteristic " + std::to_string(p) + " is not prime");
}

Scalar PrimeField::reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
}

Scalar PrimeField::inv(Scalar a) const {
    a %= p_;
    if (a == 0) throw ContractError("inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a;
    for (Scalar e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<Scalar>(result);
}

VariableSet::VariableSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (v.degree < 1) throw StructuralError("variable " + v.name + " must have positive degree");
        if (v.bidegree && v.bidegree->first + v.bidegree->second != v.degree)
            throw StructuralError("bidegree of " + v.name + " does not sum to its degree");
        if (v.bidegree && (v.bidegree->first < 0 || v.bidegree->second < 0))
            throw StructuralError("bidegree of " + v.name + " must be nonnegative");
        for (std::size_t j = 0; j < i; ++j)
            if (vars_[j].name == v.name) throw StructuralError("duplicate variable name " + v.name);
    }
}

std::optional<std::size_t> VariableSet::find(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

std::size_t VariableSet::index_of(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw StructuralError("unknown variable " + name);
}

VariableSetPtr make_variables(std::vector<Variable> vars) {
    return std::make_shared<const VariableSet>(std::move(vars));
}

VariableSetPtr make_variables(const std::vector<std::string>& names, const std::vector<int>& degrees) {
    if (names.size() != degrees.size()) throw StructuralError("names/degrees length mismatch");
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < names.size(); ++i) vars.push_back({names[i], degrees[i], std::nullopt});
    return make_variables(std::move(vars));
}

bool same_variables(const VariableSetPtr& a, const VariableSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

int weighted_degree(const VariableSet& vars, const Exponents& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * vars.degree(i);
    return d;
}

bool grlex_greater(const VariableSet& vars, const Exponents& a, const Exponents& b) {
    const int da = weighted_degree(vars, a);
    const int db = weighted_degree(vars, b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(VariableSetPtr vars, PrimeField field) : vars_(std::move(vars)), field_(field) {
    if (!vars_) throw StructuralError("polynomial needs a variable set");
}

Polynomial Polynomial::constant(VariableSetPtr vars, PrimeField field, Scalar c) {
    Exponents zero(vars->size(), 0);
    return monomial(std::move(vars), field, std::move(zero), c);
}

Polynomial Polynomial::variable(VariableSetPtr vars, PrimeField field, const std::string& name) {
    const auto i = vars->index_of(name);
    return variable(std::move(vars), field, i);
}

Polynomial Polynomial::variable(VariableSetPtr vars, PrimeField field, std::size_t index) {
    if (index >= vars->size()) throw StructuralError("variable index out of range");
    Exponents e(vars->size(), 0);
    e[index] = 1;
    return monomial(std::move(vars), field, std::move(e), 1);
}

Polynomial Polynomial::monomial(VariableSetPtr vars, PrimeField field, Exponents e, Scalar c) {
    if (e.size() != vars->size()) throw StructuralError("exponent vector length mismatch");
    Polynomial p(std::move(vars), field);
    c = c % field.characteristic();
    if (c != 0) p.terms_.push_back({std::move(e), c});
    return p;
}

Polynomial Polynomial::from_terms(VariableSetPtr vars, PrimeField field, std::vector<Term> terms) {
    std::map<Exponents, Scalar> acc;
    for (auto& t : terms) {
        if (t.exponents.size() != vars->size()) throw StructuralError("exponent vector length mismatch");
        auto& slot = acc[t.exponents];
        slot = field.add(slot, t.coefficient % field.characteristic());
    }
    Polynomial p(std::move(vars), field);
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    const auto& vs = *p.vars_;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&vs](const Term& a, const Term& b) { return grlex_greater(vs, a.exponents, b.exponents); });
    return p;
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return weighted_degree(*vars_, terms_.front().exponents);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = weighted_degree(*vars_, terms_.front().exponents);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return weighted_degree(*vars_, t.exponents) == d; });
}

std::optional<std::pair<int, int>> Polynomial::bidegree() const {
    std::optional<std::pair<int, int>> common;
    for (const auto& t : terms_) {
        std::pair<int, int> b{0, 0};
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            const auto& bd = (*vars_)[i].bidegree;
            if (!bd) return std::nullopt;
            b.first += t.exponents[i] * bd->first;
            b.second += t.exponents[i] * bd->second;
        }
        if (common && *common != b) return std::nullopt;
        common = b;
    }
    return common;
}

bool Polynomial::involves(std::size_t index) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponents[index] != 0; });
}

void Polynomial::require_compatible(const Polynomial& other) const {
    if (!same_variables(vars_, other.vars_)) throw StructuralError("polynomials over different variable sets");
    if (!(field_ == other.field_)) throw StructuralError("polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_compatible(other);
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(vars_, field_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other.scaled(field_.neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_compatible(other);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Exponents e(a.exponents.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(a.exponents[i] + b.exponents[i]);
            prod.push_back({std::move(e), field_.mul(a.coefficient, b.coefficient)});
        }
    }
    return from_terms(vars_, field_, std::move(prod));
}

Polynomial Polynomial::scaled(Scalar c) const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coefficient = field_.mul(term.coefficient, c % field_.characteristic());
    return from_terms(vars_, field_, std::move(t));
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(vars_, field_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_variables(a.vars_, b.vars_) && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        if (t.coefficient != 1) {
            os << t.coefficient;
            any = true;
        }
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            if (any) os << '*';
            os << (*vars_)[i].name;
            if (t.exponents[i] > 1) os << '^' << t.exponents[i];
            any = true;
        }
        if (!any) os << '1';
    }
    return os.str();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.variables()->size()) throw StructuralError("substitution arity mismatch");
    if (images.empty()) throw StructuralError("substitution needs a target variable set");
    const auto& target = images.front().variables();
    const auto field = images.front().field();
    for (const auto& img : images)
        if (!same_variables(img.variables(), target)) throw StructuralError("substitution images over different rings");

    // powers[i][k] = images[i]^k, filled on demand
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, field, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };

    std::vector<Term> all;
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(target, field, t.coefficient);
        for (std::size_t i = 0; i < t.exponents.size() && !term.is_zero(); ++i)
            if (t.exponents[i] != 0) term = term * power(i, t.exponents[i]);
        all.insert(all.end(), term.terms().begin(), term.terms().end());
    }
    return Polynomial::from_terms(target, field, std::move(all));
}

Polynomial parse_polynomial(const VariableSetPtr& vars, PrimeField field, const std::string& text) {
    // expr := term ('+' term)*, term := factor ('*' factor)*, factor := (int | name | '(' expr ')') ['^' int]
    std::size_t pos = 0;
    auto fail = [&]() -> StructuralError { return StructuralError("malformed polynomial '" + text + "'"); };
    auto peek = [&]() -> char {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos < text.size() ? text[pos] : '\0';
    };
    auto read_int = [&]() -> long {
        peek();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw StructuralError("expected integer in '" + text + "'");
        return std::stol(text.substr(start, pos - start));
    };

    std::function<Polynomial()> expr;
    auto factor = [&]() -> Polynomial {
        Polynomial base(vars, field);
        const char c = peek();
        if (c == '(') {
            ++pos;
            base = expr();
            if (peek() != ')') throw fail();
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = Polynomial::constant(vars, field, field.reduce(read_int()));
        } else {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
                ++pos;
            if (start == pos) throw fail();
            base = Polynomial::variable(vars, field, vars->index_of(text.substr(start, pos - start)));
        }
        if (peek() == '^') {
            ++pos;
            base = base.pow(static_cast<unsigned>(read_int()));
        }
        return base;
    };
    auto term = [&]() -> Polynomial {
        Polynomial p = factor();
        while (peek() == '*') {
            ++pos;
            p = p * factor();
        }
        return p;
    };
    expr = [&]() -> Polynomial {
        Polynomial p = term();
        while (peek() == '+') {
            ++pos;
            p = p + term();
        }
        return p;
    };
    Polynomial result = expr();
    if (peek() != '\0') throw fail();
    return result;
}

// ---------------------------------------------------------------------------

LinearElimination::LinearElimination(VariableSetPtr vars, PrimeField field,
                                     std::map<std::size_t, Polynomial> substitutions)
    : vars_(std::move(vars)), field_(field), substitutions_(std::move(substitutions)) {
    for (const auto& [idx, target] : substitutions_) {
        if (idx >= vars_->size()) throw StructuralError("eliminated variable index out of range");
        if (!same_variables(target.variables(), vars_)) throw StructuralError("substitution over a different ring");
        for (const auto& [other, unused] : substitutions_)
            if (target.involves(other))
                throw StructuralError("cyclic substitution: target of " + (*vars_)[idx].name + " mentions " +
                                      (*vars_)[other].name);
        for (const auto& t : target.terms()) {
            int total = 0;
            for (auto x : t.exponents) total += x;
            if (total != 1) throw StructuralError("substitution target for " + (*vars_)[idx].name + " is not linear");
            if (weighted_degree(*vars_, t.exponents) != vars_->degree(idx))
                throw StructuralError("substitution target for " + (*vars_)[idx].name + " changes degree");
        }
    }
}

LinearElimination LinearElimination::from_relation(VariableSetPtr vars, PrimeField field,
                                                   const std::string& eliminated, const Polynomial& relation) {
    const auto idx = vars->index_of(eliminated);
    Exponents unit(vars->size(), 0);
    unit[idx] = 1;
    Scalar lead = 0;
    for (const auto& t : relation.terms())
        if (t.exponents == unit) lead = t.coefficient;
    if (lead == 0) throw StructuralError("relation does not involve " + eliminated);
    // x = -(rest)/lead
    const auto x = Polynomial::variable(vars, field, idx);
    Polynomial rest = relation - x.scaled(lead);
    std::map<std::size_t, Polynomial> subs;
    subs.emplace(idx, rest.scaled(field.neg(field.inv(lead))));
    return LinearElimination(std::move(vars), field, std::move(subs));
}

Polynomial LinearElimination::apply(const Polynomial& p) const {
    if (substitutions_.empty()) return p;
    if (!same_variables(p.variables(), vars_)) throw StructuralError("elimination over a different ring");
    std::vector<Polynomial> images;
    images.reserve(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = substitutions_.find(i);
        images.push_back(it != substitutions_.end() ? it->second : Polynomial::variable(vars_, field_, i));
    }
    return substitute(p, images);
}

Polynomial eliminate(const Polynomial& p, const LinearElimination& elim) { return elim.apply(p); }

}  // namespace hodgecalc
