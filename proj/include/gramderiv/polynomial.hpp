#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gramderiv/rational.hpp"

namespace gramderiv {

__extension__ typedef __int128 WideInt;

/// A letter of the alphabet: one lowercase ASCII character.
class Variable {
public:
    /// Throws DomainError unless `name` is in 'a'..'z'.
    explicit Variable(char name);

    char name() const noexcept { return name_; }

    friend auto operator<=>(const Variable&, const Variable&) = default;

private:
    char name_;
};

/// Product of letters raised to nonzero signed exponents. The empty product is 1.
/// Factors are kept sorted by letter; no stored exponent is zero.
class Monomial {
public:
    using Exponent = std::int64_t;
    using Factor = std::pair<Variable, Exponent>;

    Monomial() = default;
    explicit Monomial(Variable v, Exponent e = 1);
    /// Factors in any order; repeated letters are combined, zero exponents dropped.
    explicit Monomial(const std::vector<Factor>& factors);

    Exponent exponent(Variable v) const;
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }

    /// Sum of exponents, widened so it cannot overflow.
    WideInt total_degree() const;

    /// Exponent maps add; throws OverflowError on 64-bit overflow.
    friend Monomial operator*(const Monomial& x, const Monomial& y);
    /// Scales every exponent by k; throws OverflowError on 64-bit overflow.
    Monomial pow(Exponent k) const;
    /// Adds `delta` to the exponent of `v`.
    Monomial shifted(Variable v, Exponent delta) const;

    /// "a b^2 c^-1"; the unit monomial renders as "1".
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded order: higher total degree first, then lexicographic over the
/// alphabetically sorted letters with the larger exponent first.
struct CanonicalOrder {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Sparse Laurent polynomial with rational coefficients. Terms are stored in
/// canonical order with no zero coefficient, so structural equality is
/// equality of formal functions.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(Variable v);
    Polynomial(const Rational& coeff, const Monomial& m);

    /// Adopts `terms`, dropping zero coefficients.
    static Polynomial from_terms(TermMap terms);

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_single_term() const noexcept { return terms_.size() == 1; }

    Rational coeff_of(const Monomial& m) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& u, const Polynomial& v);
    friend Polynomial operator-(const Polynomial& u, const Polynomial& v);
    friend Polynomial operator*(const Polynomial& u, const Polynomial& v);

    Polynomial& operator+=(const Polynomial& v);
    Polynomial& operator-=(const Polynomial& v);
    Polynomial& operator*=(const Polynomial& v);

    friend bool operator==(const Polynomial& u, const Polynomial& v) { return u.terms_ == v.terms_; }

private:
    TermMap terms_;
};

/// Adds coeff * m into `terms`, erasing the entry if it cancels to zero.
void accumulate(Polynomial::TermMap& terms, const Monomial& m, const Rational& coeff);

/// u^k. Negative k is only defined for a single nonzero term.
/// Throws ArithmeticError("negative power of non-monomial") or ("division by zero").
Polynomial pow(const Polynomial& u, std::int64_t k);

Rational coeff_of(const Polynomial& u, const Monomial& m);

/// Deterministic text form, e.g. "2 a b + b^2", "3 a - 2 b", "0".
std::string canonical_text(const Polynomial& u);

/// [{"coeff": "p/q", "monomial": {"a": 1, ...}}, ...] in canonical term order.
nlohmann::ordered_json to_json(const Polynomial& u);
nlohmann::ordered_json to_json(const Monomial& m);

} // namespace gramderiv
