#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gramderiv {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}

    /// Throws ArithmeticError("division by zero") when `den` is zero.
    Rational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer powers; a negative exponent of zero throws ArithmeticError.
    Rational pow(std::int64_t k) const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    /// Always "p/q", also for integers ("2/1").
    std::string to_fraction_string() const;

    Rational operator-() const;
    Rational abs() const;

    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);

    Rational& operator+=(const Rational& y);
    Rational& operator*=(const Rational& y);

    friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.value_ < y.value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

Rational make_rational(const BigInt& p, const BigInt& q);

} // namespace gramderiv
