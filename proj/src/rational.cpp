#include "gramderiv/rational.hpp"

#include "gramderiv/error.hpp"

namespace gramderiv {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ArithmeticError("division by zero");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational make_rational(const BigInt& p, const BigInt& q) { return Rational(p, q); }

Rational Rational::pow(std::int64_t k) const {
    if (k == 0) {
        return Rational(1);
    }
    if (k < 0 && is_zero()) {
        throw ArithmeticError("division by zero");
    }
    // |k| fits in unsigned long for every k except INT64_MIN, which is
    // handled by the unsigned negation below.
    const auto magnitude = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1UL
                                 : static_cast<unsigned long>(k);
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), magnitude);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), magnitude);
    if (k < 0) {
        std::swap(num, den);
    }
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_str();
}

std::string Rational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }

Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    return Rational(mpq_class(x.value_ / y.value_));
}

Rational& Rational::operator+=(const Rational& y) {
    value_ += y.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& y) {
    value_ *= y.value_;
    return *this;
}

} // namespace gramderiv
