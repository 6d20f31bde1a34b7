#include "gramderiv/polynomial.hpp"

#include <algorithm>

#include "gramderiv/error.hpp"

namespace gramderiv {

namespace {

Monomial::Exponent checked_add(Monomial::Exponent x, Monomial::Exponent y) {
    Monomial::Exponent out;
    if (__builtin_add_overflow(x, y, &out)) {
        throw OverflowError();
    }
    return out;
}

Monomial::Exponent checked_mul(Monomial::Exponent x, Monomial::Exponent y) {
    Monomial::Exponent out;
    if (__builtin_mul_overflow(x, y, &out)) {
        throw OverflowError();
    }
    return out;
}

} // namespace

Variable::Variable(char name) : name_(name) {
    if (name < 'a' || name > 'z') {
        throw DomainError(std::string("invalid variable '") + name + "': expected a lowercase letter");
    }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, Exponent e) {
    if (e != 0) {
        factors_.emplace_back(v, e);
    }
}

Monomial::Monomial(const std::vector<Factor>& factors) {
    for (const auto& [v, e] : factors) {
        *this = *this * Monomial(v, e);
    }
}

Monomial::Exponent Monomial::exponent(Variable v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Variable x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

WideInt Monomial::total_degree() const {
    WideInt sum = 0;
    for (const auto& f : factors_) {
        sum += f.second;
    }
    return sum;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.factors_.reserve(x.factors_.size() + y.factors_.size());
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() || j != y.factors_.end()) {
        if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == x.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            const auto e = checked_add(i->second, j->second);
            if (e != 0) {
                out.factors_.emplace_back(i->first, e);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial Monomial::pow(Exponent k) const {
    Monomial out;
    if (k == 0) {
        return out;
    }
    out.factors_.reserve(factors_.size());
    for (const auto& [v, e] : factors_) {
        out.factors_.emplace_back(v, checked_mul(e, k));
    }
    return out;
}

Monomial Monomial::shifted(Variable v, Exponent delta) const {
    return *this * Monomial(v, delta);
}

std::string Monomial::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += v.name();
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

bool CanonicalOrder::operator()(const Monomial& x, const Monomial& y) const {
    const auto dx = x.total_degree();
    const auto dy = y.total_degree();
    if (dx != dy) {
        return dx > dy;
    }
    // Walk both sorted factor lists; a missing letter has exponent 0.
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    auto i = fx.begin();
    auto j = fy.begin();
    while (i != fx.end() || j != fy.end()) {
        if (j == fy.end() || (i != fx.end() && i->first < j->first)) {
            if (i->second != 0) {
                return i->second > 0;
            }
            ++i;
        } else if (i == fx.end() || j->first < i->first) {
            if (j->second != 0) {
                return j->second < 0;
            }
            ++j;
        } else {
            if (i->second != j->second) {
                return i->second > j->second;
            }
            ++i;
            ++j;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial

void accumulate(Polynomial::TermMap& terms, const Monomial& m, const Rational& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) {
        terms_.emplace(Monomial(), constant);
    }
}

Polynomial::Polynomial(Variable v) { terms_.emplace(Monomial(v), Rational(1)); }

Polynomial::Polynomial(const Rational& coeff, const Monomial& m) {
    if (!coeff.is_zero()) {
        terms_.emplace(m, coeff);
    }
}

Polynomial Polynomial::from_terms(TermMap terms) {
    std::erase_if(terms, [](const auto& t) { return t.second.is_zero(); });
    Polynomial out;
    out.terms_ = std::move(terms);
    return out;
}

Rational Polynomial::coeff_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) {
        t.second = -t.second;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& v) {
    for (const auto& [m, c] : v.terms_) {
        accumulate(terms_, m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& v) {
    for (const auto& [m, c] : v.terms_) {
        accumulate(terms_, m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& v) {
    *this = *this * v;
    return *this;
}

Polynomial operator+(const Polynomial& u, const Polynomial& v) {
    Polynomial out = u;
    out += v;
    return out;
}

Polynomial operator-(const Polynomial& u, const Polynomial& v) {
    Polynomial out = u;
    out -= v;
    return out;
}

Polynomial operator*(const Polynomial& u, const Polynomial& v) {
    Polynomial::TermMap out;
    for (const auto& [mu, cu] : u.terms_) {
        for (const auto& [mv, cv] : v.terms_) {
            accumulate(out, mu * mv, cu * cv);
        }
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial pow(const Polynomial& u, std::int64_t k) {
    if (k < 0) {
        if (u.is_zero()) {
            throw ArithmeticError("division by zero");
        }
        if (!u.is_single_term()) {
            throw ArithmeticError("negative power of non-monomial");
        }
        const auto& [m, c] = *u.terms().begin();
        return Polynomial(c.pow(k), m.pow(k));
    }
    if (u.is_single_term()) {
        const auto& [m, c] = *u.terms().begin();
        return Polynomial(c.pow(k), m.pow(k));
    }
    Polynomial result(1);
    Polynomial base = u;
    for (auto e = static_cast<std::uint64_t>(k); e != 0; e >>= 1) {
        if (e & 1U) {
            result *= base;
        }
        if (e > 1) {
            base *= base;
        }
    }
    return result;
}

Rational coeff_of(const Polynomial& u, const Monomial& m) { return u.coeff_of(m); }

std::string canonical_text(const Polynomial& u) {
    if (u.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        if (first) {
            if (c.sign() < 0) {
                out += '-';
            }
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = c.abs();
        if (m.is_unit()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += m.to_string();
        } else {
            out += magnitude.to_string();
            out += ' ';
            out += m.to_string();
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const Monomial& m) {
    auto out = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.factors()) {
        out[std::string(1, v.name())] = e;
    }
    return out;
}

nlohmann::ordered_json to_json(const Polynomial& u) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : u.terms()) {
        out.push_back({{"coeff", c.to_fraction_string()}, {"monomial", to_json(m)}});
    }
    return out;
}

} // namespace gramderiv
