#include "gramderiv/random.hpp"

namespace gramderiv {

std::int64_t RandomSource::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

namespace {

Monomial random_monomial(RandomSource& rng, const PolynomialShape& shape) {
    while (true) {
        std::vector<Monomial::Factor> factors;
        std::int64_t degree = 0;
        for (const auto v : shape.vars) {
            const auto e = rng.uniform(shape.exp_lo, shape.exp_hi);
            factors.emplace_back(v, e);
            degree += e;
        }
        if (shape.max_degree <= 0 || degree <= shape.max_degree) {
            return Monomial(factors);
        }
    }
}

} // namespace

Polynomial random_polynomial(RandomSource& rng, const PolynomialShape& shape) {
    Polynomial::TermMap terms;
    const auto count = rng.uniform(0, shape.max_terms);
    for (std::int64_t i = 0; i < count; ++i) {
        const Rational c(static_cast<long>(rng.uniform(shape.coeff_lo, shape.coeff_hi)));
        accumulate(terms, random_monomial(rng, shape), c);
    }
    return Polynomial::from_terms(std::move(terms));
}

Polynomial random_term(RandomSource& rng, const PolynomialShape& shape) {
    std::int64_t c = 0;
    while (c == 0) {
        c = rng.uniform(shape.coeff_lo, shape.coeff_hi);
    }
    return Polynomial(Rational(static_cast<long>(c)), random_monomial(rng, shape));
}

Rational random_rational(RandomSource& rng) {
    std::int64_t p = 0;
    while (p == 0) {
        p = rng.uniform(-9, 9);
    }
    return Rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(rng.uniform(1, 9))));
}

Grammar random_grammar(RandomSource& rng, const std::vector<Variable>& lhs,
                       const PolynomialShape& rhs_shape, int production_odds) {
    Grammar::Productions productions;
    for (const auto v : lhs) {
        if (rng.uniform(1, 100) <= production_odds) {
            productions.emplace(v, random_polynomial(rng, rhs_shape));
        }
    }
    return Grammar(std::move(productions));
}

} // namespace gramderiv
