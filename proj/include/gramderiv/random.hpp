#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gramderiv/grammar.hpp"

namespace gramderiv {

/// Seeded generator whose output sequence depends only on the seed (raw
/// mt19937_64 draws, no implementation-defined distributions).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
};

struct PolynomialShape {
    std::vector<Variable> vars;
    int max_terms = 3;
    std::int64_t coeff_lo = -9;
    std::int64_t coeff_hi = 9;
    std::int64_t exp_lo = -4;
    std::int64_t exp_hi = 4;
    /// When positive, exponent vectors are rejected unless their sum is at most this.
    std::int64_t max_degree = 0;
};

/// Sum of up to shape.max_terms random terms (may cancel to fewer, or to zero).
Polynomial random_polynomial(RandomSource& rng, const PolynomialShape& shape);

/// Random nonzero single term.
Polynomial random_term(RandomSource& rng, const PolynomialShape& shape);

/// Random nonzero rational p/q with |p| <= 9, 1 <= q <= 9.
Rational random_rational(RandomSource& rng);

/// Each letter in `lhs` gets a production drawn from `rhs_shape` with
/// probability `production_odds` percent; the others stay constants.
Grammar random_grammar(RandomSource& rng, const std::vector<Variable>& lhs,
                       const PolynomialShape& rhs_shape, int production_odds = 100);

} // namespace gramderiv
