#pragma once

#include <cstdint>

#include "gramderiv/rational.hpp"

namespace gramderiv {

/// C(n, k); zero outside 0 <= k <= n. Throws DomainError for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// n!_r = n (n-r)!_r with n!_r = 1 for 1-r <= n <= 0.
/// Throws DomainError for r < 1 or n < 1 - r.
BigInt multifactorial(std::int64_t n, std::int64_t r);

/// prod_{j=0}^{n-1} (m + j r), i.e. (m+(n-1)r)!_r / (m-r)!_r without the
/// division. Throws DomainError for n < 0 or r < 1.
BigInt rising_product(std::int64_t m, std::int64_t n, std::int64_t r);

} // namespace gramderiv
