#include "gramderiv/numbers.hpp"

#include <string>

#include "gramderiv/error.hpp"

namespace gramderiv {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw DomainError("binomial: n must be nonnegative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt multifactorial(std::int64_t n, std::int64_t r) {
    if (r < 1) {
        throw DomainError("multifactorial: r must be at least 1, got " + std::to_string(r));
    }
    if (n < 1 - r) {
        throw DomainError("multifactorial: n!_r is undefined for n < 1 - r (n = " + std::to_string(n) +
                          ", r = " + std::to_string(r) + ")");
    }
    BigInt out = 1;
    for (std::int64_t k = n; k > 0; k -= r) {
        out *= BigInt(static_cast<long>(k));
    }
    return out;
}

BigInt rising_product(std::int64_t m, std::int64_t n, std::int64_t r) {
    if (n < 0) {
        throw DomainError("rising_product: n must be nonnegative, got " + std::to_string(n));
    }
    if (r < 1) {
        throw DomainError("rising_product: r must be at least 1, got " + std::to_string(r));
    }
    BigInt out = 1;
    BigInt factor(static_cast<long>(m));
    const BigInt step(static_cast<long>(r));
    for (std::int64_t j = 0; j < n; ++j) {
        out *= factor;
        factor += step;
    }
    return out;
}

} // namespace gramderiv
