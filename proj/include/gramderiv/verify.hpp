#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gramderiv/derive.hpp"
#include "gramderiv/numbers.hpp"

namespace gramderiv {

/// One comparison. Both sides are kept as canonical text so a failure can be
/// read off directly; `pass` holds exactly when the two sides are equal.
struct Case {
    nlohmann::ordered_json params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

class Report {
public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(nlohmann::ordered_json params, const Polynomial& lhs, const Polynomial& rhs);
    void add(nlohmann::ordered_json params, const BigInt& lhs, const BigInt& rhs);
    void add(nlohmann::ordered_json params, const std::string& lhs, const std::string& rhs);
    /// Appends every case of `other`.
    void merge(const Report& other);

    const std::string& suite() const noexcept { return suite_; }
    const std::vector<Case>& cases() const noexcept { return cases_; }
    std::size_t passed() const noexcept { return passed_; }
    std::size_t failed() const noexcept { return cases_.size() - passed_; }
    bool ok() const noexcept { return failed() == 0; }

private:
    std::string suite_;
    std::vector<Case> cases_;
    std::size_t passed_ = 0;
};

/// {"suite", "passed", "failed", "cases": [{"params", "lhs", "rhs", "pass"}]}
nlohmann::ordered_json to_json(const Report& report);

// Suites. Every comparison is exact.

/// D^n(uv) against sum_k C(n,k) D^k(u) D^(n-k)(v) for n = 0..n_max.
Report verify_leibniz(const Grammar& g, const Polynomial& u, const Polynomial& v, std::int64_t n_max);

/// Under a -> a: coefficient of a^2 in D^n(a^2) against sum_k C(n,k), for
/// n = 0..n_max, and for n >= 1 the Leibniz expansion of D^n(a a^-1)
/// against D^n(1) = 0.
Report verify_binomial_sums(std::int64_t n_max);

/// Product form of the D^n(a^(2m)) multifactorial identity over the box
/// 1..m_max x 0..n_max x 1..r_max, the engine coefficient of a^(2m+nr), and
/// both corollaries (((n+1)r)!_r and (2n)!!).
Report verify_multifactorial_identity(std::int64_t m_max, std::int64_t n_max, std::int64_t r_max);

/// D^n(a^m) = m^n a^m under a -> a for |m| <= m_max, and
/// D^n(a^m) = rising_product(m,n,r) a^(m+nr) under a -> a^(r+1).
Report verify_closed_forms(std::int64_t m_max, std::int64_t n_max, std::int64_t r_max);

/// Matrix grammar [a -> a; b -> b], [a -> a^r b; b -> a^(r-1) b^2]: the
/// single-step formulas for D_1, D_2 on a^m b^n (0 <= m, n <= 6) and the four
/// closed forms of D_12^n, D_21^n on a and b.
Report verify_matrix_closed_forms(std::int64_t n_max, std::int64_t r_max);

/// Falsification harness for: D(a^2) = D(b^2) = D(ab) implies D(a) = D(b) = 0,
/// over `trials` random grammars on {a, b} plus the fixed near-miss grammars.
Report verify_nonexistence(std::int64_t trials, std::uint64_t seed);

/// Randomized checks of the calculus rules: linearity, power rule, D(a^0) = 0,
/// quotient rule, generalized product rule, Leibniz, stabilization, and word
/// composition. `trials` cases per rule.
Report verify_calculus_rules(std::int64_t trials, std::uint64_t seed);

/// Defaults for the box bounds.
inline constexpr std::int64_t kDefaultMMax = 6;
inline constexpr std::int64_t kDefaultNMax = 8;
inline constexpr std::int64_t kDefaultRMax = 5;

/// The matrix grammar [a -> a; b -> b], [a -> a^r b; b -> a^(r-1) b^2].
MatrixGrammar multifactorial_matrix_grammar(std::int64_t r);

} // namespace gramderiv
