#include "gramderiv/verify.hpp"

#include "gramderiv/error.hpp"
#include "gramderiv/random.hpp"

namespace gramderiv {

using nlohmann::ordered_json;

void Report::add(ordered_json params, const std::string& lhs, const std::string& rhs) {
    const bool pass = lhs == rhs;
    passed_ += pass ? 1 : 0;
    cases_.push_back(Case{std::move(params), lhs, rhs, pass});
}

void Report::add(ordered_json params, const Polynomial& lhs, const Polynomial& rhs) {
    // Canonical text is injective on canonical polynomials, so comparing the
    // texts is comparing the values.
    add(std::move(params), canonical_text(lhs), canonical_text(rhs));
}

void Report::add(ordered_json params, const BigInt& lhs, const BigInt& rhs) {
    add(std::move(params), lhs.get_str(), rhs.get_str());
}

void Report::merge(const Report& other) {
    for (const auto& c : other.cases_) {
        passed_ += c.pass ? 1 : 0;
        cases_.push_back(c);
    }
}

ordered_json to_json(const Report& report) {
    auto cases = ordered_json::array();
    for (const auto& c : report.cases()) {
        cases.push_back({{"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    }
    return {{"suite", report.suite()},
            {"passed", report.passed()},
            {"failed", report.failed()},
            {"cases", std::move(cases)}};
}

namespace {

const Variable kA('a');
const Variable kB('b');
const Variable kC('c');

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw DomainError(message);
    }
}

Polynomial letter_power(Variable v, std::int64_t e) { return Polynomial(Rational(1), Monomial(v, e)); }

Polynomial scaled(const BigInt& c, const Monomial& m) { return Polynomial(Rational(c), m); }

BigInt power(const BigInt& base, std::int64_t e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

/// D^0(u), ..., D^n_max(u).
std::vector<Polynomial> derivative_table(const Grammar& g, const Polynomial& u, std::int64_t n_max) {
    std::vector<Polynomial> out{u};
    for (std::int64_t k = 1; k <= n_max; ++k) {
        out.push_back(derive(g, out.back()));
    }
    return out;
}

Polynomial leibniz_sum(const std::vector<Polynomial>& du, const std::vector<Polynomial>& dv, std::int64_t n) {
    Polynomial sum;
    for (std::int64_t k = 0; k <= n; ++k) {
        sum += Polynomial(Rational(binomial(n, k))) * du[k] * dv[n - k];
    }
    return sum;
}

} // namespace

MatrixGrammar multifactorial_matrix_grammar(std::int64_t r) {
    require(r >= 1, "r must be at least 1");
    Grammar first(Grammar::Productions{{kA, Polynomial(kA)}, {kB, Polynomial(kB)}});
    Grammar second(Grammar::Productions{
        {kA, Polynomial(Rational(1), Monomial({{kA, r}, {kB, 1}}))},
        {kB, Polynomial(Rational(1), Monomial({{kA, r - 1}, {kB, 2}}))},
    });
    return MatrixGrammar(std::vector<Grammar>{std::move(first), std::move(second)});
}

Report verify_leibniz(const Grammar& g, const Polynomial& u, const Polynomial& v, std::int64_t n_max) {
    require(n_max >= 0, "n_max must be nonnegative");
    Report report("leibniz");
    const auto du = derivative_table(g, u, n_max);
    const auto dv = derivative_table(g, v, n_max);
    const auto duv = derivative_table(g, u * v, n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        report.add({{"n", n}}, duv[n], leibniz_sum(du, dv, n));
    }
    return report;
}

Report verify_binomial_sums(std::int64_t n_max) {
    require(n_max >= 0, "n_max must be nonnegative");
    Report report("binomial-sums");
    const Grammar g(Grammar::Productions{{kA, Polynomial(kA)}});
    const Monomial a2(kA, 2);

    const auto d_a_squared = derivative_table(g, letter_power(kA, 2), n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        BigInt sum = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            sum += binomial(n, k);
        }
        report.add({{"identity", "binomial-sum"}, {"n", n}}, coeff_of(d_a_squared[n], a2).to_string(),
                   sum.get_str());
    }

    // D^n(a a^-1) expanded by Leibniz, with D^k(a^-1) = (-1)^k a^-1 supplied
    // by the engine; the coefficient of 1 is the alternating sum.
    const auto d_a = derivative_table(g, Polynomial(kA), n_max);
    const auto d_inverse = derivative_table(g, letter_power(kA, -1), n_max);
    const auto d_one = derivative_table(g, Polynomial(kA) * letter_power(kA, -1), n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        report.add({{"identity", "alternating-sum"}, {"n", n}}, leibniz_sum(d_a, d_inverse, n), d_one[n]);
    }
    return report;
}

Report verify_multifactorial_identity(std::int64_t m_max, std::int64_t n_max, std::int64_t r_max) {
    require(m_max >= 1 && r_max >= 1 && n_max >= 0, "need m_max >= 1, r_max >= 1, n_max >= 0");
    Report report("multifactorial-identity");

    for (std::int64_t r = 1; r <= r_max; ++r) {
        const Grammar g(Grammar::Productions{{kA, letter_power(kA, r + 1)}});
        for (std::int64_t m = 1; m <= m_max; ++m) {
            Polynomial engine = letter_power(kA, 2 * m);
            for (std::int64_t n = 0; n <= n_max; ++n) {
                if (n > 0) {
                    engine = derive(g, engine);
                }
                const BigInt lhs = rising_product(2 * m, n, r);
                BigInt rhs = 0;
                for (std::int64_t k = 0; k <= n; ++k) {
                    rhs += binomial(n, k) * rising_product(m, k, r) * rising_product(m, n - k, r);
                }
                report.add({{"identity", "product-form"}, {"m", m}, {"n", n}, {"r", r}}, lhs, rhs);
                report.add({{"identity", "engine-coefficient"}, {"m", m}, {"n", n}, {"r", r}}, engine,
                           scaled(lhs, Monomial(kA, 2 * m + n * r)));
            }
        }
    }

    // ((n+1)r)!_r = r sum_k C(n,k) (kr)!_r ((n-k)r)!_r
    for (std::int64_t r = 1; r <= r_max; ++r) {
        for (std::int64_t n = 0; n <= n_max; ++n) {
            BigInt sum = 0;
            for (std::int64_t k = 0; k <= n; ++k) {
                sum += binomial(n, k) * multifactorial(k * r, r) * multifactorial((n - k) * r, r);
            }
            report.add({{"identity", "corollary-multifactorial"}, {"n", n}, {"r", r}},
                       multifactorial((n + 1) * r, r), BigInt(static_cast<long>(r)) * sum);
        }
    }

    // (2n)!! = sum_k C(n,k) (2(n-k)-1)!! (2k-1)!!
    if (r_max >= 2) {
        for (std::int64_t n = 0; n <= n_max; ++n) {
            BigInt sum = 0;
            for (std::int64_t k = 0; k <= n; ++k) {
                sum += binomial(n, k) * multifactorial(2 * (n - k) - 1, 2) * multifactorial(2 * k - 1, 2);
            }
            const BigInt even = multifactorial(2 * n, 2);
            report.add({{"identity", "corollary-double-factorial"}, {"n", n}}, even, sum);
            report.add({{"identity", "double-factorial-lhs"}, {"n", n}}, rising_product(2, n, 2), even);
        }
    }
    return report;
}

Report verify_closed_forms(std::int64_t m_max, std::int64_t n_max, std::int64_t r_max) {
    require(m_max >= 1 && r_max >= 1 && n_max >= 0, "need m_max >= 1, r_max >= 1, n_max >= 0");
    Report report("closed-forms");

    const Grammar identity(Grammar::Productions{{kA, Polynomial(kA)}});
    for (std::int64_t m = -m_max; m <= m_max; ++m) {
        const auto table = derivative_table(identity, letter_power(kA, m), n_max);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            report.add({{"grammar", "a -> a"}, {"m", m}, {"n", n}}, table[n],
                       scaled(power(BigInt(static_cast<long>(m)), n), Monomial(kA, m)));
        }
    }

    for (std::int64_t r = 1; r <= r_max; ++r) {
        const Grammar g(Grammar::Productions{{kA, letter_power(kA, r + 1)}});
        const std::string name = g.to_text();
        for (std::int64_t m = 1; m <= m_max; ++m) {
            const auto table = derivative_table(g, letter_power(kA, m), n_max);
            for (std::int64_t n = 0; n <= n_max; ++n) {
                report.add({{"grammar", name}, {"m", m}, {"n", n}, {"r", r}}, table[n],
                           scaled(rising_product(m, n, r), Monomial(kA, m + n * r)));
            }
        }
    }
    return report;
}

Report verify_matrix_closed_forms(std::int64_t n_max, std::int64_t r_max) {
    require(n_max >= 0 && r_max >= 1, "need n_max >= 0, r_max >= 1");
    Report report("matrix-closed-forms");
    constexpr std::int64_t kLemmaMax = 6;

    for (std::int64_t r = 1; r <= r_max; ++r) {
        const MatrixGrammar mg = multifactorial_matrix_grammar(r);

        for (std::int64_t m = 0; m <= kLemmaMax; ++m) {
            for (std::int64_t n = 0; n <= kLemmaMax; ++n) {
                const Polynomial u(Rational(1), Monomial({{kA, m}, {kB, n}}));
                const BigInt sum(static_cast<long>(m + n));
                report.add({{"formula", "D1(a^m b^n)"}, {"r", r}, {"m", m}, {"n", n}},
                           derive_indexed(mg, 1, u), scaled(sum, Monomial({{kA, m}, {kB, n}})));
                report.add({{"formula", "D2(a^m b^n)"}, {"r", r}, {"m", m}, {"n", n}},
                           derive_indexed(mg, 2, u), scaled(sum, Monomial({{kA, m + r - 1}, {kB, n + 1}})));
            }
        }

        const OperatorWord w12({1, 2});
        const OperatorWord w21({2, 1});
        Polynomial d12a(kA);
        Polynomial d21a(kA);
        Polynomial d12b(kB);
        Polynomial d21b(kB);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            if (n > 0) {
                d12a = derive_word(mg, w12, d12a);
                d21a = derive_word(mg, w21, d21a);
                d12b = derive_word(mg, w12, d12b);
                d21b = derive_word(mg, w21, d21b);
            }
            const BigInt high = multifactorial(n * r + 1, r);
            const BigInt low = multifactorial((n - 1) * r + 1, r);
            const Monomial on_a({{kA, n * r - (n - 1)}, {kB, n}});
            const Monomial on_b({{kA, n * r - n}, {kB, n + 1}});
            report.add({{"formula", "D12^n(a)"}, {"r", r}, {"n", n}}, d12a, scaled(high * low, on_a));
            report.add({{"formula", "D21^n(a)"}, {"r", r}, {"n", n}}, d21a, scaled(low * low, on_a));
            report.add({{"formula", "D12^n(b)"}, {"r", r}, {"n", n}}, d12b, scaled(high * low, on_b));
            report.add({{"formula", "D21^n(b)"}, {"r", r}, {"n", n}}, d21b, scaled(low * low, on_b));
        }
    }
    return report;
}

namespace {

// The implication D(a^2) = D(b^2) = D(ab)  =>  D(a) = D(b) = 0. A case whose
// premise fails holds vacuously and is recorded as such.
void add_nonexistence_case(Report& report, ordered_json params, const Grammar& g) {
    const Polynomial a(kA);
    const Polynomial b(kB);
    const Polynomial da2 = derive(g, a * a);
    const Polynomial db2 = derive(g, b * b);
    const Polynomial dab = derive(g, a * b);
    const bool premise = da2 == db2 && db2 == dab;
    params["grammar"] = g.to_text();
    params["premise"] = premise;
    if (!premise) {
        report.add(std::move(params), std::string("vacuous"), std::string("vacuous"));
        return;
    }
    report.add(std::move(params),
               "D(a) = " + canonical_text(derive(g, a)) + "; D(b) = " + canonical_text(derive(g, b)),
               std::string("D(a) = 0; D(b) = 0"));
}

std::string equality_word(const Polynomial& x, const Polynomial& y) { return x == y ? "equal" : "different"; }

} // namespace

Report verify_nonexistence(std::int64_t trials, std::uint64_t seed) {
    require(trials >= 1, "trials must be at least 1");
    Report report("nonexistence");
    const Polynomial a(kA);
    const Polynomial b(kB);
    const Polynomial two_a2b(Rational(2), Monomial({{kA, 2}, {kB, 1}}));

    // {a -> ab; b -> a^2}: D(a^2) = D(b^2) = 2a^2b while D(a) != D(b).
    const Grammar near_miss_1 = parse_grammar("a -> ab; b -> a^2").at(1);
    const std::string text_1 = near_miss_1.to_text();
    report.add({{"fixed", "near-miss-1"}, {"check", "D(a^2)"}}, derive(near_miss_1, a * a), two_a2b);
    report.add({{"fixed", "near-miss-1"}, {"check", "D(b^2)"}}, derive(near_miss_1, b * b), two_a2b);
    report.add({{"fixed", "near-miss-1"}, {"check", "D(a) vs D(b)"}},
               equality_word(derive(near_miss_1, a), derive(near_miss_1, b)), std::string("different"));
    report.add({{"fixed", "near-miss-1"}, {"check", "D(ab) vs 2a^2b"}},
               equality_word(derive(near_miss_1, a * b), two_a2b), std::string("different"));
    add_nonexistence_case(report, {{"fixed", "near-miss-1"}, {"check", "implication"}}, near_miss_1);

    // {a -> ab; b -> 2ab - b^2}: D(ab) = D(a^2) = 2a^2b while D(a) != D(b).
    const Grammar near_miss_2 = parse_grammar("a -> ab; b -> 2ab - b^2").at(1);
    report.add({{"fixed", "near-miss-2"}, {"check", "D(ab)"}}, derive(near_miss_2, a * b), two_a2b);
    report.add({{"fixed", "near-miss-2"}, {"check", "D(a^2)"}}, derive(near_miss_2, a * a), two_a2b);
    report.add({{"fixed", "near-miss-2"}, {"check", "D(a) vs D(b)"}},
               equality_word(derive(near_miss_2, a), derive(near_miss_2, b)), std::string("different"));
    report.add({{"fixed", "near-miss-2"}, {"check", "D(b^2) vs 2a^2b"}},
               equality_word(derive(near_miss_2, b * b), two_a2b), std::string("different"));
    add_nonexistence_case(report, {{"fixed", "near-miss-2"}, {"check", "implication"}}, near_miss_2);

    add_nonexistence_case(report, {{"fixed", "no-productions"}, {"check", "implication"}}, Grammar());

    // Right-hand sides: at most 3 terms a^i b^j with i, j >= 0, i + j <= 3,
    // coefficients in [-3, 3].
    RandomSource rng(seed);
    PolynomialShape shape;
    shape.vars = {kA, kB};
    shape.max_terms = 3;
    shape.coeff_lo = -3;
    shape.coeff_hi = 3;
    shape.exp_lo = 0;
    shape.exp_hi = 3;
    shape.max_degree = 3;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        const Grammar g = random_grammar(rng, {kA, kB}, shape);
        add_nonexistence_case(report, {{"trial", trial}, {"seed", seed}}, g);
    }
    return report;
}

Report verify_calculus_rules(std::int64_t trials, std::uint64_t seed) {
    require(trials >= 1, "trials must be at least 1");
    Report report("calculus-rules");
    RandomSource rng(seed);

    PolynomialShape rhs_shape;
    rhs_shape.vars = {kA, kB, kC};
    rhs_shape.max_terms = 2;
    rhs_shape.coeff_lo = -3;
    rhs_shape.coeff_hi = 3;
    rhs_shape.exp_lo = 0;
    rhs_shape.exp_hi = 2;

    PolynomialShape poly_shape;
    poly_shape.vars = {kA, kB, kC};
    poly_shape.max_terms = 3;
    poly_shape.exp_lo = -2;
    poly_shape.exp_hi = 2;

    PolynomialShape small_shape = poly_shape;
    small_shape.max_terms = 2;

    PolynomialShape constant_shape = poly_shape;
    constant_shape.vars = {kC};

    const std::vector<Variable> letters{kA, kB, kC};

    for (std::int64_t t = 0; t < trials; ++t) {
        const Grammar g = random_grammar(rng, letters, rhs_shape, 80);
        const auto params = [&](const char* rule) {
            return ordered_json{{"rule", rule}, {"trial", t}, {"grammar", g.to_text()}};
        };

        {
            const Polynomial u = random_polynomial(rng, poly_shape);
            const Polynomial v = random_polynomial(rng, poly_shape);
            const Polynomial alpha(random_rational(rng));
            const Polynomial beta(random_rational(rng));
            report.add(params("linearity"), derive(g, alpha * u + beta * v),
                       alpha * derive(g, u) + beta * derive(g, v));
        }
        {
            const Polynomial v = random_term(rng, poly_shape);
            const std::int64_t n = rng.uniform(-4, 4);
            const Polynomial rhs = n == 0 ? Polynomial() : Polynomial(n) * pow(v, n - 1) * derive(g, v);
            auto p = params("power-rule-monomial");
            p["n"] = n;
            report.add(std::move(p), derive(g, pow(v, n)), rhs);
        }
        {
            PolynomialShape shape = small_shape;
            shape.max_terms = 3;
            shape.exp_lo = -1;
            const Polynomial v = random_polynomial(rng, shape);
            const std::int64_t n = rng.uniform(0, 4);
            const Polynomial rhs = n == 0 ? Polynomial() : Polynomial(n) * pow(v, n - 1) * derive(g, v);
            auto p = params("power-rule-polynomial");
            p["n"] = n;
            report.add(std::move(p), derive(g, pow(v, n)), rhs);
        }
        {
            const Variable x = letters[static_cast<std::size_t>(rng.uniform(0, 2))];
            report.add(params("zero-power"), derive(g, pow(Polynomial(x), 0)), Polynomial());
        }
        {
            const Polynomial u = random_polynomial(rng, poly_shape);
            const Polynomial v = random_term(rng, poly_shape);
            report.add(params("quotient-rule"), derive(g, u * pow(v, -1)),
                       (derive(g, u) * v - u * derive(g, v)) * pow(v, -2));
        }
        {
            std::vector<Polynomial> factors;
            for (int i = 0; i < 4; ++i) {
                factors.push_back(random_polynomial(rng, small_shape));
            }
            Polynomial product(1);
            for (const auto& f : factors) {
                product *= f;
            }
            Polynomial rhs;
            for (std::size_t j = 0; j < factors.size(); ++j) {
                Polynomial summand = derive(g, factors[j]);
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    if (i != j) {
                        summand *= factors[i];
                    }
                }
                rhs += summand;
            }
            report.add(params("generalized-product-rule"), derive(g, product), rhs);
        }
        {
            const Polynomial u = random_polynomial(rng, small_shape);
            const Polynomial v = random_polynomial(rng, small_shape);
            const std::int64_t n = rng.uniform(0, 4);
            const auto du = derivative_table(g, u, n);
            const auto dv = derivative_table(g, v, n);
            auto p = params("leibniz");
            p["n"] = n;
            report.add(std::move(p), derive_n(g, u * v, static_cast<std::size_t>(n)), leibniz_sum(du, dv, n));
        }
        {
            // c has no production here, so adding a polynomial in c leaves
            // every derivative of order >= 1 unchanged: the premise
            // D^k(u) = D^k(v) holds and the conclusion at k + 1 is checked.
            const Grammar g_ab = random_grammar(rng, {kA, kB}, rhs_shape);
            const Polynomial u = random_polynomial(rng, small_shape);
            const Polynomial v = u + random_term(rng, constant_shape);
            const auto k = static_cast<std::size_t>(rng.uniform(1, 3));
            ordered_json p{{"rule", "stabilization"}, {"trial", t}, {"grammar", g_ab.to_text()}, {"k", k}};
            if (derive_n(g_ab, u, k) == derive_n(g_ab, v, k)) {
                report.add(std::move(p), derive_n(g_ab, u, k + 1), derive_n(g_ab, v, k + 1));
            } else {
                report.add(std::move(p), std::string("vacuous"), std::string("vacuous"));
            }
        }
        {
            const auto count = static_cast<std::size_t>(rng.uniform(2, 3));
            std::vector<Grammar> subgrammars;
            for (std::size_t i = 0; i < count; ++i) {
                subgrammars.push_back(random_grammar(rng, {kA, kB}, rhs_shape));
            }
            const MatrixGrammar mg(std::move(subgrammars));
            std::vector<std::size_t> indices;
            const auto length = rng.uniform(2, 4);
            for (std::int64_t i = 0; i < length; ++i) {
                indices.push_back(static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(count))));
            }
            const auto split = static_cast<std::size_t>(rng.uniform(1, length - 1));
            const OperatorWord word(indices);
            const OperatorWord left({indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(split)});
            const OperatorWord right({indices.begin() + static_cast<std::ptrdiff_t>(split), indices.end()});
            const Polynomial u = random_polynomial(rng, small_shape);
            ordered_json p{{"rule", "word-composition"},
                           {"trial", t},
                           {"grammar", mg.to_text()},
                           {"word", word.to_string()},
                           {"split", split}};
            report.add(std::move(p), derive_word(mg, word, u), derive_word(mg, left, derive_word(mg, right, u)));
        }
    }

    // The counterexample grammar: D^2(a) = D^2(b), hence equality at every higher order.
    const Grammar counterexample = parse_grammar("a -> ab; b -> ac; c -> b^2 + ac - bc").at(1);
    for (std::size_t k = 2; k <= 4; ++k) {
        ordered_json p{{"rule", "stabilization"}, {"fixed", "counterexample"}, {"k", k}};
        const Polynomial a(kA);
        const Polynomial b(kB);
        if (derive_n(counterexample, a, k) == derive_n(counterexample, b, k)) {
            report.add(std::move(p), derive_n(counterexample, a, k + 1), derive_n(counterexample, b, k + 1));
        } else {
            report.add(std::move(p), std::string("premise D^k(a) = D^k(b)"), std::string("premise failed"));
        }
    }
    return report;
}

} // namespace gramderiv
