#include <doctest.h>

#include "gramderiv/derive.hpp"
#include "gramderiv/error.hpp"
#include "gramderiv/numbers.hpp"
#include "gramderiv/random.hpp"
#include "oracles.hpp"

using namespace gramderiv;

namespace {

const Variable a('a');
const Variable b('b');
const Variable c('c');

Polynomial P(const char* text) { return parse_expr(text); }
Grammar G(const char* text) { return parse_grammar(text).at(1); }

const MatrixGrammar& example_matrix() {
    static const MatrixGrammar mg = parse_grammar("[a -> a + b; b -> b], [a -> a; b -> a - b]");
    return mg;
}

PolynomialShape rhs_shape() {
    PolynomialShape shape;
    shape.vars = {a, b, c};
    shape.max_terms = 2;
    shape.coeff_lo = -3;
    shape.coeff_hi = 3;
    shape.exp_lo = 0;
    shape.exp_hi = 2;
    return shape;
}

PolynomialShape operand_shape() {
    PolynomialShape shape;
    shape.vars = {a, b, c};
    shape.max_terms = 3;
    shape.exp_lo = -3;
    shape.exp_hi = 3;
    return shape;
}

} // namespace

TEST_CASE("derive examples") {
    const Grammar g = G("a -> a + b; b -> b");
    CHECK(derive(g, P("ab")) == P("b^2 + 2ab"));
    CHECK(derive(g, P("c")) == Polynomial());
    CHECK(derive(G("a -> ab; b -> a^2"), P("b^2")) == P("2a^2b"));
    CHECK(derive(G("a -> a"), P("a^-1")) == P("-a^-1"));
    CHECK(derive(g, Polynomial()) == Polynomial());
    CHECK(derive(g, P("7/3")) == Polynomial());
}

TEST_CASE("derive agrees with the product-rule oracle on random input") {
    RandomSource rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Grammar g = random_grammar(rng, {a, b, c}, rhs_shape(), 70);
        const Polynomial u = random_polynomial(rng, operand_shape());
        CAPTURE(g.to_text());
        CAPTURE(canonical_text(u));
        CHECK(derive(g, u) == oracle::derive(g, u));
    }
}

TEST_CASE("derive_n examples") {
    const Grammar g = G("a -> a + b; b -> b");
    CHECK(derive_n(g, P("a"), 2) == P("a + 2b"));
    CHECK(derive_n(g, P("3ab - c"), 0) == P("3ab - c"));
    const Grammar counter = G("a -> ab; b -> ac; c -> b^2 + ac - bc");
    CHECK(derive_n(counter, P("a"), 2) == P("ab^2 + a^2c"));
    CHECK(derive_n(counter, P("b"), 2) == P("ab^2 + a^2c"));
    CHECK(derive_n(counter, P("a"), 1) != derive_n(counter, P("b"), 1));
    // D^4(a^3) = 3^4 a^3
    CHECK(derive_n(G("a -> a"), P("a^3"), 4) == P("81 a^3"));
}

TEST_CASE("coeff_of after iterating a -> a on a^2") {
    // Oracle: D^n(a^m) = m^n a^m, so the coefficient is 2^5.
    const Polynomial d5 = oracle::derive_n(G("a -> a"), P("a^2"), 5);
    CHECK(coeff_of(d5, Monomial(a, 2)) == Rational(32));
    CHECK(coeff_of(derive_n(G("a -> a"), P("a^2"), 5), Monomial(a, 2)) == Rational(32));
}

TEST_CASE("derive_indexed") {
    const auto& mg = example_matrix();
    CHECK(derive_indexed(mg, 1, P("a")) == P("a + b"));
    CHECK(derive_indexed(mg, 1, P("b")) == P("b"));
    CHECK(derive_indexed(mg, 2, P("a")) == P("a"));
    CHECK(derive_indexed(mg, 2, P("b")) == P("a - b"));
    CHECK_THROWS_AS(derive_indexed(mg, 3, P("a")), IndexError);
    CHECK_THROWS_AS(derive_indexed(mg, 0, P("a")), IndexError);
}

TEST_CASE("derive_word applies the rightmost index first") {
    const auto& mg = example_matrix();
    const Polynomial d12 = derive_word(mg, OperatorWord({1, 2}), P("a + b"));
    const Polynomial d21 = derive_word(mg, OperatorWord({2, 1}), P("a + b"));
    CHECK(d12 == P("2a + b"));
    CHECK(d21 == P("3a - 2b"));
    CHECK(d12 != d21);
    CHECK(derive_word(mg, OperatorWord({2}), P("ab")) == derive_indexed(mg, 2, P("ab")));
    CHECK_THROWS_AS(derive_word(mg, OperatorWord({1, 3}), P("a")), IndexError);
}

TEST_CASE("derive_word_pow on the r = 2 multifactorial matrix grammar") {
    const MatrixGrammar mg = parse_grammar("[a -> a; b -> b], [a -> a^2 b; b -> a b^2]");
    // By hand: D_2(a) = a^2 b, D_1(a^2 b) = 3 a^2 b.
    const Polynomial by_hand_12 = derive(mg.at(1), derive(mg.at(2), P("a")));
    CHECK(by_hand_12 == P("3a^2b"));
    CHECK(derive_word_pow(mg, OperatorWord({1, 2}), 1, P("a")) == P("3a^2b"));
    // D_1(a) = a, D_2(a) = a^2 b.
    CHECK(derive_word_pow(mg, OperatorWord({2, 1}), 1, P("a")) == P("a^2b"));
    // Closed form at n = 1, r = 2: (3)!!(1)!! a^2 b and ((1)!!)^2 a^2 b.
    CHECK(multifactorial(3, 2) * multifactorial(1, 2) == 3);
    CHECK(derive_word_pow(mg, OperatorWord({2, 1}), 5, P("ab")) ==
          derive_word(mg, OperatorWord({2, 1, 2, 1, 2, 1, 2, 1, 2, 1}), P("ab")));
    CHECK(derive_word_pow(mg, OperatorWord({1, 2}), 0, P("a - 7b")) == P("a - 7b"));
    CHECK_THROWS_AS(derive_word_pow(mg, OperatorWord({3}), 0, P("a")), IndexError);
}

TEST_CASE("OperatorWord parsing") {
    CHECK(OperatorWord::parse("12").indices() == std::vector<std::size_t>{1, 2});
    CHECK(OperatorWord::parse("1,2").indices() == std::vector<std::size_t>{1, 2});
    CHECK(OperatorWord::parse("10,2").indices() == std::vector<std::size_t>{10, 2});
    CHECK(OperatorWord::parse("10,2").to_string() == "10,2");
    CHECK(OperatorWord::parse("212").to_string() == "212");
    CHECK_THROWS_AS(OperatorWord::parse(""), DomainError);
    CHECK_THROWS_AS(OperatorWord::parse("10"), DomainError);
    CHECK_THROWS_AS(OperatorWord::parse("1,,2"), DomainError);
    CHECK_THROWS_AS(OperatorWord::parse("1a"), DomainError);
    CHECK(OperatorWord({1}).then_after(OperatorWord({2, 3})) == OperatorWord({1, 2, 3}));
}

TEST_CASE("exponent overflow propagates out of derive") {
    const Grammar g = G("a -> a^9223372036854775807");
    CHECK_THROWS_AS(derive(g, P("a^2")), OverflowError);
    CHECK_THROWS_AS(derive(G("a -> a"), Polynomial(Rational(1), Monomial(a, std::numeric_limits<std::int64_t>::min()))),
                    OverflowError);
}

TEST_CASE("calculus rules on random grammars") {
    RandomSource rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Grammar g = random_grammar(rng, {a, b, c}, rhs_shape(), 80);
        const Polynomial u = random_polynomial(rng, operand_shape());
        const Polynomial v = random_polynomial(rng, operand_shape());
        const Polynomial t = random_term(rng, operand_shape());
        const Polynomial alpha(random_rational(rng));
        const Polynomial beta(random_rational(rng));
        CAPTURE(g.to_text());

        CHECK(derive(g, alpha * u + beta * v) == alpha * derive(g, u) + beta * derive(g, v));
        CHECK(derive(g, u * v) == derive(g, u) * v + u * derive(g, v));
        for (std::int64_t n = -4; n <= 4; ++n) {
            const Polynomial expected = n == 0 ? Polynomial() : Polynomial(n) * pow(t, n - 1) * derive(g, t);
            CHECK(derive(g, pow(t, n)) == expected);
        }
        CHECK(derive(g, pow(Polynomial(a), 0)) == Polynomial());
        CHECK(derive(g, u * pow(t, -1)) == (derive(g, u) * t - u * derive(g, t)) * pow(t, -2));

        const int n = static_cast<int>(rng.uniform(0, 3));
        Polynomial leibniz;
        for (int k = 0; k <= n; ++k) {
            leibniz += Polynomial(Rational(binomial(n, k))) * derive_n(g, u, k) * derive_n(g, v, n - k);
        }
        CHECK(derive_n(g, u * v, n) == leibniz);
    }
}

TEST_CASE("word composition splits at every position") {
    RandomSource rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Grammar> subs;
        for (int i = 0; i < 3; ++i) {
            subs.push_back(random_grammar(rng, {a, b}, rhs_shape()));
        }
        const MatrixGrammar mg(std::move(subs));
        std::vector<std::size_t> indices;
        for (int i = 0; i < 4; ++i) {
            indices.push_back(static_cast<std::size_t>(rng.uniform(1, 3)));
        }
        const Polynomial u = random_polynomial(rng, operand_shape());
        const Polynomial whole = derive_word(mg, OperatorWord(indices), u);
        // Oracle: apply the indices one at a time, rightmost first.
        Polynomial stepwise = u;
        for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
            stepwise = oracle::derive(mg.subgrammars()[*it - 1], stepwise);
        }
        CHECK(whole == stepwise);
        for (std::size_t split = 1; split < indices.size(); ++split) {
            const OperatorWord left({indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(split)});
            const OperatorWord right({indices.begin() + static_cast<std::ptrdiff_t>(split), indices.end()});
            CHECK(whole == derive_word(mg, left, derive_word(mg, right, u)));
        }
    }
}
