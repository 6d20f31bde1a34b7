// Recursive-descent parser for the grammar DSL:
//
//   matrix := group (',' group)* | prods
//   group  := '[' prods ']'
//   prods  := prod (';' prod)*
//   prod   := VAR '->' expr
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*')? factor)*
//   factor := NUM | VAR ('^' INT)? | '(' expr ')' ('^' INT)?
//   NUM    := INT | INT '/' INT
//   VAR    := [a-z]      INT := ['-'] [0-9]+
//
// Whitespace is skipped between all tokens. A leading '-' is only the unary
// minus of `expr`; signed integers appear after '^' and '/'.

#include <cctype>
#include <limits>
#include <optional>

#include "gramderiv/error.hpp"
#include "gramderiv/grammar.hpp"

namespace gramderiv {

namespace {

bool is_letter(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse_expr_only() {
        Polynomial u = expr();
        expect_end();
        return u;
    }

    MatrixGrammar parse_matrix() {
        skip_ws();
        if (peek() != '[') {
            Grammar g = prods();
            expect_end();
            return MatrixGrammar(std::move(g));
        }
        std::vector<Grammar> groups;
        while (true) {
            expect('[');
            skip_ws();
            if (peek() == ']') {
                fail("empty production group");
            }
            groups.push_back(prods());
            expect(']');
            skip_ws();
            if (peek() != ',') {
                break;
            }
            ++pos_;
        }
        expect_end();
        return MatrixGrammar(std::move(groups));
    }

private:
    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(pos, message);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string describe_here() const {
        if (at_end()) {
            return "end of input";
        }
        const char c = text_[pos_];
        if (std::isprint(static_cast<unsigned char>(c))) {
            return std::string("'") + c + "'";
        }
        return "byte " + std::to_string(static_cast<unsigned char>(c));
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            fail(std::string("expected '") + c + "', found " + describe_here());
        }
        ++pos_;
    }

    void expect_end() {
        skip_ws();
        if (!at_end()) {
            fail("unexpected " + describe_here());
        }
    }

    Grammar prods() {
        Grammar::Productions productions;
        while (true) {
            skip_ws();
            const std::size_t var_pos = pos_;
            const Variable lhs = variable();
            skip_ws();
            if (text_.substr(pos_, 2) != "->") {
                fail("expected '->', found " + describe_here());
            }
            pos_ += 2;
            Polynomial rhs = expr();
            if (!productions.emplace(lhs, std::move(rhs)).second) {
                fail_at(var_pos, std::string("duplicate production for '") + lhs.name() + "'");
            }
            skip_ws();
            if (peek() != ';') {
                break;
            }
            ++pos_;
        }
        return Grammar(std::move(productions));
    }

    Variable variable() {
        skip_ws();
        if (!is_letter(peek())) {
            fail("expected a variable (a-z), found " + describe_here());
        }
        return Variable(text_[pos_++]);
    }

    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Polynomial u = term();
        if (negate) {
            u = -u;
        }
        while (true) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') {
                break;
            }
            ++pos_;
            Polynomial t = term();
            if (c == '+') {
                u += t;
            } else {
                u -= t;
            }
        }
        return u;
    }

    Polynomial term() {
        Polynomial u = factor();
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '*') {
                ++pos_;
            } else if (!(is_digit(c) || is_letter(c) || c == '(')) {
                break;
            }
            const std::size_t at = pos_;
            Polynomial f = factor();
            u = guarded(at, [&] { return u * f; });
        }
        return u;
    }

    Polynomial factor() {
        skip_ws();
        const char c = peek();
        if (is_digit(c)) {
            return number();
        }
        if (is_letter(c)) {
            Polynomial v(variable());
            return maybe_power(std::move(v));
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            expect(')');
            return maybe_power(std::move(inner));
        }
        fail("expected a number, variable or '(', found " + describe_here());
    }

    Polynomial maybe_power(Polynomial base) {
        skip_ws();
        if (peek() != '^') {
            return base;
        }
        const std::size_t caret = pos_++;
        const std::int64_t k = exponent();
        return guarded(caret, [&] { return pow(base, k); });
    }

    // Runs an arithmetic step, reporting engine errors at `at`.
    template <typename F>
    Polynomial guarded(std::size_t at, F&& step) {
        try {
            return step();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail_at(at, e.what());
        }
    }

    std::string digits() {
        skip_ws();
        if (!is_digit(peek())) {
            fail("expected digits, found " + describe_here());
        }
        const std::size_t start = pos_;
        while (is_digit(peek())) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    bool optional_minus() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int64_t exponent() {
        const bool negative = optional_minus();
        skip_ws();
        const std::size_t start = pos_;
        const std::string d = digits();
        // Magnitude up to 2^63 so that INT64_MIN is reachable.
        std::uint64_t magnitude = 0;
        constexpr std::uint64_t limit = std::uint64_t{1} << 63;
        for (const char ch : d) {
            const auto digit = static_cast<std::uint64_t>(ch - '0');
            if (magnitude > (limit - digit) / 10) {
                fail_at(start, "exponent out of range");
            }
            magnitude = magnitude * 10 + digit;
        }
        if (!negative && magnitude == limit) {
            fail_at(start, "exponent out of range");
        }
        if (negative) {
            return magnitude == limit ? std::numeric_limits<std::int64_t>::min()
                                      : -static_cast<std::int64_t>(magnitude);
        }
        return static_cast<std::int64_t>(magnitude);
    }

    Polynomial number() {
        const BigInt num(digits(), 10);
        skip_ws();
        if (peek() != '/') {
            return Polynomial(Rational(num));
        }
        ++pos_;
        const bool negative = optional_minus();
        skip_ws();
        const std::size_t den_pos = pos_;
        BigInt den(digits(), 10);
        if (den == 0) {
            fail_at(den_pos, "division by zero");
        }
        if (negative) {
            den = -den;
        }
        return Polynomial(Rational(num, den));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_expr(std::string_view text) { return Parser(text).parse_expr_only(); }

MatrixGrammar parse_grammar(std::string_view text) { return Parser(text).parse_matrix(); }

} // namespace gramderiv
