#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gramderiv/polynomial.hpp"

namespace gramderiv {

/// Substitution rules letter -> formal function. Letters without a rule are
/// constants.
class Grammar {
public:
    using Productions = std::map<Variable, Polynomial>;

    Grammar() = default;
    explicit Grammar(Productions productions) : productions_(std::move(productions)) {}

    /// Right-hand side for `v`, or nullptr when `v` is a constant.
    const Polynomial* production(Variable v) const;
    const Productions& productions() const noexcept { return productions_; }
    bool empty() const noexcept { return productions_.empty(); }

    /// "a -> a + b; b -> b"
    std::string to_text() const;

    friend bool operator==(const Grammar&, const Grammar&) = default;

private:
    Productions productions_;
};

/// Subset of `vars` with no production in `g`.
std::set<Variable> constants_of(const Grammar& g, const std::set<Variable>& vars);

/// Ordered, nonempty family g_1, ..., g_n of grammars. Indices are 1-based.
class MatrixGrammar {
public:
    /// Throws DomainError if `subgrammars` is empty.
    explicit MatrixGrammar(std::vector<Grammar> subgrammars);
    MatrixGrammar(Grammar g);

    std::size_t size() const noexcept { return subgrammars_.size(); }
    /// Throws IndexError unless 1 <= index <= size().
    const Grammar& at(std::size_t index) const;
    const std::vector<Grammar>& subgrammars() const noexcept { return subgrammars_; }

    /// Plain form for one sub-grammar, "[...], [...]" otherwise.
    std::string to_text() const;

    friend bool operator==(const MatrixGrammar&, const MatrixGrammar&) = default;

private:
    std::vector<Grammar> subgrammars_;
};

/// Parses a formal function, e.g. "b^2 + 2ab", "3/2 a b^2", "a^-1".
/// Every failure is reported as ParseError with a byte offset.
Polynomial parse_expr(std::string_view text);

/// Parses "a -> a + b ; b -> b" (one sub-grammar) or
/// "[a -> a + b ; b -> b], [a -> a ; b -> a - b]" (one per bracket group).
MatrixGrammar parse_grammar(std::string_view text);

} // namespace gramderiv
