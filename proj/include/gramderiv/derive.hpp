#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gramderiv/grammar.hpp"

namespace gramderiv {

/// Formal derivative D of `u` with respect to `g`: linear, obeys the product
/// rule, D(x) is the production of x, and D(x) = 0 for constants. Works for
/// Laurent monomials, so D(x^e) = e x^(e-1) D(x) for every integer e.
Polynomial derive(const Grammar& g, const Polynomial& u);

/// D^n(u); n = 0 returns u.
Polynomial derive_n(const Grammar& g, Polynomial u, std::size_t n);

/// D_i(u) for the i-th sub-grammar (1-based). Throws IndexError.
Polynomial derive_indexed(const MatrixGrammar& mg, std::size_t i, const Polynomial& u);

/// Composition D_{i1 i2 ... ik} = D_{i1} o D_{i2} o ... o D_{ik}; the
/// rightmost index is applied first.
class OperatorWord {
public:
    /// Throws DomainError if empty or if an index is 0.
    explicit OperatorWord(std::vector<std::size_t> indices);

    /// "12" (one digit per index) or "1,2" (comma-separated, for indices > 9).
    static OperatorWord parse(std::string_view text);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

    /// Word for D_{this} o D_{rhs}.
    OperatorWord then_after(const OperatorWord& rhs) const;

    std::string to_string() const;

    friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

private:
    std::vector<std::size_t> indices_;
};

/// Throws IndexError if any index of `w` exceeds mg.size().
void check_word(const MatrixGrammar& mg, const OperatorWord& w);

Polynomial derive_word(const MatrixGrammar& mg, const OperatorWord& w, const Polynomial& u);

/// (D_w)^n(u); n = 0 returns u.
Polynomial derive_word_pow(const MatrixGrammar& mg, const OperatorWord& w, std::size_t n,
                           Polynomial u);

} // namespace gramderiv
