#include "gramderiv/derive.hpp"

#include "gramderiv/error.hpp"

namespace gramderiv {

Polynomial derive(const Grammar& g, const Polynomial& u) {
    Polynomial::TermMap out;
    for (const auto& [m, c] : u.terms()) {
        for (const auto& [x, e] : m.factors()) {
            const Polynomial* rhs = g.production(x);
            if (rhs == nullptr) {
                continue;
            }
            // c * e * x^(e-1) * (rest of m) * D(x)
            const Monomial reduced = m.shifted(x, -1);
            const Rational scale = c * Rational(static_cast<long>(e));
            for (const auto& [w, d] : rhs->terms()) {
                accumulate(out, reduced * w, scale * d);
            }
        }
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial derive_n(const Grammar& g, Polynomial u, std::size_t n) {
    for (std::size_t step = 0; step < n && !u.is_zero(); ++step) {
        u = derive(g, u);
    }
    return u;
}

Polynomial derive_indexed(const MatrixGrammar& mg, std::size_t i, const Polynomial& u) {
    return derive(mg.at(i), u);
}

OperatorWord::OperatorWord(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) {
        throw DomainError("operator word must not be empty");
    }
    for (const auto i : indices_) {
        if (i == 0) {
            throw DomainError("operator word indices are 1-based");
        }
    }
}

OperatorWord OperatorWord::parse(std::string_view text) {
    std::vector<std::size_t> indices;
    const bool comma_form = text.find(',') != std::string_view::npos;
    std::size_t current = 0;
    bool have_digit = false;
    for (const char c : text) {
        if (c >= '0' && c <= '9') {
            if (!comma_form) {
                indices.push_back(static_cast<std::size_t>(c - '0'));
                continue;
            }
            if (current > 1'000'000) {
                throw DomainError("operator word index too large");
            }
            current = current * 10 + static_cast<std::size_t>(c - '0');
            have_digit = true;
        } else if (c == ',' && comma_form) {
            if (!have_digit) {
                throw DomainError("empty index in operator word '" + std::string(text) + "'");
            }
            indices.push_back(current);
            current = 0;
            have_digit = false;
        } else {
            throw DomainError("invalid operator word '" + std::string(text) + "'");
        }
    }
    if (comma_form) {
        if (!have_digit) {
            throw DomainError("empty index in operator word '" + std::string(text) + "'");
        }
        indices.push_back(current);
    }
    return OperatorWord(std::move(indices));
}

OperatorWord OperatorWord::then_after(const OperatorWord& rhs) const {
    std::vector<std::size_t> joined = indices_;
    joined.insert(joined.end(), rhs.indices_.begin(), rhs.indices_.end());
    return OperatorWord(std::move(joined));
}

std::string OperatorWord::to_string() const {
    bool compact = true;
    for (const auto i : indices_) {
        compact = compact && i <= 9;
    }
    std::string out;
    for (const auto i : indices_) {
        if (!compact && !out.empty()) {
            out += ',';
        }
        out += std::to_string(i);
    }
    return out;
}

void check_word(const MatrixGrammar& mg, const OperatorWord& w) {
    for (const auto i : w.indices()) {
        mg.at(i);
    }
}

Polynomial derive_word(const MatrixGrammar& mg, const OperatorWord& w, const Polynomial& u) {
    check_word(mg, w);
    Polynomial out = u;
    for (auto it = w.indices().rbegin(); it != w.indices().rend(); ++it) {
        out = derive(mg.at(*it), out);
    }
    return out;
}

Polynomial derive_word_pow(const MatrixGrammar& mg, const OperatorWord& w, std::size_t n,
                           Polynomial u) {
    check_word(mg, w);
    for (std::size_t step = 0; step < n && !u.is_zero(); ++step) {
        u = derive_word(mg, w, u);
    }
    return u;
}

} // namespace gramderiv
