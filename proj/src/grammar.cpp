#include "gramderiv/grammar.hpp"

#include "gramderiv/error.hpp"

namespace gramderiv {

const Polynomial* Grammar::production(Variable v) const {
    auto it = productions_.find(v);
    return it == productions_.end() ? nullptr : &it->second;
}

std::string Grammar::to_text() const {
    std::string out;
    for (const auto& [v, rhs] : productions_) {
        if (!out.empty()) {
            out += "; ";
        }
        out += v.name();
        out += " -> ";
        out += canonical_text(rhs);
    }
    return out;
}

std::set<Variable> constants_of(const Grammar& g, const std::set<Variable>& vars) {
    std::set<Variable> out;
    for (const auto& v : vars) {
        if (g.production(v) == nullptr) {
            out.insert(v);
        }
    }
    return out;
}

MatrixGrammar::MatrixGrammar(std::vector<Grammar> subgrammars) : subgrammars_(std::move(subgrammars)) {
    if (subgrammars_.empty()) {
        throw DomainError("a matrix grammar needs at least one sub-grammar");
    }
}

MatrixGrammar::MatrixGrammar(Grammar g) { subgrammars_.push_back(std::move(g)); }

const Grammar& MatrixGrammar::at(std::size_t index) const {
    if (index < 1 || index > subgrammars_.size()) {
        throw IndexError("sub-grammar index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(subgrammars_.size()));
    }
    return subgrammars_[index - 1];
}

std::string MatrixGrammar::to_text() const {
    if (subgrammars_.size() == 1) {
        return subgrammars_.front().to_text();
    }
    std::string out;
    for (const auto& g : subgrammars_) {
        if (!out.empty()) {
            out += ", ";
        }
        out += '[' + g.to_text() + ']';
    }
    return out;
}

} // namespace gramderiv
