#include "gramderiv/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gramderiv/error.hpp"
#include "gramderiv/verify.hpp"

namespace gramderiv::cli {

namespace {

class NotMonomialError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

enum class Format { text, json };

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"json", Format::json}};

// "@path" reads the grammar from a file.
std::string load_grammar_text(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') {
        return arg;
    }
    const std::string path = arg.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read grammar file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::int64_t to_int(const std::string& key, const std::string& value) {
    std::int64_t out = 0;
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw UsageError("parameter '" + key + "' expects an integer, got '" + value + "'");
    }
    return out;
}

// key=value arguments of `verify`, consumed by the suites.
class SuiteParams {
public:
    explicit SuiteParams(const std::vector<std::string>& args) {
        for (const auto& arg : args) {
            const auto eq = arg.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw UsageError("expected key=value, got '" + arg + "'");
            }
            if (!values_.emplace(arg.substr(0, eq), arg.substr(eq + 1)).second) {
                throw UsageError("parameter '" + arg.substr(0, eq) + "' given twice");
            }
        }
    }

    std::int64_t integer(const std::string& key, std::int64_t fallback) {
        const auto value = take(key);
        return value ? to_int(key, *value) : fallback;
    }

    std::string text(const std::string& key, const std::string& fallback) { return take(key).value_or(fallback); }

    void finish() const {
        if (!values_.empty()) {
            throw UsageError("unknown parameter '" + values_.begin()->first + "'");
        }
    }

private:
    std::optional<std::string> take(const std::string& key) {
        auto it = values_.find(key);
        if (it == values_.end()) {
            return std::nullopt;
        }
        std::string value = it->second;
        values_.erase(it);
        return value;
    }

    std::map<std::string, std::string> values_;
};

Report run_suite(const std::string& suite, SuiteParams& params) {
    std::optional<Report> report;
    if (suite == "leibniz") {
        const auto mg = parse_grammar(load_grammar_text(params.text("grammar", "a -> a")));
        if (mg.size() != 1) {
            throw UsageError("leibniz needs a context-free grammar, not a matrix grammar");
        }
        const auto u = parse_expr(params.text("u", "a"));
        const auto v = parse_expr(params.text("v", "a"));
        const auto n_max = params.integer("n_max", 6);
        params.finish();
        report = verify_leibniz(mg.at(1), u, v, n_max);
    } else if (suite == "binomial-sums") {
        const auto n_max = params.integer("n_max", 40);
        params.finish();
        report = verify_binomial_sums(n_max);
    } else if (suite == "multifactorial-identity" || suite == "closed-forms") {
        const auto m_max = params.integer("m_max", kDefaultMMax);
        const auto n_max = params.integer("n_max", kDefaultNMax);
        const auto r_max = params.integer("r_max", kDefaultRMax);
        params.finish();
        report = suite == "closed-forms" ? verify_closed_forms(m_max, n_max, r_max)
                                         : verify_multifactorial_identity(m_max, n_max, r_max);
    } else if (suite == "matrix-closed-forms") {
        const auto n_max = params.integer("n_max", kDefaultNMax);
        const auto r_max = params.integer("r_max", kDefaultRMax);
        params.finish();
        report = verify_matrix_closed_forms(n_max, r_max);
    } else if (suite == "nonexistence" || suite == "calculus-rules") {
        const auto trials = params.integer("trials", suite == "nonexistence" ? 500 : 200);
        const auto seed = params.integer("seed", 1);
        params.finish();
        report = suite == "nonexistence" ? verify_nonexistence(trials, static_cast<std::uint64_t>(seed))
                                         : verify_calculus_rules(trials, static_cast<std::uint64_t>(seed));
    } else {
        throw UsageError("unknown suite '" + suite +
                         "' (expected leibniz, binomial-sums, multifactorial-identity, closed-forms, "
                         "matrix-closed-forms, nonexistence or calculus-rules)");
    }
    return std::move(*report);
}

void print_report(std::ostream& out, const Report& report, Format format, bool color) {
    if (format == Format::json) {
        out << to_json(report).dump() << '\n';
        return;
    }
    out << "suite " << report.suite() << ": " << report.passed() << " passed, " << report.failed()
        << " failed\n";
    for (const auto& c : report.cases()) {
        const char* tag = c.pass ? "PASS" : "FAIL";
        if (color) {
            out << (c.pass ? "\033[32m" : "\033[31m") << tag << "\033[0m";
        } else {
            out << tag;
        }
        out << ' ' << c.params.dump() << ": " << c.lhs << (c.pass ? " == " : " != ") << c.rhs << '\n';
    }
}

struct DeriveArgs {
    std::string grammar;
    std::string expr;
    std::int64_t n = 1;
    std::string word;
    Format format = Format::text;
};

int cmd_derive(const DeriveArgs& args, std::ostream& out) {
    if (args.n < 0) {
        throw UsageError("--n must be nonnegative");
    }
    const auto mg = parse_grammar(load_grammar_text(args.grammar));
    const auto u = parse_expr(args.expr);
    const auto n = static_cast<std::size_t>(args.n);
    Polynomial result;
    if (!args.word.empty()) {
        const auto word = OperatorWord::parse(args.word);
        result = derive_word_pow(mg, word, n, u);
    } else {
        if (mg.size() != 1) {
            throw UsageError("a matrix grammar with " + std::to_string(mg.size()) +
                             " sub-grammars needs --word");
        }
        result = derive_n(mg.at(1), u, n);
    }
    if (args.format == Format::json) {
        out << to_json(result).dump() << '\n';
    } else {
        out << canonical_text(result) << '\n';
    }
    return kSuccess;
}

struct SeqArgs {
    std::string grammar;
    std::string expr;
    std::int64_t n_max = 10;
    Format format = Format::text;
};

int cmd_seq(const SeqArgs& args, std::ostream& out) {
    if (args.n_max < 0) {
        throw UsageError("--n-max must be nonnegative");
    }
    const auto mg = parse_grammar(load_grammar_text(args.grammar));
    if (mg.size() != 1) {
        throw UsageError("seq needs a context-free grammar, not a matrix grammar");
    }
    const Grammar& g = mg.at(1);
    Polynomial u = parse_expr(args.expr);

    // Build everything first so a failure leaves stdout empty.
    std::vector<std::pair<Rational, Monomial>> rows;
    for (std::int64_t n = 0; n <= args.n_max; ++n) {
        if (n > 0) {
            u = derive(g, u);
        }
        if (!u.is_single_term()) {
            throw NotMonomialError("not a monomial sequence at n=" + std::to_string(n));
        }
        const auto& [m, c] = *u.terms().begin();
        rows.emplace_back(c, m);
    }
    if (args.format == Format::json) {
        auto array = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n < rows.size(); ++n) {
            array.push_back({{"n", n}, {"coeff", rows[n].first.to_fraction_string()}, {"monomial", to_json(rows[n].second)}});
        }
        out << array.dump() << '\n';
    } else {
        for (std::size_t n = 0; n < rows.size(); ++n) {
            out << n << ' ' << rows[n].first.to_string() << ' ' << rows[n].second.to_string() << '\n';
        }
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    CLI::App app{"Formal derivative operator of context-free and matrix grammars", "gramderiv"};
    app.require_subcommand(1);

    DeriveArgs derive_args;
    auto* derive_cmd = app.add_subcommand("derive", "Apply D^n, or a word operator D_w^n for matrix grammars");
    derive_cmd->add_option("--grammar", derive_args.grammar, "Grammar text, or @path")->required();
    derive_cmd->add_option("--expr", derive_args.expr, "Expression to differentiate")->required();
    derive_cmd->add_option("--n", derive_args.n, "Number of applications")->capture_default_str();
    derive_cmd->add_option("--word", derive_args.word, "Operator word, e.g. 12 or 1,2");
    derive_cmd->add_option("--format", derive_args.format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    SeqArgs seq_args;
    auto* seq_cmd = app.add_subcommand("seq", "Print coefficient and monomial of D^n(expr) for n = 0..n_max");
    seq_cmd->add_option("--grammar", seq_args.grammar, "Grammar text, or @path")->required();
    seq_cmd->add_option("--expr", seq_args.expr, "Start expression")->required();
    seq_cmd->add_option("--n-max", seq_args.n_max, "Last n")->capture_default_str();
    seq_cmd->add_option("--format", seq_args.format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    std::string suite;
    std::vector<std::string> suite_params;
    Format verify_format = Format::text;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "Suite name")->required();
    verify_cmd->add_option("params", suite_params, "key=value parameters");
    verify_cmd->add_option("--format", verify_format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    std::int64_t mf_n = 0;
    std::int64_t mf_r = 0;
    Format mf_format = Format::text;
    auto* mf_cmd = app.add_subcommand("multifactorial", "Print n!_r");
    mf_cmd->add_option("--n", mf_n, "n")->required();
    mf_cmd->add_option("--r", mf_r, "r >= 1")->required();
    mf_cmd->add_option("--format", mf_format, "text or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*derive_cmd) {
            return cmd_derive(derive_args, out);
        }
        if (*seq_cmd) {
            return cmd_seq(seq_args, out);
        }
        if (*verify_cmd) {
            SuiteParams params(suite_params);
            const Report report = run_suite(suite, params);
            print_report(out, report, verify_format, color);
            return report.ok() ? kSuccess : kVerificationFailed;
        }
        const BigInt value = multifactorial(mf_n, mf_r);
        if (mf_format == Format::json) {
            out << nlohmann::ordered_json{{"n", mf_n}, {"r", mf_r}, {"value", value.get_str()}}.dump() << '\n';
        } else {
            out << value.get_str() << '\n';
        }
        return kSuccess;
    } catch (const NotMonomialError& e) {
        err << "error: " << e.what() << '\n';
        return kNotMonomial;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kOverflow;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace gramderiv::cli
