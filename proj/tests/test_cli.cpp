#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gramderiv/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = gramderiv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("derive command") {
    auto r = run({"derive", "--grammar", "a->a+b; b->b", "--expr", "ab", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 a b + b^2\n");
    CHECK(r.err.empty());

    r = run({"derive", "--grammar", "[a->a+b; b->b],[a->a; b->a-b]", "--expr", "a+b", "--word", "21"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 a - 2 b\n");

    r = run({"derive", "--grammar", "[a->a+b; b->b],[a->a; b->a-b]", "--expr", "a+b", "--word", "1,2"});
    CHECK(r.out == "2 a + b\n");

    r = run({"derive", "--grammar", "a->a", "--expr", "a", "--n", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "a\n");

    r = run({"derive", "--grammar", "a->a+b; b->b", "--expr", "a", "--n", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == R"([{"coeff":"1/1","monomial":{"a":1}},{"coeff":"2/1","monomial":{"b":1}}])" "\n");
}

TEST_CASE("derive command errors") {
    auto r = run({"derive", "--grammar", "a->", "--expr", "a"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("position 3") != std::string::npos);

    r = run({"derive", "--grammar", "[a->a],[b->b]", "--expr", "a", "--word", "13"});
    CHECK(r.code == 2);

    r = run({"derive", "--grammar", "[a->a],[b->b]", "--expr", "a"});
    CHECK(r.code == 2);

    r = run({"derive", "--grammar", "a->a", "--expr", "a", "--n", "-1"});
    CHECK(r.code == 2);

    r = run({"derive", "--grammar", "a->a^9223372036854775807", "--expr", "a^2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("exponent overflow") != std::string::npos);

    r = run({"derive", "--grammar", "a->a", "--expr", "a", "--format", "xml"});
    CHECK(r.code == 2);

    r = run({"derive", "--expr", "a"});
    CHECK(r.code == 2);

    r = run({});
    CHECK(r.code == 2);

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("derive") != std::string::npos);
}

TEST_CASE("grammar from a file") {
    const auto path = std::filesystem::temp_directory_path() / "gramderiv_test_grammar.txt";
    {
        std::ofstream file(path);
        file << "[a -> a + b;\n b -> b],\n[a -> a; b -> a - b]\n";
    }
    auto r = run({"derive", "--grammar", "@" + path.string(), "--expr", "a+b", "--word", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 a + b\n");
    std::filesystem::remove(path);

    r = run({"derive", "--grammar", "@" + path.string(), "--expr", "a"});
    CHECK(r.code == 2);
}

TEST_CASE("seq command") {
    auto r = run({"seq", "--grammar", "a->a^2", "--expr", "a", "--n-max", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1 a\n1 1 a^2\n2 2 a^3\n3 6 a^4\n4 24 a^5\n5 120 a^6\n");

    r = run({"seq", "--grammar", "a->a^3", "--expr", "a", "--n-max", "4", "--format", "json"});
    CHECK(r.code == 0);
    const auto json = nlohmann::json::parse(r.out);
    REQUIRE(json.size() == 5);
    const std::vector<std::string> expected{"1/1", "1/1", "3/1", "15/1", "105/1"};
    for (std::size_t n = 0; n < 5; ++n) {
        CHECK(json[n]["n"] == n);
        CHECK(json[n]["coeff"] == expected[n]);
        CHECK(json[n]["monomial"]["a"] == 2 * n + 1);
    }

    r = run({"seq", "--grammar", "a->a+b; b->b", "--expr", "a", "--n-max", "1"});
    CHECK(r.code == 4);
    CHECK(r.out.empty());
    CHECK(r.err.find("not a monomial sequence at n=1") != std::string::npos);
}

TEST_CASE("verify command") {
    auto r = run({"verify", "binomial-sums", "n_max=40"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("suite binomial-sums: 81 passed, 0 failed\n", 0) == 0);

    r = run({"verify", "matrix-closed-forms", "n_max=8", "r_max=5"});
    CHECK(r.code == 0);

    r = run({"verify", "leibniz", "grammar=a -> a + b; b -> b", "u=a", "v=b", "n_max=4", "--format", "json"});
    CHECK(r.code == 0);
    const auto json = nlohmann::json::parse(r.out);
    CHECK(json["suite"] == "leibniz");
    CHECK(json["passed"] == 5);

    CHECK(run({"verify", "bogus"}).code == 2);
    CHECK(run({"verify", "binomial-sums", "m_max=3"}).code == 2);
    CHECK(run({"verify", "binomial-sums", "n_max=x"}).code == 2);
    CHECK(run({"verify", "binomial-sums", "n_max"}).code == 2);
    CHECK(run({"verify", "closed-forms", "m_max=0"}).code == 2);
    CHECK(run({"verify", "nonexistence", "trials=20", "seed=9"}).code == 0);
    CHECK(run({"verify", "calculus-rules", "trials=10"}).code == 0);
    CHECK(run({"verify", "multifactorial-identity", "m_max=2", "n_max=3", "r_max=2"}).code == 0);
}

TEST_CASE("multifactorial command") {
    auto r = run({"multifactorial", "--n", "17", "--r", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "2856\n");
    r = run({"multifactorial", "--n", "0", "--r", "7"});
    CHECK(r.out == "1\n");
    r = run({"multifactorial", "--n", "-3", "--r", "2"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    r = run({"multifactorial", "--n", "5", "--r", "1", "--format", "json"});
    CHECK(r.out == R"({"n":5,"r":1,"value":"120"})" "\n");
}

TEST_CASE("output is identical across runs") {
    const std::vector<std::string> args{"verify", "nonexistence", "trials=50", "seed=3", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}
