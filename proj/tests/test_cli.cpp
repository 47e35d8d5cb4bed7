#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <polybern/cli.hpp>

using namespace polybern;

namespace
{

struct result {
    int code;
    std::string out;
    std::string err;
};

result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        v.push_back(line);
    }
    return v;
}

} // namespace

TEST_CASE("table genocchi as csv")
{
    const auto r = run({"table", "genocchi", "--max-n", "11", "--format", "csv"});
    CHECK(r.code == cli::exit_ok);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == "n,value");
    const std::vector<std::string> values = {"0", "1", "-1", "0", "1", "0", "-3", "0", "17", "0", "-155", "0"};
    for (std::size_t n = 0; n < values.size(); ++n) {
        CHECK(rows[n + 1] == std::to_string(n) + "," + values[n]);
    }
}

TEST_CASE("rationals are written as p/q")
{
    const auto r = run({"table", "bernoulli", "--max-n", "2"});
    CHECK(r.code == cli::exit_ok);
    CHECK(lines(r.out) == std::vector<std::string>{"n,value", "0,1", "1,-1/2", "2,1/6"});
}

TEST_CASE("unknown sequence lists the valid ids")
{
    const auto r = run({"table", "nosuchseq"});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.out.empty());
    for (const char *id : cli::sequence_ids) {
        CHECK(r.err.find(id) != std::string::npos);
    }
}

TEST_CASE("negative k is accepted as a value")
{
    const auto r = run({"table", "polybernoulli-B", "--k", "-3", "--max-n", "3", "--format", "json"});
    REQUIRE(r.code == cli::exit_ok);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["sequence"] == "polybernoulli-B");
    REQUIRE(doc["rows"].size() == 4);
    // B_n^(-3) for n = 0..3: 1, 8, 46, 230
    std::vector<std::string> last;
    for (const auto &row : doc["rows"]) {
        last.push_back(row.back().get<std::string>());
    }
    CHECK(last == std::vector<std::string>{"1", "8", "46", "230"});
}

TEST_CASE("expand emits the documented schema")
{
    const auto r = run({"expand", "egf-B", "--k", "-1", "--order", "3"});
    REQUIRE(r.code == cli::exit_ok);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["gf"] == "egf-B");
    CHECK(doc["variable_orders"]["t"] == 3);
    const auto &c = doc["coefficients"];
    REQUIRE(c.size() == 4);
    // e^{2t} has ordinary coefficients 2^n / n!.
    CHECK(c[0] == nlohmann::json::array({"0", "1"}));
    CHECK(c[3] == nlohmann::json::array({"3", "4/3"}));

    const auto two = run({"expand", "egf-scriptB", "--n", "1", "--order", "2"});
    REQUIRE(two.code == cli::exit_ok);
    const auto d2 = nlohmann::json::parse(two.out);
    CHECK(d2["variable_orders"].size() == 2);
    CHECK(d2["coefficients"][0][0] == "0,0");
    CHECK(d2["coefficients"][0][1] == "1");

    for (const std::string gf : cli::gf_ids) {
        INFO(gf);
        std::vector<std::string> args = {"expand", gf, "--order", "6"};
        if (gf.starts_with("egf-")) {
            // the parametrized families refuse to guess k or n
            CHECK(run(args).code == cli::exit_usage);
            args.insert(args.end(), {gf == "egf-scriptB" ? "--n" : "--k", "2"});
        }
        if (gf == "egf-poly") {
            CHECK(run(args).code == cli::exit_usage);
            args.insert(args.end(), {"--x", "1/2"});
        }
        CHECK(run(args).code == cli::exit_ok);
    }
    CHECK(run({"expand", "nosuchgf"}).code == cli::exit_usage);
}

TEST_CASE("verify exit codes")
{
    const auto all = run({"verify", "all"});
    CHECK(all.code == cli::exit_ok);
    CHECK(all.out.find("FAIL") == std::string::npos);
    CHECK(all.out.find("checks passed") != std::string::npos);

    const auto unknown = run({"verify", "nosuch"});
    CHECK(unknown.code == cli::exit_usage);
    CHECK(unknown.err.find("recursion412") != std::string::npos);

    CHECK(run({"verify", "egf", "--order", "1"}).code == cli::exit_usage);
    CHECK(run({"verify", "lemma46", "--mode", "sample", "--points", "1/2"}).code == cli::exit_usage);
    CHECK(run({"verify", "lemma46", "--mode", "sample", "--points", "1/100,-1/101", "--max-n", "3"}).code
          == cli::exit_ok);
    CHECK(run({"verify", "lemma46", "--mode", "nonsense"}).code == cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
    CHECK(run({}).code == cli::exit_usage);
}

TEST_CASE("verify json report")
{
    const auto r = run({"verify", "zagier", "--order", "4", "--format", "json"});
    REQUIRE(r.code == cli::exit_ok);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    const auto &rep = doc[0];
    CHECK(rep["identity"] == "zagier");
    CHECK(rep["params"]["order"] == "4");
    CHECK(rep["passed"] == true);
    CHECK(rep["counterexample"].is_null());
    CHECK(rep["checked"].get<int>() >= 1);
}

TEST_CASE("failed reports serialize their counterexample")
{
    const auto rep = verify_prop41(5, mutation{2});
    const auto j = cli::to_json(rep);
    CHECK(j["passed"] == false);
    CHECK(j["counterexample"]["at"] == "n=3");
    CHECK(j["counterexample"]["lhs"] == "1");
    CHECK(j["counterexample"]["rhs"] == "0");
}

TEST_CASE("output file and determinism")
{
    const auto path = std::filesystem::temp_directory_path() / "polybern_cli_test.json";
    std::filesystem::remove(path);
    const auto r = run({"table", "stirling2", "--max-n", "6", "--format", "json", "--output", path.string()});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream file;
    file << in.rdbuf();
    const auto direct = run({"table", "stirling2", "--max-n", "6", "--format", "json"});
    CHECK(file.str() == direct.out);
    std::filesystem::remove(path);

    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"verify", "all", "--format", "json"},
          std::vector<std::string>{"expand", "egf-scriptB", "--n", "2", "--order", "6"},
          std::vector<std::string>{"table", "scriptB", "--n", "2", "--max-n", "4"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
