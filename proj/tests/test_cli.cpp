#include <doctest.h>

#include <sstream>

#include "keypoly/cli.hpp"
#include "keypoly/serialize.hpp"
#include "example9.hpp"

using namespace keypoly;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("key subcommand renders the worked example") {
    const auto r = run_cli({"key", "--zeta", "7,5,4,2", "--pi", "6,8,3,7,4,1,9,2,5"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1 3 3 6\n"
          "3 4 6 8\n"
          "4 6 7\n"
          "6 7 8\n"
          "7 8\n"
          "8\n"
          "9\n");
    CHECK(r.err.empty());
}

TEST_CASE("key json output feeds the scanners back") {
    const auto key = run_cli({"key", "--zeta", "7,5,4,2", "--pi", "6,8,3,7,4,1,9,2,5",
                              "--format", "json"});
    CHECK(key.code == 0);
    // A key is a fixed point of both scans, so piping it through rkey and
    // lkey must reproduce it byte for byte.
    for (const char* scan : {"rkey", "lkey"}) {
        const auto back = run_cli({scan, "-", "--format", "json"}, key.out);
        CHECK(back.code == 0);
        CHECK(back.out == key.out);
    }
}

TEST_CASE("right scan of the filled example tableau") {
    const std::string input = to_json(example9::filled()).dump();
    const auto r = run_cli({"rkey", "-", "--format", "json"}, input);
    CHECK(r.code == 0);
    CHECK(r.out == to_json(example9::key()).dump() + "\n");

    const auto with_paths = run_cli({"rkey", "-", "--format", "json", "--paths"}, input);
    CHECK(with_paths.code == 0);
    const json j = json::parse(with_paths.out);
    CHECK(j["scan"] == to_json(example9::key()));
    CHECK(j["paths"].size() == 18);
    CHECK(j["paths"][0]["origin"] == json::array({1, 1}));
}

TEST_CASE("atom polynomial with both routes") {
    const auto r = run_cli({"atom", "--lambda", "1", "--n", "3", "--pi", "2,1,3",
                            "--route", "both"});
    CHECK(r.code == 0);
    CHECK(r.out == "x2\n");
    CHECK(r.err.empty());

    const auto c = run_cli({"atom", "--lambda", "1", "--n", "3", "--pi", "2,1,3",
                            "--count"});
    CHECK(c.code == 0);
    CHECK(c.out == "1\n");
}

TEST_CASE("demazure polynomial routes and streaming") {
    const auto r = run_cli({"demazure", "--lambda", "2,1,0", "--pi", "3,2,1",
                            "--route", "both"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "x1^2 x2 + x1^2 x3 + x1 x2^2 + 2 * x1 x2 x3 + x1 x3^2 + x2^2 x3 + x2 x3^2\n");

    const auto stream = run_cli({"demazure", "--lambda", "1", "--n", "3", "--pi",
                                 "3,1,2", "--tableaux", "--route", "both"});
    CHECK(stream.code == 0);
    std::istringstream lines(stream.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const Tableau t = tableau_from_json(json::parse(line));
        CHECK(t.shape().cell_count() == 1);
        ++count;
    }
    CHECK(count == 3);
}

TEST_CASE("interval polynomials in both forms") {
    const std::vector<std::string> base{"interval", "--lambda", "1", "--n", "3",
                                        "--sigma", "1,2,3", "--pi", "3,2,1",
                                        "--route", "both"};
    auto bounded = base;
    const auto r1 = run_cli(bounded);
    CHECK(r1.code == 0);
    CHECK(r1.out == "x1 + x2 + x3\n");

    auto exact = base;
    exact.push_back("--form");
    exact.push_back("exact");
    const auto r2 = run_cli(exact);
    CHECK(r2.code == 0);
    CHECK(r2.out == "0\n");
}

TEST_CASE("sets subcommand prints a condition set") {
    const std::string input = to_json(example9::filled()).dump();
    const auto r = run_cli({"sets", "-", "--kind", "C", "--cell", "2,3", "--pi",
                            "6,8,3,7,4,1,9,2,5"},
                           input);
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["cell"] == json::array({2, 3}));
    CHECK(j["kind"] == "C");
    CHECK(j["values"] == json::array({3, 4, 5}));

    const auto text = run_cli({"sets", "-", "--kind", "C", "--cell", "2,3", "--pi",
                               "6,8,3,7,4,1,9,2,5", "--format", "text"},
                              input);
    CHECK(text.code == 0);
    CHECK(text.out == "C(2,3) = {3,4,5}\n");

    // F and G need the left bound permutation instead.
    const auto missing = run_cli({"sets", "-", "--kind", "G", "--cell", "1,1", "--pi",
                                  "6,8,3,7,4,1,9,2,5"},
                                 input);
    CHECK(missing.code == 2);
    CHECK(json::parse(missing.err)["error"] == "parse");
}

TEST_CASE("render subcommand") {
    const auto r = run_cli({"render", "-"}, to_json(example9::filled()).dump());
    CHECK(r.code == 0);
    CHECK(r.out == render(example9::filled()));
}

TEST_CASE("verify subcommand reports per check lines") {
    const auto r = run_cli({"verify", "rho-example"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS rho-example") != std::string::npos);
    CHECK(r.out.find("passed 1/1 checks") != std::string::npos);

    const auto bad = run_cli({"verify", "no-such-suite"});
    CHECK(bad.code == 2);
}

TEST_CASE("exit codes and error payloads") {
    // Unknown option: argument parse error.
    const auto parse = run_cli({"key", "--bogus"});
    CHECK(parse.code == 2);
    CHECK(json::parse(parse.err)["error"] == "parse");

    // Increasing parts: validation of a parsed object.
    const auto validation = run_cli({"key", "--lambda", "1,2", "--pi", "1,2,3"});
    CHECK(validation.code == 3);
    CHECK(json::parse(validation.err)["error"] == "validation");

    // Not a permutation.
    const auto perm = run_cli({"key", "--lambda", "1,1", "--pi", "1,1,3"});
    CHECK(perm.code == 3);

    // Malformed tableau JSON from stdin.
    const auto garbage = run_cli({"rkey", "-"}, "not json");
    CHECK(garbage.code == 3);
    CHECK(json::parse(garbage.err)["error"] == "validation");

    // Generator frame cap: limit errors also map to exit 3.
    const auto capped = run_cli({"demazure", "--lambda", "2,1,0", "--pi", "3,2,1",
                                 "--tableaux", "--max-frames", "1"});
    CHECK(capped.code == 3);
    CHECK(json::parse(capped.err)["error"] == "limit");

    // Missing subcommand.
    CHECK(run_cli({}).code == 2);
}
