#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "periparts/cli.hpp"

using namespace periparts;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate text output") {
    const auto r = cli({"enumerate", "--family", "perimeter", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(r.err.empty());

    const auto sized = cli({"enumerate", "--family", "size", "--n", "4"});
    CHECK(sized.code == 0);
    CHECK(sized.out == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");

    const auto subsets = cli({"enumerate", "--family", "extraordinary", "--n", "5", "--k", "2"});
    CHECK(subsets.out == "1,2\n1,3,4\n1,3,5\n2,3,4\n2,3,5\n");

    const auto labeled = cli({"enumerate", "--family", "labeled-d", "--n", "2", "--d", "1"});
    CHECK(labeled.out == "1,1*\n");
}

TEST_CASE("enumerate machine formats") {
    const auto json = cli({"enumerate", "--family", "perimeter", "--n", "1", "--format", "json"});
    CHECK(json.out == "{\"command\":\"enumerate\",\"params\":{\"family\":\"perimeter\",\"n\":1},\"rows\":[\"1\"]}\n");

    const auto csv = cli({"enumerate", "--family", "perimeter", "--n", "3", "--format", "csv"});
    CHECK(csv.out == "partition\n3\n\"2,2\"\n\"2,1\"\n\"1,1,1\"\n");

    // identical invocations are byte-identical
    CHECK(cli({"enumerate", "--family", "perimeter", "--n", "6", "--format", "json"}).out ==
          cli({"enumerate", "--family", "perimeter", "--n", "6", "--format", "json"}).out);
}

TEST_CASE("enumerate parameter validation") {
    CHECK(cli({"enumerate", "--family", "perimeter", "--n", "0"}).code == 2);
    CHECK(cli({"enumerate", "--family", "perimeter", "--n", "3", "--k", "1"}).code == 2);
    CHECK(cli({"enumerate", "--family", "extraordinary", "--n", "3"}).code == 2);
    CHECK(cli({"enumerate", "--family", "labeled-d", "--n", "3"}).code == 2);
    CHECK(cli({"enumerate", "--family", "nope", "--n", "3"}).code == 2);
}

TEST_CASE("map apply") {
    CHECK(cli({"map", "apply", "--map", "phi", "--d", "1", "--input", "0101"}).out == "0001\n");
    CHECK(cli({"map", "apply", "--map", "phi-inverse", "--d", "1", "--input", "0001"}).out == "0101\n");
    CHECK(cli({"map", "apply", "--map", "phi", "--d", "1", "--input", "2,1"}).out == "3\n");
    CHECK(cli({"map", "apply", "--map", "xi", "--d", "5", "--input", "14,13,11*,10,5,2"}).out ==
          "14,13,11,10*,5,2\n");
    const auto json = cli({"map", "apply", "--map", "phi", "--d", "2", "--input", "00011",
                           "--format", "json"});
    CHECK(json.out ==
          "{\"command\":\"map\",\"params\":{\"action\":\"apply\",\"map\":\"phi\",\"d\":2,"
          "\"input\":\"00011\"},\"rows\":[\"01101\"]}\n");

    CHECK(cli({"map", "apply", "--map", "xi", "--d", "2", "--input", "2,1"}).code == 2);
    CHECK(cli({"map", "apply", "--map", "phi", "--d", "1", "--input", "2,2*"}).code == 2);
    CHECK(cli({"map", "apply", "--map", "xi", "--d", "2", "--input", "3,1*"}).code == 2);
    CHECK(cli({"map", "apply", "--map", "phi", "--d", "1", "--input", "10x"}).code == 2);
}

TEST_CASE("map orbit") {
    const auto r = cli({"map", "orbit", "--d", "2", "--input", "00001"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "00001\n01111\n00111\n01011\n00011\n01101\n00101\n01001\nlength: 8\n");
    CHECK(cli({"map", "orbit", "--d", "1", "--input", "2,1"}).code == 2);
}

TEST_CASE("count outputs") {
    const auto a5 = cli({"count", "--what", "A", "--n", "5"});
    CHECK(a5.out == "k=0: 5\nk=1: 5\nk=2: 4\nk=3: 1\nk=4: 1\n");
    const auto csv = cli({"count", "--what", "A", "--n", "5", "--format", "csv"});
    CHECK(csv.out == "n,k,value\n5,0,5\n5,1,5\n5,2,4\n5,3,1\n5,4,1\n");
    CHECK(cli({"count", "--what", "B", "--n", "5", "--format", "csv"}).out == csv.out);

    CHECK(cli({"count", "--what", "a-odd", "--n", "5"}).out == "28\n");
    CHECK(cli({"count", "--what", "a-even", "--n", "5"}).out == "20\n");
    CHECK(cli({"count", "--what", "fib", "--n", "10"}).out == "55\n");
    CHECK(cli({"count", "--what", "sum-dif", "--n", "4", "--d", "2"}).out == "11\n");
    CHECK(cli({"count", "--what", "h", "--n", "3"}).out == "k=0: 0\nk=1: 1\nk=2: -1\n");

    const auto json = cli({"count", "--what", "sum-dif", "--n", "5", "--d", "1", "--format", "json"});
    CHECK(json.out ==
          "{\"command\":\"count\",\"params\":{\"what\":\"sum-dif\",\"n\":5,\"d\":1},"
          "\"rows\":[{\"n\":5,\"value\":\"20\"}]}\n");

    CHECK(cli({"count", "--what", "sum-dif", "--n", "4"}).code == 2);
    CHECK(cli({"count", "--what", "sum-dif", "--n", "4", "--d", "9"}).code == 2);
    CHECK(cli({"count", "--what", "sum-dif", "--n", "4", "--d", "9", "--allow-degenerate"}).code == 0);
    CHECK(cli({"count", "--what", "a-odd", "--n", "1"}).code == 2);
}

TEST_CASE("series outputs") {
    CHECK(cli({"series", "--name", "delta", "--d", "2", "--order", "6"}).out ==
          "0,1,2,3,5,10,21\n");
    CHECK(cli({"series", "--name", "rep-even", "--order", "3", "--at", "p=1,q=1"}).out ==
          "0,1,2,4\n");
    const auto symbolic = cli({"series", "--name", "dif", "--d", "1", "--order", "3"});
    CHECK(symbolic.out == "0,1,1 + t,2 + t + t^2\n");

    const auto csv = cli({"series", "--name", "delta", "--d", "3", "--order", "4", "--format", "csv"});
    CHECK(csv.out == "x_degree,coefficient\n0,0\n1,2\n2,6\n3,12\n4,20\n");

    const auto xy = cli({"series", "--name", "dist-even-xy", "--order", "2", "--format", "csv",
                         "--at", "p=1,q=1"});
    CHECK(xy.out ==
          "x_degree,y_degree,coefficient\n0,0,0\n0,1,0\n0,2,0\n1,0,0\n1,1,1\n1,2,1\n"
          "2,0,0\n2,1,1\n2,2,2\n");

    CHECK(cli({"series", "--name", "rep-even", "--order", "3", "--d", "1"}).code == 2);
    CHECK(cli({"series", "--name", "dif", "--order", "3"}).code == 2);
    CHECK(cli({"series", "--name", "delta", "--d", "2", "--order", "4", "--at", "p=x"}).code == 2);
    CHECK(cli({"series", "--name", "delta", "--d", "2", "--order", "4", "--at", "z=1"}).code == 2);
    CHECK(cli({"series", "--name", "delta", "--d", "2"}).code == 2);
}

TEST_CASE("verify outputs and exit codes") {
    const auto text = cli({"verify", "--theorem", "rep-even", "--n", "5"});
    CHECK(text.code == 0);
    CHECK(text.out.find("rep-even n=5: PASS") != std::string::npos);
    CHECK(text.out.find("rep: (5,5,4,1,1)") != std::string::npos);
    CHECK(text.out.find("even: (5,5,4,1,1)") != std::string::npos);

    const auto json = cli({"verify", "--theorem", "rep-even", "--n", "5", "--format", "json"});
    CHECK(json.out ==
          "{\"command\":\"verify\",\"params\":{\"theorem\":\"rep-even\",\"n\":5},"
          "\"report\":[{\"theorem\":\"rep-even\",\"params\":{\"n\":5},\"status\":\"pass\","
          "\"detail\":{\"rep\":\"(5,5,4,1,1)\",\"even\":\"(5,5,4,1,1)\"}}]}\n");

    CHECK(cli({"verify", "--theorem", "ineq", "--n", "6", "--d", "2"}).code == 0);
    CHECK(cli({"verify", "--theorem", "all", "--n", "4", "--d", "2", "--order", "6",
               "--jobs", "2"}).code == 0);
    CHECK(cli({"verify", "--theorem", "straub", "--n", "0"}).code == 2);
    CHECK(cli({"verify", "--theorem", "unknown", "--n", "5"}).code == 2);
    // CSV is not a verify format
    CHECK(cli({"verify", "--theorem", "straub", "--n", "5", "--format", "csv"}).code == 2);
}

TEST_CASE("exit code mapping for failing reports") {
    VerificationReport ok;
    ok.pass = true;
    VerificationReport bad;
    bad.pass = false;
    bad.witness = "k=0";
    CHECK(exit_code_for({ok, ok}) == 0);
    CHECK(exit_code_for({ok, bad}) == 1);
    CHECK(exit_code_for({}) == 0);
}

TEST_CASE("usage errors and help") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"unknown"}).code == 2);
    CHECK(cli({"enumerate"}).code == 2);
    CHECK(cli({"enumerate", "--family", "perimeter", "--n", "2", "--bogus"}).code == 2);
    const auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("output goes to a file when asked") {
    const std::string path = "cli_test_output.json";
    const auto r = cli({"enumerate", "--family", "perimeter", "--n", "1",
                        "--format", "json", "--output", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() ==
          "{\"command\":\"enumerate\",\"params\":{\"family\":\"perimeter\",\"n\":1},\"rows\":[\"1\"]}\n");
    std::remove(path.c_str());
}
