#include <doctest.h>

#include "hopfcm/cli.hpp"
#include "hopfcm/system_def.hpp"

#include <iostream>
#include <sstream>

namespace {

struct Captured {
    int code;
    std::string out;
};

Captured run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hopfcm");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = hopfcm::cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str()};
}

}  // namespace

TEST_CASE("hopf at E1 with a = c = 1, b = 0, d = 1") {
    auto r = run_cli({"hopf", "--system", "khaled-original", "--point", "E1", "--params", "a=1,c=1,b=0,d=1", "--json"});
    REQUIRE(r.code == 0);
    auto j = hopfcm::Json::parse(r.out);
    CHECK(j["is_hopf"] == true);
    CHECK(j["eigenvalues"][0] == "+1*i");
    CHECK(j["eigenvalues"][2] == "-1");
}

TEST_CASE("hopf exits 2 when the point is not a Hopf point") {
    auto r = run_cli({"hopf", "--point", "E1", "--params", "a=2,c=1,b=0,d=1"});
    CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"focus", "--system", "e1-center", "--order", "0"}).code == 1);
    CHECK(run_cli({"hopf", "--params", "a"}).code == 1);
}

TEST_CASE("focus on the center reports zeros") {
    auto r = run_cli({"focus", "--system", "e1-center", "--order", "3", "--require-center", "--json"});
    REQUIRE(r.code == 0);
    auto j = hopfcm::Json::parse(r.out);
    CHECK(j["all_zero"] == true);
    CHECK(j["L"].size() == 3);
}

TEST_CASE("focus with k = 2, c = 0, d = 1 is not a center") {
    auto r = run_cli({"focus", "--system", "e1-normal", "--params", "k=2,c=0,d=1", "--order", "1", "--require-center"});
    CHECK(r.code == 2);
}

TEST_CASE("period of a focus exits 2") {
    CHECK(run_cli({"period", "--system", "e1-normal", "--params", "k=2,c=0,d=1"}).code == 2);
    auto r = run_cli({"period", "--system", "e1-center", "--json"});
    REQUIRE(r.code == 0);
    CHECK(hopfcm::Json::parse(r.out)["T"]["T2"] == "0");
}

TEST_CASE("verify runs a claim") {
    auto r = run_cli({"verify", "--claim", "teo1-center"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS teo1-center", 0) == 0);
    CHECK(run_cli({"verify", "--claim", "nope"}).code == 1);
}

TEST_CASE("catalog lists systems") {
    auto r = run_cli({"catalog", "--json"});
    REQUIRE(r.code == 0);
    CHECK(hopfcm::Json::parse(r.out)["systems"].size() >= 8);
}
