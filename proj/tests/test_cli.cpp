#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cpa/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cpa::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
    Run r = cli({"check", "P01"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    Run q = cli({"check", CPA_DEFAULT_DATA_DIR "/catalog/QAB.alg", "--single", "--identities", "AB"});
    CHECK(q.code == 0);
    CHECK(q.out == "A: pass\nB: fail\n");
}

TEST_CASE("der") {
    CHECK(cli({"der", "T1"}).out == "T1: Der 0, orbit 9\n");
    CHECK(cli({"der", "--abelian", "3"}).out == "abelian 3: Der 9, orbit 0\n");
    CHECK(cli({"der", "Pfrak16", "--generic"}).out == "Pfrak16: Der 3, orbit 13 (family 14)\n");
    CHECK(cli({"der", "P13", "--param", "a=2"}).out == "P13: Der 2, orbit 7\n");
}

TEST_CASE("h22") {
    CHECK(cli({"h22", "bbP6"}).out.rfind("Z dim 4, B dim 1, H dim 3, Ann dim 1\n", 0) == 0);
    CHECK(cli({"h22", "P1bold"}).out.rfind("Z dim 4, B dim 0, H dim 4, Ann dim 2\n", 0) == 0);
    auto j = nlohmann::json::parse(cli({"h22", "--abelian", "1", "--json"}).out);
    CHECK(j["H"] == 1);
}

TEST_CASE("extend") {
    Run r = cli({"extend", CPA_DEFAULT_DATA_DIR "/extensions/Pfrak27.ext"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim 4") != std::string::npos);
    Run c = cli({"extend", "P1bold", "--cocycle", "N12 + D12", "--cocycle", "N11"});
    CHECK(c.code == 0);
}

TEST_CASE("degen") {
    CHECK(cli({"degen", "G1.deg.02"}).code == 0);
    CHECK(cli({"degen", "G2.deg.07", "--mode", "numeric"}).code == 0);
    CHECK(cli({"degen", "no-such-witness"}).code == 2);
}

TEST_CASE("iso and fingerprint") {
    CHECK(cli({"iso", "P10", "P02"}).out.find("not isomorphic") != std::string::npos);
    CHECK(cli({"iso", "P01", "P01", "--map", "1,0,0;0,1,0;0,0,1"}).code == 0);
    CHECK(cli({"iso", "P01", "P03", "--map", "1,0,0;0,1,0;0,0,1"}).code == 1);
    CHECK(cli({"fingerprint", "T1"}).code == 0);
}

TEST_CASE("exit codes for usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"der", "NoSuchAlgebra"}).code == 2);
    CHECK(cli({"der", "P08", "--param", "a=0"}).code == 2);
    CHECK(cli({"suite", "--only", "nonsense"}).code == 2);
}

TEST_CASE("suite json round trip") {
    Run r = cli({"suite", "--only", "depolarization", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["claims"].size() == 2);
    CHECK(j["claims"][0]["id"] == "depolarization.QAB");
    CHECK(j["claims"][0]["anchor"] == "TheoremDep proof table");
    CHECK(j["totals"]["fail"] == 0);
    CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("suite text output is deterministic") {
    Run a = cli({"suite", "--only", "orbits"});
    Run b = cli({"suite", "--only", "orbits"});
    auto strip = [](const std::string& s) { return s.substr(0, s.rfind(" in ")); };
    CHECK(strip(a.out) == strip(b.out));
    CHECK(a.code == 1);
}
