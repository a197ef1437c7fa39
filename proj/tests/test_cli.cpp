#include "altres/cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using altres::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "altres");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream f(std::string(ALTRES_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(f.good(), name);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void check_round_trip(const std::string& line) {
    auto s = line;
    if (!s.empty() && s.back() == '\n') s.pop_back();
    CHECK(nlohmann::json::parse(s).dump() == s);
}

}  // namespace

TEST_CASE("mullineux text output") {
    auto r = run({"mullineux", "--p", "3", "--lambda", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("classify JSON") {
    auto r = run({"--json", "classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "point-stabilizer"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["outcome"] == "irreducible");
    CHECK(j["clause"] == "Theorem B(b)");
    CHECK(r.out.rfind("{", 0) == 0);
    check_round_trip(r.out);
    // flags also accepted after the verb
    auto r2 = run({"classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "point-stabilizer", "--json"});
    CHECK(r2.out == r.out);
}

TEST_CASE("JSON round trips for every verb") {
    const std::vector<std::vector<std::string>> cmds = {
        {"--json", "classify", "--p", "2", "--lambda", "5,3", "--subgroup", "intransitive:6,2"},
        {"--json", "enumerate", "--n", "8", "--p", "2"},
        {"--json", "invariants", "--n", "7", "--p", "2", "--module", "s2", "--subgroup", "young:4,3"},
        {"--json", "invariants", "--n", "6", "--p", "3", "--module", "perm", "--k", "2", "--generators", "(1,2,3);(4,5,6)"},
        {"--json", "mullineux", "--p", "3", "--lambda", "7,3,2"},
        {"--json", "jstrunc", "--lambda", "6,3,1"},
        {"--json", "reachable", "--p", "2", "--lambda", "5,3,1", "--m", "6"},
        {"--json", "verify", "js-parity", "--max-n", "12"},
        {"--json", "verify", "--list"},
    };
    for (const auto& c : cmds) {
        auto r = run(c);
        CHECK_MESSAGE(r.code == 0, c[1]);
        check_round_trip(r.out);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "young:5,3"}).code == 0);
    CHECK(run({"--strict", "classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "young:5,3"}).code == 1);
    CHECK(run({"--strict", "classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "young:7,1"}).code == 0);
    CHECK(run({"classify", "--p", "2", "--lambda", "4,x", "--subgroup", "full"}).code == 2);
    CHECK(run({"classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "wreath:3"}).code == 2);
    CHECK(run({"classify", "--p", "4", "--lambda", "4,3,1", "--subgroup", "full"}).code == 2);
    CHECK(run({"enumerate", "--n", "500"}).code == 2);
    CHECK(run({"mullineux", "--p", "2", "--lambda", "2,2"}).code == 2);
    CHECK(run({"verify", "no-such-suite"}).code == 2);
    CHECK(run({"verify", "js-parity", "--max-n", "1000"}).code == 2);
    CHECK(run({"invariants", "--n", "5", "--generators", "(1,2)"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify failure exits 3") {
    // n = 5 at p = 3 is where the stated S2* value does not hold.
    auto r = run({"verify", "invariants-young", "--max-n", "5", "--p", "3"});
    CHECK(r.code == 3);
    CHECK(r.out.rfind("FAIL invariants-young", 0) == 0);
}

TEST_CASE("verify writes a report file") {
    const std::string path = "altres_verify_report.json";
    auto r = run({"verify", "spin-dim", "--max-n", "10", "--out", path});
    CHECK(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    auto j = nlohmann::json::parse(f);
    CHECK(j["suite"] == "spin-dim");
    CHECK(j["passed"] == true);
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("invariants from generators report the containing Young subgroup") {
    auto r = run({"--json", "invariants", "--n", "6", "--p", "2", "--module", "perm", "--k", "1", "--generators",
                  "(1,2,3);(4,5)(1,2)"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["contained_in"] == "young:3,2,1");
    CHECK(j["invariants"] == 3);
}

TEST_CASE("golden outputs") {
    CHECK(run({"enumerate", "--n", "5", "--p", "3"}).out == golden("enumerate_splitting_5_3.txt"));
    CHECK(run({"--json", "mullineux", "--p", "3", "--lambda", "7,3,2"}).out == golden("mullineux_7_3_2_p3.json"));
    CHECK(run({"--json", "classify", "--p", "2", "--lambda", "4,3,1", "--subgroup", "point-stabilizer"}).out ==
          golden("classify_4_3_1_point_stabilizer.json"));
    CHECK(run({"reachable", "--p", "2", "--lambda", "7,5,3,1", "--m", "12"}).out == golden("reachable_7_5_3_1_m12.txt"));
    CHECK(run({"--json", "invariants", "--n", "8", "--p", "2", "--module", "s2", "--subgroup", "wreath:4x2"}).out ==
          golden("invariants_s2_wreath_4x2.json"));
}
