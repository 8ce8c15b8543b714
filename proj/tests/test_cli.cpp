#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "codedesign/json_io.hpp"

using namespace codedesign;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Spawns the installed binary through the shell; stdout is captured, stderr
// passes through to the test log.
RunResult run(const std::string& args, const std::string& env = "") {
    std::string out_file = "cli_stdout.tmp";
    std::string cmd = env + (env.empty() ? "" : " ") + CODE_DESIGNER_BINARY +
                      " " + args + " > " + out_file;
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    res.out = ss.str();
    std::remove(out_file.c_str());
    return res;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kFreeInstance = R"({
  "schema_version": 1,
  "n": 5,
  "k": 2,
  "zero_sets": [[], []]
})";

const char* kRunningInstance = R"({
  "schema_version": 1,
  "n": 4,
  "k": 2,
  "zero_sets": [[0, 1], [2]]
})";

}  // namespace

TEST_CASE("check reports feasibility and the bound") {
    write_file("cli_free.json", kFreeInstance);
    auto res = run("check cli_free.json");
    REQUIRE(res.code == 0);
    auto j = Json::parse(res.out);
    CHECK(j.at("ell") == 2);
    CHECK(j.at("d_upper") == 4);  // n - k + 1 for empty sets
    CHECK(j.at("feasible_mds") == true);
    CHECK_FALSE(j.contains("violating_omega"));
}

TEST_CASE("check names the clashing rows") {
    write_file("cli_clash.json", R"({
  "schema_version": 1,
  "n": 3,
  "k": 2,
  "zero_sets": [[0], [0]]
})");
    auto res = run("check cli_clash.json");
    REQUIRE(res.code == 0);
    auto j = Json::parse(res.out);
    CHECK(j.at("feasible_mds") == false);
    CHECK(j.at("violating_omega") == Json::array({0, 1}));
}

TEST_CASE("bound emits only the bound fields") {
    write_file("cli_run.json", kRunningInstance);
    auto res = run("bound cli_run.json");
    REQUIRE(res.code == 0);
    auto j = Json::parse(res.out);
    CHECK(j.at("ell") == 3);
    CHECK(j.at("d_upper") == 2);
    CHECK_FALSE(j.contains("feasible_mds"));
}

TEST_CASE("construct meets its frozen examples") {
    write_file("cli_free6.json", R"({
  "schema_version": 1,
  "n": 6,
  "k": 3,
  "zero_sets": [[], [], []]
})");
    auto res = run("construct cli_free6.json --seed 3 --out cli_free6_design.json");
    REQUIRE(res.code == 0);
    auto design = load_json_file("cli_free6_design.json");
    CHECK(design.at("q") == 8);
    CHECK(design.at("d") == 4);

    write_file("cli_run.json", kRunningInstance);
    auto res2 = run(
        "construct cli_run.json --policy smallest-prime --out cli_run_design.json");
    REQUIRE(res2.code == 0);
    auto design2 = load_json_file("cli_run_design.json");
    CHECK(design2.at("q") == 7);
    CHECK(design2.at("d") == 2);
}

TEST_CASE("construct is byte-identical per seed") {
    write_file("cli_run.json", kRunningInstance);
    REQUIRE(run("construct cli_run.json --seed 41 --out cli_a.json").code == 0);
    REQUIRE(run("construct cli_run.json --seed 41 --out cli_b.json").code == 0);
    CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
}

TEST_CASE("construct honors forced fields and rejects hopeless ones") {
    write_file("cli_run.json", kRunningInstance);
    auto res = run("construct cli_run.json --q 9 --out cli_q9.json");
    REQUIRE(res.code == 0);
    CHECK(load_json_file("cli_q9.json").at("q") == 9);
    // q = 3 cannot even seat n = 4 distinct points.
    CHECK(run("construct cli_run.json --q 3").code == 4);
    // a pattern no length supports
    write_file("cli_full.json", R"({
  "schema_version": 1,
  "n": 2,
  "k": 1,
  "zero_sets": [[0, 1]]
})");
    CHECK(run("construct cli_full.json").code == 4);
}

TEST_CASE("verify passes fresh output and flags tampering") {
    write_file("cli_run.json", kRunningInstance);
    REQUIRE(run("construct cli_run.json --seed 8 --out cli_v.json").code == 0);
    auto ok = run("verify cli_v.json cli_run.json");
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out).at("ok") == true);

    // Overwrite a required zero: pattern check must fail, exit 1.
    auto design = load_json_file("cli_v.json");
    design["G"][0][0] = 1;
    save_json_file("cli_v_tampered.json", design);
    auto bad = run("verify cli_v_tampered.json cli_run.json");
    CHECK(bad.code == 1);
    auto j = Json::parse(bad.out);
    CHECK(j.at("pattern_ok") == false);
    CHECK(j.at("ok") == false);

    // Internally inconsistent metadata is refused at load time.
    design = load_json_file("cli_v.json");
    design["d"] = 5;
    save_json_file("cli_v_meta.json", design);
    CHECK(run("verify cli_v_meta.json cli_run.json").code == 5);

    // Same for a design paired with the wrong instance.
    write_file("cli_free.json", kFreeInstance);
    CHECK(run("verify cli_v.json cli_free.json").code == 5);
}

TEST_CASE("t3-oracle agrees on file instances and sweeps") {
    write_file("cli_gen.json", R"({
  "schema_version": 1,
  "n": 3,
  "blocks": [{"set": [], "r": 3}]
})");
    auto res = run("t3-oracle cli_gen.json --seed 2");
    REQUIRE(res.code == 0);
    auto j = Json::parse(res.out);
    CHECK(j.at("condition") == true);
    CHECK(j.at("oracle_nonzero") == true);
    CHECK(j.at("agree") == true);

    write_file("cli_dup.json", R"({
  "schema_version": 1,
  "n": 4,
  "blocks": [{"set": [1], "r": 2}, {"set": [1], "r": 2}]
})");
    auto res2 = run("t3-oracle cli_dup.json");
    REQUIRE(res2.code == 0);
    auto j2 = Json::parse(res2.out);
    CHECK(j2.at("condition") == false);
    CHECK(j2.at("oracle_nonzero") == false);
    CHECK(j2.at("agree") == true);

    auto sweep = run("t3-oracle --exhaustive",
                     "CODE_DESIGNER_CAPS=enum_k=2,enum_n=3");
    REQUIRE(sweep.code == 0);
    auto j3 = Json::parse(sweep.out);
    CHECK(j3.at("all_agree") == true);
    CHECK(j3.at("total").get<int>() > 0);
}

TEST_CASE("decode-demo recovers everything inside the radius") {
    write_file("cli_free8.json", R"({
  "schema_version": 1,
  "n": 8,
  "k": 2,
  "zero_sets": [[], []]
})");
    REQUIRE(run("construct cli_free8.json --seed 1 --out cli_d8.json").code == 0);
    auto res = run("decode-demo cli_d8.json --trials 40 --seed 6");
    REQUIRE(res.code == 0);
    auto j = Json::parse(res.out);
    CHECK(j.at("radius") == 3);
    CHECK(j.at("errors_injected") == 3);
    CHECK(j.at("successes") == 40);
    CHECK(j.at("guaranteed") == true);

    auto res0 = run("decode-demo cli_d8.json --errors 0 --trials 25");
    REQUIRE(res0.code == 0);
    CHECK(Json::parse(res0.out).at("successes") == 25);

    // Beyond the radius the rate is reported without a guarantee.
    auto over = run("decode-demo cli_d8.json --errors 5 --trials 25");
    REQUIRE(over.code == 0);
    CHECK(Json::parse(over.out).at("guaranteed") == false);

    CHECK(run("decode-demo cli_d8.json --errors 8").code == 2);
}

TEST_CASE("error taxonomy: malformed, caps, usage") {
    write_file("cli_bad.json", "{this is not json");
    CHECK(run("check cli_bad.json").code == 2);

    write_file("cli_run.json", kRunningInstance);
    CHECK(run("check cli_run.json", "CODE_DESIGNER_CAPS=subset=1").code == 3);
    CHECK(run("check cli_run.json", "CODE_DESIGNER_CAPS=nope=1").code == 2);

    CHECK(run("no-such-command").code == 2);
    CHECK(run("construct cli_run.json --policy forced").code == 2);
    CHECK(run("t3-oracle").code == 2);
}
