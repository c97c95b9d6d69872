#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsonio.hpp"

#include "wcifano/chern.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using wcifano::Int;
using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI through /bin/sh; stderr is dropped unless the caller
// redirects it inside `args`.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WCIFANO_BIN_PATH) + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<Json> parse_jsonl(const std::string& text) {
    std::vector<Json> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(Json::parse(line));
    return lines;
}

} // namespace

TEST_CASE("check: worked example report") {
    const auto result = run_cli("check --weights 1,1,1,2,3 --degrees 6");
    REQUIRE(result.exit_code == 0);
    const Json report = Json::parse(result.output);
    CHECK(report["schema"] == 1);
    CHECK(report["candidate"]["n"] == 3);
    CHECK(report["conditions"]["all_pass"] == true);
    CHECK(report["fano"] == true);
    CHECK(report["chern"][0] == 2);
    CHECK(report["chern"][1] == -20);
    CHECK(report["lfano"]["2"] == false);
    CHECK(report["window"]["lo"] == 2);
    CHECK(report["window"]["hi"] == 2);
}

TEST_CASE("check: the conic") {
    const auto result = run_cli("check --weights 1,1,1 --degrees 2");
    REQUIRE(result.exit_code == 0);
    const Json report = Json::parse(result.output);
    CHECK(report["fano"] == true);
    CHECK(report["window"]["lo"] == 1);
    CHECK(report["window"]["hi"] == 1);
    CHECK(report["lfano"]["1"] == true);
    CHECK(report["conditions"]["all_pass"] == true);
}

TEST_CASE("check: invalid input exits 2") {
    CHECK(run_cli("check --weights 1,1 --degrees 0").exit_code == 2);
    CHECK(run_cli("check --weights 1,x --degrees 2").exit_code == 2);
    CHECK(run_cli("check --weights 1,1 --degrees 2").exit_code == 2); // n = 0
    CHECK(run_cli("check --weights 1,1,1").exit_code == 2); // missing option
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("enumerate: the dimension-7 quadric box and record round-trip") {
    const auto result =
        run_cli("enumerate --dim 7 --max-weight 10 --max-degree 20 --l 3");
    REQUIRE(result.exit_code == 0);
    const auto lines = parse_jsonl(result.output);
    REQUIRE(lines.size() == 1);
    const Json& record = lines[0];
    CHECK(record["schema"] == 1);
    CHECK(record["n"] == 7);
    CHECK(record["k"] == 1);
    CHECK(record["weights"] == Json::array({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(record["degrees"] == Json::array({2}));
    CHECK(record["chern"] == Json::array({7, 5, 1}));
    CHECK(record["l"] == 3);

    // Round-trip: the record re-parses and its check report agrees.
    const auto parsed =
        wcifano::jsonio::record_from_json(nlohmann::ordered_json::parse(record.dump()));
    REQUIRE(parsed.has_value());
    const auto check = run_cli("check --weights 1,1,1,1,1,1,1,1,1 --degrees 2 --l 3");
    REQUIRE(check.exit_code == 0);
    const Json report = Json::parse(check.output);
    CHECK(report["candidate"]["n"] == record["n"]);
    CHECK(report["candidate"]["k"] == record["k"]);
    CHECK(report["candidate"]["weights"] == record["weights"]);
    CHECK(report["candidate"]["degrees"] == record["degrees"]);
    for (std::size_t m = 0; m < record["chern"].size(); ++m)
        CHECK(report["chern"][m] == record["chern"][m]);
    CHECK(report["lfano"]["3"] == true);
}

TEST_CASE("enumerate: --l auto uses the window top") {
    const auto with_auto =
        run_cli("enumerate --dim 7 --max-weight 10 --max-degree 20 --l auto");
    const auto explicit_l =
        run_cli("enumerate --dim 7 --max-weight 10 --max-degree 20 --l 3");
    REQUIRE(with_auto.exit_code == 0);
    CHECK(with_auto.output == explicit_l.output);
}

TEST_CASE("enumerate: csv format") {
    const auto result = run_cli(
        "enumerate --dim 7 --max-weight 10 --max-degree 20 --l 3 --format csv");
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.output);
    std::string header, row;
    REQUIRE(std::getline(in, header));
    CHECK(header == "n,k,weights,degrees,c1,c2,c3");
    REQUIRE(std::getline(in, row));
    CHECK(row == "7,1,1+1+1+1+1+1+1+1+1,2,7,5,1");
}

TEST_CASE("enumerate: invalid caps exit 2") {
    CHECK(run_cli("enumerate --dim 0 --max-weight 5 --max-degree 10 --l 1")
              .exit_code == 2);
    CHECK(run_cli("enumerate --dim 2 --max-weight 5 --max-degree 10 --l bogus")
              .exit_code == 2);
}

TEST_CASE("verify: exit code contract") {
    CHECK(run_cli("verify --theorem log2 --dim-min 1 --dim-max 3 --max-weight 6 "
                  "--max-degree 12")
              .exit_code == 0);
    CHECK(run_cli("verify --theorem log3 --dim-min 2 --dim-max 2 --max-weight 6 "
                  "--max-degree 12")
              .exit_code == 0); // empty window, vacuous
    CHECK(run_cli("verify --theorem monotonic --dim-min 1 --dim-max 3 "
                  "--max-weight 6 --max-degree 12")
              .exit_code == 0);
    // Violation path (synthetic, clearly marked in the report).
    const auto injected =
        run_cli("verify --theorem log2 --dim-min 1 --dim-max 1 --max-weight 4 "
                "--max-degree 8 --selftest-inject-violation");
    CHECK(injected.exit_code == 1);
    const Json report = Json::parse(injected.output);
    CHECK(report["verdict"] == "violation");
    REQUIRE(report["violations"].size() == 1);
    CHECK(report["violations"][0]["reason"] == "selftest-injected");
    // Usage errors.
    CHECK(run_cli("verify --theorem nonsense --dim-min 1 --dim-max 2 "
                  "--max-weight 4 --max-degree 8")
              .exit_code == 2);
    CHECK(run_cli("verify --theorem log2 --dim-min 3 --dim-max 1 --max-weight 4 "
                  "--max-degree 8")
              .exit_code == 2);
}

TEST_CASE("verify: report shape") {
    const auto result = run_cli(
        "verify --theorem log2 --dim-min 1 --dim-max 2 --max-weight 6 "
        "--max-degree 12");
    REQUIRE(result.exit_code == 0);
    const Json report = Json::parse(result.output);
    CHECK(report["schema"] == 1);
    CHECK(report["theorem"] == "log2");
    CHECK(report["verdict"] == "confirmed-within-caps");
    CHECK(report["survivor_total"] == 0);
    CHECK(report["runs"].size() == 2);
    CHECK(report["config"]["max_weight"] == 6);
}

TEST_CASE("reduce: additive golden trace through the CLI") {
    const auto result =
        run_cli("reduce --mode additive --weights 1,1,2,3 --degrees 6");
    REQUIRE(result.exit_code == 0);
    const Json trace = Json::parse(result.output);
    CHECK(trace["mode"] == "additive");
    REQUIRE(trace["steps"].size() == 1);
    CHECK(trace["steps"][0]["case"] == "s-up");
    CHECK(trace["steps"][0]["c"] == 1);
    CHECK(trace["steps"][0]["state"]["weights"] == Json::array({1, 1, 1, 4}));
    CHECK(trace["terminal"]["kind"] == "s=N");
    CHECK(trace["terminal"]["verdict"] == true);
}

TEST_CASE("reduce: multiplicative trace with rational weights") {
    const auto result = run_cli(
        "reduce --mode multiplicative --weights 1,1,1,3,3,3 --degrees 6,9");
    REQUIRE(result.exit_code == 0);
    const Json trace = Json::parse(result.output);
    REQUIRE(trace["steps"].size() == 1);
    CHECK(trace["steps"][0]["case"] == "drop-pair");
    CHECK(trace["steps"][0]["p"] == "2");
    CHECK(trace["steps"][0]["state"]["weights"] ==
          Json::array({"1", "1", "1", "3/2", "3"}));
    CHECK(trace["terminal"]["kind"] == "case-3");
    CHECK(trace["terminal"]["checker"] == "check_case3");
    CHECK(trace["terminal"]["verdict"] == true);
}

TEST_CASE("reduce: hypothesis violations exit 2 naming the hypothesis") {
    const std::string cmd =
        std::string(WCIFANO_BIN_PATH) +
        " reduce --mode multiplicative --weights 1,1 --degrees 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 1024> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(output.find("hypothesis violation") != std::string::npos);

    CHECK(run_cli("reduce --mode additive --weights 1,1,2,3 --degrees 9")
              .exit_code == 2);
}

TEST_CASE("blowup: exact fraction table") {
    const auto result = run_cli("blowup --n 4");
    REQUIRE(result.exit_code == 0);
    const Json table = Json::parse(result.output);
    REQUIRE(table["rows"].size() == 4);
    CHECK(table["rows"][0]["ch_dot_X"] == "2");
    CHECK(table["rows"][0]["ch_dot_Y"] == "3");
    CHECK(table["rows"][1]["ch_dot_X"] == "0");
    CHECK(table["rows"][1]["ch_dot_Y"] == "5/2");
    CHECK(table["rows"][2]["ch_dot_X"] == "1/3");
    CHECK(table["rows"][2]["ch_dot_Y"] == "1/2");
    CHECK(table["rows"][3]["ch_top"] == "0");
    CHECK(run_cli("blowup --n 1").exit_code == 2);
}

TEST_CASE("config file provides defaults; flags and env interact correctly") {
    const std::string path = "/tmp/wcifano_test_config.txt";
    {
        std::ofstream cfg(path);
        cfg << "# defaults for the quadric box\n";
        cfg << "l = 3\n";
        cfg << "max-weight = 10\n";
    }
    const auto from_config = run_cli("--config " + path +
                                     " enumerate --dim 7 --max-degree 20");
    REQUIRE(from_config.exit_code == 0);
    auto lines = parse_jsonl(from_config.output);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["l"] == 3);

    // Explicit flags override file values.
    const auto overridden = run_cli("--config " + path +
                                    " enumerate --dim 7 --max-degree 20 --l 2");
    auto overridden_lines = parse_jsonl(overridden.output);
    REQUIRE(overridden_lines.size() == 2); // l = 2 admits k = 2 as well
    CHECK(overridden_lines[0]["l"] == 2);

    // Env var points at the same defaults file.
    const std::string env_cmd = "WCIFANO_CONFIG=" + path + " " +
                                std::string(WCIFANO_BIN_PATH) +
                                " enumerate --dim 7 --max-degree 20 2>/dev/null";
    FILE* pipe = popen(env_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    pclose(pipe);
    CHECK(output == from_config.output);
    std::remove(path.c_str());
}
