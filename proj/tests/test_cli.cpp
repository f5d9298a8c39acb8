/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(SDOM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& tag) {
    return std::filesystem::temp_directory_path() /
           ("sdom_test_" + tag + "_" + std::to_string(::getpid()) + ".json");
}

}  // namespace

TEST_CASE("cli gen formats") {
    CliResult edges = run_cli("gen -n 2 -t 2 --format edgelist");
    CHECK(edges.exit_code == 0);
    CHECK(edges.output == "1.1 1.2\n1.2 2.1\n2.1 2.2\n");

    CliResult dot = run_cli("gen -n 3 -t 1 --format dot");
    CHECK(dot.exit_code == 0);
    std::size_t count = 0, pos = 0;
    while ((pos = dot.output.find(" -- ", pos)) != std::string::npos) {
        ++count;
        pos += 4;
    }
    CHECK(count == 3);

    CliResult json = run_cli("gen -n 2 -t 2 --format json");
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"vertices\"") != std::string::npos);
}

TEST_CASE("cli gen capacity and usage errors") {
    CHECK(run_cli("gen -n 10 -t 9").exit_code == 2);
    CHECK(run_cli("gen -n 2").exit_code == 64);
    CHECK(run_cli("gen -n 2 -t 2 --format nope").exit_code == 64);
    CHECK(run_cli("gen -n 1 -t 2").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("gen -n 2 -t 3", "SDOM_VERTEX_CAP=4 ").exit_code == 2);
    CHECK(run_cli("gen -n 2 -t 3", "SDOM_VERTEX_CAP=8 ").exit_code == 0);
}

TEST_CASE("cli construct verify round trip") {
    const auto path = temp_file("set");
    CliResult built = run_cli("construct -n 2 -t 3 --out " + path.string());
    CHECK(built.exit_code == 0);
    CliResult verified = run_cli("verify --in " + path.string() + " --format json");
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("\"dominating\": true") != std::string::npos);

    // The set minus the all-ones word does not dominate this odd-depth graph.
    CliResult star = run_cli("construct -n 2 -t 3 --kind D_star --out " + path.string());
    CHECK(star.exit_code == 0);
    CliResult star_verified = run_cli("verify --in " + path.string() + " --format json");
    CHECK(star_verified.exit_code == 1);
    CHECK(star_verified.output.find("\"dominating\": false") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cli label verify round trip") {
    const auto path = temp_file("labeling");
    CliResult built =
        run_cli("label -n 3 -t 2 --variant double-roman --out " + path.string());
    CHECK(built.exit_code == 0);
    CliResult verified = run_cli("verify --in " + path.string() + " --format json");
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("\"valid\": true") != std::string::npos);
    CHECK(verified.output.find("\"weight\": 8") != std::string::npos);
    std::filesystem::remove(path);

    CliResult text = run_cli("label -n 2 -t 3 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("weight 6") != std::string::npos);
}

TEST_CASE("cli verify rejects malformed input") {
    const auto path = temp_file("bad");
    std::ofstream(path) << "{\"nonsense\":true}";
    CHECK(run_cli("verify --in " + path.string()).exit_code == 64);
    std::ofstream(path) << "not json at all";
    CHECK(run_cli("verify --in " + path.string()).exit_code == 64);
    std::filesystem::remove(path);
}

TEST_CASE("cli solve") {
    CliResult full = run_cli("solve -n 3 -t 2 --variant double-roman --format json");
    CHECK(full.exit_code == 0);
    CHECK(full.output.find("\"formula\": 8") != std::string::npos);
    CHECK(full.output.find("\"exact\": 8") != std::string::npos);
    CHECK(full.output.find("\"witness_weight\": 8") != std::string::npos);
    CHECK(full.output.find("\"match\": true") != std::string::npos);

    CliResult plain = run_cli("solve -n 2 -t 4 --variant plain");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("formula: 6") != std::string::npos);
    CHECK(plain.output.find("exact: 6") != std::string::npos);

    // 625 vertices exceed the default solver cap: partial report, exit 3.
    CliResult capped = run_cli("solve -n 5 -t 4 --variant plain");
    CHECK(capped.exit_code == 3);
    CHECK(capped.output.find("formula: 105") != std::string::npos);
    CHECK(capped.output.find("lower_bound: 105") != std::string::npos);
    CHECK(capped.output.find("exact: skipped") != std::string::npos);

    CliResult budget = run_cli(
        "solve -n 2 -t 5 --variant double-roman --all-values --time-budget-ms 0");
    CHECK(budget.exit_code == 3);
    CHECK(budget.output.find("status: partial") != std::string::npos);
}

TEST_CASE("cli table") {
    CliResult table = run_cli("table --n-max 4 --t-max 3");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("n,t,gamma,gamma_R,gamma_dR\n") == 0);
    CHECK(table.output.find("3,2,3,5,8\n") != std::string::npos);
    CHECK(table.output.find("2,3,3,6,9\n") != std::string::npos);
    CHECK(table.output.find("4,2,4,7,11\n") != std::string::npos);
}

TEST_CASE("cli check-lemmas") {
    CliResult report = run_cli("check-lemmas -n 3 -t 3");
    CHECK(report.exit_code == 0);
    CHECK(report.output.find("\"all_pass\": true") != std::string::npos);
    CHECK(report.output.find("\"pairwise_distance_separation\"") != std::string::npos);

    CliResult sampled = run_cli(
        "check-lemmas -n 3 -t 4 --pair-threshold 10 --sample-size 200 --seed 5 --threads 2");
    CHECK(sampled.exit_code == 0);
    CHECK(sampled.output.find("\"sampled\"") != std::string::npos);
    CHECK(sampled.output.find("\"all_ones_min_distance\": 2") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across runs") {
    const std::string args = "construct -n 3 -t 3";
    CHECK(run_cli(args).output == run_cli(args).output);
    const std::string lemmas = "check-lemmas -n 2 -t 6 --seed 9";
    CHECK(run_cli(lemmas).output == run_cli(lemmas).output);
}
