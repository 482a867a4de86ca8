#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

// End-to-end checks of the installed CLI binary: exit codes, JSON output,
// determinism, environment overrides, and the shared cache file.

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string command = std::string(LCTF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

json strip_timestamp(const std::string& text) {
    json j = json::parse(text);
    j.erase("timestamp");
    return j;
}

} // namespace

TEST_CASE("count subcommand produces the documented JSON") {
    const RunResult r = run("count --q 2 --M 3 -n 2 -f \"x1*x2\" --k 2");
    CHECK(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("counts") == json::array({json::array({2, 8})}));
    CHECK(report.at("strategy") == "pruned");
}

TEST_CASE("example-curve reproduces the optimal bound") {
    const RunResult r = run("example-curve --q 2 --d 1 --D 2 --m 1 --kmax 10");
    CHECK(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("match") == true);
    CHECK(report.at("estimate").at("exact") == json::array({1, 2}));
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run("count --q 2 --M 3").exit_code == 2);           // missing -f and depth
    CHECK(run("unknown-subcommand").exit_code == 2);
    CHECK(run("count --q 6 --M 3 -n 1 -f x1 --k 1").exit_code == 2); // not a prime power
}

TEST_CASE("exit code 1 with a machine-readable error object") {
    const RunResult r = run("count --q 2 --M 3 -n 2 -f \"x1^2 + + x2\" --k 2");
    CHECK(r.exit_code == 1);
    const json err = json::parse(r.stdout_text);
    CHECK(err.at("error").at("name") == "syntax");
    CHECK(err.at("error").at("position") == 7);
}

TEST_CASE("identical invocations are byte-identical modulo the timestamp") {
    const std::string args =
        "lct-estimate --q 2 --M 8 -n 2 -f \"x1*x2\" --kmax 6 --window 2 6 --seed 11";
    const RunResult a = run(args);
    const RunResult b = run(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_timestamp(a.stdout_text).dump() == strip_timestamp(b.stdout_text).dump());
}

TEST_CASE("environment variables override flags") {
    const std::string cmd = std::string("LCTF_STRATEGY=flat ") + LCTF_CLI_PATH +
                            " count --q 2 --M 3 -n 1 -f x1 --k 2 2>/dev/null";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    pclose(pipe);
    CHECK(json::parse(output).at("strategy") == "flat");
}

TEST_CASE("two processes share one cache file") {
    const std::string cache = "cli_cache_test.jsonl";
    std::remove(cache.c_str());
    const std::string args =
        "count --q 2 --M 4 -n 2 -f \"x1*x2 + t*x1\" --kmax 4 --cache " + cache;
    const RunResult cold = run(args);
    REQUIRE(cold.exit_code == 0);
    std::ifstream in(cache);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 4);

    const RunResult warm = run(args);
    REQUIRE(warm.exit_code == 0);
    CHECK(json::parse(cold.stdout_text).at("counts") == json::parse(warm.stdout_text).at("counts"));

    // a conflicting record turns into an integrity failure
    std::ofstream out(cache, std::ios::app);
    const json fingerprint_row = json::parse(cold.stdout_text);
    out << json{{"fingerprint", fingerprint_row.at("fingerprint")},
                {"q", 2},  {"e", 1}, {"n", 2}, {"k", 2},
                {"N_k", "999"}, {"strategy", "pruned"}, {"tool_version", "x"}}
               .dump()
        << "\n";
    out.close();
    const RunResult conflicted = run(args);
    CHECK(conflicted.exit_code == 1);
    CHECK(json::parse(conflicted.stdout_text).at("error").at("name") == "integrity");
    std::remove(cache.c_str());
}

TEST_CASE("extension fields flow through the modulus flag") {
    const RunResult r = run("count --p 2 --e 2 --modulus 1,1,1 --M 3 -n 1 -f \"g*x1 + t\" --k 2");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.stdout_text);
    CHECK(report.at("q") == 4);
    CHECK(report.at("e") == 2);
    // g x1 + t = 0 mod t^2 forces x1 = g^{-1} t mod t^2: one residue
    CHECK(report.at("counts") == json::array({json::array({2, 1})}));

    // a reducible modulus is a usage error
    CHECK(run("count --p 2 --e 2 --modulus 1,0,1 --M 3 -n 1 -f x1 --k 1").exit_code == 2);
}

TEST_CASE("base point and radius flags") {
    const RunResult r = run(
        "count --q 2 --M 6 -n 1 --x0 t --radius-j 1 -f \"x1^2 + t^2\" --kmax 4");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.stdout_text).at("counts") ==
          json::array({json::array({1, 2}), json::array({2, 4}), json::array({3, 4}),
                       json::array({4, 8})}));
}

TEST_CASE("remaining subcommands run end to end") {
    const RunResult prep = run("prepare --q 2 --M 4 -n 2 -f \"x1*x2\" --seed 3");
    REQUIRE(prep.exit_code == 0);
    const json prep_report = json::parse(prep.stdout_text);
    CHECK(prep_report.at("outcome") == "prepared");
    CHECK(prep_report.at("s0") == 2);
    CHECK(prep_report.at("transforms").size() == 1);

    const RunResult remez = run("verify-remez --q 2 --M 5 -n 1 -f \"x1^2 + t\" --kmax 4");
    REQUIRE(remez.exit_code == 0);
    CHECK(json::parse(remez.stdout_text).at("all_pass") == true);

    const RunResult ball =
        run("verify-smallball --q 2 --M 4 -n 2 -f \"x2^2 + t*x1*x2 + t\" --kmax 3");
    REQUIRE(ball.exit_code == 0);
    CHECK(json::parse(ball.stdout_text).at("all_pass") == true);

    const RunResult zeta = run("zeta --q 2 --M 14 -n 1 -f \"x1^2\" --s 1 4 --kmax 12 --d 2");
    REQUIRE(zeta.exit_code == 0);
    CHECK(json::parse(zeta.stdout_text).at("bound").at("within_bound") == true);
}

TEST_CASE("report can be redirected to a file") {
    const std::string path = "cli_out_test.json";
    std::remove(path.c_str());
    const RunResult r = run("count --q 2 --M 3 -n 1 -f x1 --k 1 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.empty());
    std::ifstream in(path);
    REQUIRE(in.is_open());
    json report;
    in >> report;
    CHECK(report.at("counts") == json::array({json::array({1, 1})}));
    std::remove(path.c_str());
}
