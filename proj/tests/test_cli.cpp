// Drives the installed CLI binary end to end through popen. The binary path
// comes from the build system via UMEMURA_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UMEMURA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe))
        result.output.append(buf, got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

}  // namespace

TEST_CASE("sigma command prints the canonical document") {
    const RunResult r = run_cli("sigma --n 2 --r sym");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "{\"vars\":[\"r\",\"t\"],\"terms\":[{\"c\":\"1/8\",\"e\":[0,1]},"
          "{\"c\":\"-1/1\",\"e\":[1,0]},{\"c\":\"3/4\",\"e\":[0,0]}]}\n");
}

TEST_CASE("latex format") {
    const RunResult r = run_cli("sigma --n 2 --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "\\frac{1}{8}t - r + \\frac{3}{4}\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("sigma --n notanumber").exit_code == 2);
    CHECK(run_cli("sigma").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("pv sampling CSV rows match the exact values") {
    const RunResult r = run_cli("pv --n 1 --r 0 --t 2 --t 4 --t 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pv_residual_zero\":true") != std::string::npos);
    CHECK(r.output.find("2,-3,1,-3\n") != std::string::npos);
    CHECK(r.output.find("4,-2,1,-2\n") != std::string::npos);
    CHECK(r.output.find("0,,,pole\n") != std::string::npos);
}

TEST_CASE("eval command") {
    const RunResult r = run_cli("eval --n 3 --r 0 --t 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "31/4\n");
    const RunResult y = run_cli("eval --n 1 --r 0 --t 2 --what y");
    CHECK(y.exit_code == 0);
    CHECK(y.output == "-3\n");
}

TEST_CASE("series command reports the identity") {
    const RunResult r = run_cli("series --N 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"riccati_identity_holds\":true") != std::string::npos);
}

TEST_CASE("verify subcommand produces deterministic artifacts") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "umemura_cli_verify";
    std::filesystem::remove_all(dir);
    const std::string args = "verify --suite frobenius --out " + dir.string();
    const RunResult first = run_cli(args);
    CHECK(first.exit_code == 0);
    const std::string report1 = slurp(dir / "verify_report.json");
    CHECK(report1.find("PASS") != std::string::npos);
    const RunResult second = run_cli(args);
    CHECK(second.exit_code == 0);
    CHECK(slurp(dir / "verify_report.json") == report1);  // byte-identical
    CHECK(!slurp(dir / "verify_report.csv").empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache persistence through UMEMURA_CACHE") {
    const std::filesystem::path cache =
        std::filesystem::temp_directory_path() / "umemura_cli_cache.json";
    std::filesystem::remove(cache);
    ::setenv("UMEMURA_CACHE", cache.c_str(), 1);
    const RunResult first = run_cli("sigma --n 3 --r sym");
    CHECK(first.exit_code == 0);
    REQUIRE(std::filesystem::exists(cache));
    const std::string stored = slurp(cache);
    CHECK(stored.find("\"version\": 1") != std::string::npos);
    // second run loads and extends; sigma_3 must be byte-identical
    const RunResult second = run_cli("sigma --n 4 --r sym");
    CHECK(second.exit_code == 0);
    const std::string extended = slurp(cache);
    CHECK(extended.find("\"version\": 1") != std::string::npos);
    CHECK(extended.size() > stored.size());
    // a run under a different r-mode must not clobber the stored cache
    const RunResult other_r = run_cli("sigma --n 2 --r 1/3");
    CHECK(other_r.exit_code == 0);
    CHECK(slurp(cache) == extended);
    ::unsetenv("UMEMURA_CACHE");
    std::filesystem::remove(cache);
}
