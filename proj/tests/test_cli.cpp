#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(WCOUNT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("rho subcommand emits a CSV row") {
    auto r = run_cli("rho 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,rho\n3,2\n");
}

TEST_CASE("sum methods agree and are deterministic") {
    auto h = run_cli("sum 10 --method hyperbola");
    CHECK(h.exit_code == 0);
    CHECK(h.output == "x,count\n10,8\n");
    auto b = run_cli("sum 10 --method brute");
    CHECK(b.output == h.output);
    CHECK(run_cli("sum 12345 --method brute").output ==
          run_cli("sum 12345 --method hyperbola").output);
    // byte-identical across runs
    CHECK(run_cli("residuals --grid 100:10000:5").output ==
          run_cli("residuals --grid 100:10000:5").output);
}

TEST_CASE("identity check passes under the default tolerance") {
    auto r = run_cli("identity");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("lhs,rhs,abs_diff") == 0);
}

TEST_CASE("json format mirrors the CSV rows") {
    auto r = run_cli("--format json rho 3");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["n"] == 3);
    CHECK(parsed[0]["rho"] == 2);
}

TEST_CASE("rep-count lists coefficients with exact big integers") {
    auto r = run_cli("rep-count 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,r\n0,1\n1,1\n2,1\n3,3\n");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("rho").exit_code == 2);
    CHECK(run_cli("sum 10 --method bogus").exit_code == 2);
}

TEST_CASE("computation errors exit with code 1") {
    CHECK(run_cli("count-form 3:5:0,1,1,0 10").exit_code == 1);
    CHECK(run_cli("wzeta 0.8 --cutoff 100").exit_code == 1);
}

TEST_CASE("wzeta emits both evaluators") {
    auto r = run_cli("wzeta 2 --cutoff 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("direct,") != std::string::npos);
    CHECK(r.output.find("by-dimension,") != std::string::npos);
}

TEST_CASE("grid files drive the residuals sweep") {
    std::string path = "/tmp/wcount_grid_test.txt";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("10\n100\n1000\n", f);
    fclose(f);
    auto r = run_cli("residuals --grid-file " + path);
    CHECK(r.exit_code == 0);
    // header plus three rows
    int lines = 0;
    for (char c : r.output) lines += c == '\n';
    CHECK(lines == 4);
    std::remove(path.c_str());
}
