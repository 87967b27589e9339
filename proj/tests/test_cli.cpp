#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(APOLAR_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hf prints the hilbert function") {
    RunResult r = run_cli("hf --r 2 \"X^4\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "1 1 1 1 1"));

    r = run_cli("hf --r 2 \"X*Y^3\" --json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "[1,2,2,2,1]"));
}

TEST_CASE("pencil runs end to end") {
    RunResult r = run_cli("pencil --r 2 \"X^4\" \"X*Y^3\" --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "H_gen   1 2 3 2 1"));
    CHECK(contains(r.output, "theorem1=pass"));
}

TEST_CASE("osequence verdicts") {
    RunResult r = run_cli("osequence 1,3,6,10");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "true"));

    // 4 in degree 2 caps the next entry at C(4,3)+C(2,2) = 5 < 6
    r = run_cli("osequence 1,3,4,6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "false at index 3"));
}

TEST_CASE("exit codes map failure classes") {
    // malformed form
    CHECK(run_cli("hf --r 2 \"X^2 + Y\"").exit_code == 2);
    // differentiation impossible over GF(2) in degree 4
    CHECK(run_cli("hf --r 2 \"X^4\" --field gf:2").exit_code == 3);
    // unknown field spelling
    CHECK(run_cli("hf --r 2 \"X^4\" --field f7").exit_code == 3);
    // proportional generators
    CHECK(run_cli("pencil --r 2 \"X^4\" \"2*X^4\"").exit_code == 4);
    // field too small for the sample budget
    CHECK(run_cli("pencil --r 2 \"X^4\" \"X*Y^3\" --field gf:5 --samples 8").exit_code == 3);
}

TEST_CASE("level subcommand") {
    RunResult r = run_cli("level --r 2 \"X^4\" \"X*Y^3\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "1 2 3 3 2"));
    CHECK(contains(r.output, "level  yes"));
}
