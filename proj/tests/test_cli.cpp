// End-to-end checks of the command-line surface; the binary path arrives in
// the MLQ_CLI environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MLQ_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("apply") {
    RunResult r = run_cli("apply --queue 1,4,8,9 --word 346613321");
    CHECK(r.code == 0);
    CHECK(r.out == "277344511\n");
    // Byte-identical repeat.
    CHECK(run_cli("apply --queue 1,4,8,9 --word 346613321").out == r.out);
    // An MLQ applied to 1111.
    CHECK(run_cli("apply --queues \"3;1,3,4\" --word 1111").out == "2312\n");
}

TEST_CASE("swt text and json") {
    RunResult r = run_cli("swt --word 2312");
    CHECK(r.code == 0);
    CHECK(r.out == "x1*x2*x3*x4 + x1*x3^2*x4\n");
    CHECK(run_cli("swt --word 2312 --sigma 2,1").out == r.out);
    RunResult j = run_cli("swt --word 2312 --format json");
    CHECK(j.code == 0);
    CHECK(j.out ==
          R"({"n":4,"terms":[{"c":1,"e":[1,1,1,1]},{"c":1,"e":[1,0,2,1]}]})"
          "\n");
}

TEST_CASE("swt buckets several words of one type in one pass") {
    RunResult r = run_cli("swt --word 13245 --word 14235");
    CHECK(r.code == 0);
    RunResult a = run_cli("swt --word 13245");
    RunResult b = run_cli("swt --word 14235");
    CHECK(r.out == "13245  " + a.out.substr(0, a.out.size() - 1) + "\n14235  " +
                       b.out.substr(0, b.out.size() - 1) + "\n");
    CHECK(run_cli("swt --word 13245 --word 2312").code == 1);
}

TEST_CASE("swt rejects unpacked words") {
    CHECK(run_cli("swt --word 131").code == 1);
}

TEST_CASE("dual") {
    RunResult r = run_cli("dual --q1 1,4,5,6 --q2 2,3,4,6,7,8 -n 9");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "q1' = 1,3,4,5,6,8\n"
          "q2' = 2,4,6,7\n"
          "unbalanced = 3,8\n");
    RunResult t = run_cli("dual --q1 1,2 --q2 3 -n 3 --trace");
    CHECK(t.code == 0);
    CHECK(t.out.find("(- (1 )1") != std::string::npos);
}

TEST_CASE("jt with brute-force check") {
    RunResult r = run_cli("jt --sites 1,3,4 --values 2,1,1 -n 5 --check-bruteforce");
    CHECK(r.code == 0);
    RunResult direct = run_cli("swt --word 23113");
    CHECK(r.out == direct.out);
}

TEST_CASE("psi determinant formula") {
    RunResult r = run_cli("psi --sites 1,3 --lacunar 1 -n 4 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"n\":4") != std::string::npos);
}

TEST_CASE("sst prints both routes and checks equality") {
    RunResult r = run_cli("sst --shape 2,1 --surface 2,3");
    CHECK(r.code == 0);
    CHECK(r.out.find("equal") != std::string::npos);
}

TEST_CASE("tasep stationary with comparison") {
    RunResult r = run_cli("tasep stationary --type 1,2,1 -n 4 --compare-swt");
    CHECK(r.code == 0);
    CHECK(r.out.find("2312  1/8  mlqs=2") != std::string::npos);
    CHECK(r.out.find("stationary matches MLQ counts") != std::string::npos);
}

TEST_CASE("tasep sampler is seeded and reproducible") {
    RunResult a = run_cli("tasep sample --type 1,2,1 -n 4 --steps 200 --seed 11");
    RunResult b = run_cli("tasep sample --type 1,2,1 -n 4 --steps 200 --seed 11");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("render graveyard and queue diagram") {
    RunResult g = run_cli("render --queues \"3;1,3,4\" -n 4");
    CHECK(g.code == 0);
    CHECK(g.out ==
          "[ ] [ ] (1) [ ]\n"
          "(2) [ ] (1) (2)\n");
    RunResult d = run_cli("render --queue 1,4,8,9 --word 346613321");
    CHECK(d.code == 0);
    CHECK(d.out.find("(2) [ ] [ ] (3)") != std::string::npos);
}

TEST_CASE("verify runs a single cheap suite") {
    RunResult r = run_cli("verify --suite poly.newton -n 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run_cli("dual --q1 1 --q2 2").code == 1);       // missing -n
    CHECK(run_cli("nonsense-subcommand").code != 0);
}
