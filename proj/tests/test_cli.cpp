#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

// End-to-end checks of the verification CLI: exit-code contract and byte
// reproducibility. The binary path comes from the build system.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string scratch_path() {
    static int counter = 0;
    return "/tmp/siegel_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".out";
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string out_path = scratch_path();
    std::string cmd =
        env_prefix + " " + std::string(SIEGEL_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(rc);
    std::ifstream is(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    res.output = ss.str();
    std::remove(out_path.c_str());
    return res;
}

} // namespace

TEST_CASE("wallach: default grid passes, malformed grid is a config error") {
    auto ok = run_cli("wallach --n 0 --seed 42 --trials 20 --cloud-size 8");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"pass\": true") != std::string::npos);

    auto single = run_cli("wallach --n 0 --s-grid 0 --trials 1 --format csv");
    CHECK(single.exit_code == 0);
    CHECK(single.output.rfind("s,min_eig,psd,witness_id", 0) == 0);

    auto bad = run_cli("wallach --n 0 --s-grid nonsense");
    CHECK(bad.exit_code == 2);

    auto bad_cloud = run_cli("wallach --n 0 --cloud-size 40");
    CHECK(bad_cloud.exit_code == 2);
}

TEST_CASE("wallach: byte reproducibility for fixed config and seed") {
    std::string args = "wallach --n 1 --seed 777 --trials 12 --cloud-size 6 --format json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    // identical bytes regardless of the thread cap
    auto c = run_cli(args, "SIEGEL_RKHS_THREADS=1");
    auto d = run_cli(args, "SIEGEL_RKHS_THREADS=4");
    CHECK(a.output == c.output);
    CHECK(a.output == d.output);
}

TEST_CASE("invariance: identity-ish run passes, perturbed phase fails") {
    auto ok = run_cli("invariance --n 0 --s 1 --words 40 --seed 9 --tol 1e-9");
    CHECK(ok.exit_code == 0);

    auto bad = run_cli("invariance --n 0 --s 0.3 --words 40 --seed 9 --tol 1e-9 "
                       "--perturb-iota-phase 0.1");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("subspaces: classification at n = 0 and n = 1; budget is exit 2") {
    auto n0 = run_cli("subspaces --n 0 --degree-bound 4");
    CHECK(n0.exit_code == 0);

    auto n1 = run_cli("subspaces --n 1 --degree-bound 3 --format csv");
    CHECK(n1.exit_code == 0);

    auto budget = run_cli("subspaces --n 1 --degree-bound 20");
    CHECK(budget.exit_code == 2);
}

TEST_CASE("norms: default suite passes and reports the s = 0 branch") {
    auto n0 = run_cli("norms --n 0 --s 2 --s 3 --max-degree 6");
    CHECK(n0.exit_code == 0);
    CHECK(n0.output.find("\"s0_nonconstant_infinite\": true") != std::string::npos);
}
