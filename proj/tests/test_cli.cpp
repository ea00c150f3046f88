// End-to-end checks of the command-line tool: exit codes and output shape.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef BESSELINT_CLI_PATH
#error "BESSELINT_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BESSELINT_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe))
        r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("eval prints value and convergence metadata") {
    RunResult r = run_cli("eval --fn wright --params alpha=0,beta=1,x=1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value = 2.7182818284590") != std::string::npos);
    CHECK(r.output.find("terms_used") != std::string::npos);
    CHECK(r.output.find("truncation_flag = false") != std::string::npos);

    r = run_cli("eval --fn hermite2 --params n=2,x=3,y=1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value = 11") != std::string::npos);

    r = run_cli("eval --fn bessel_j --params nu=1,x=0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value = 0") != std::string::npos);
}

TEST_CASE("eval rejects unknown functions and bad arguments with exit 2") {
    CHECK(run_cli("eval --fn nosuch --params x=1").exit_code == 2);
    CHECK(run_cli("eval --fn bessel_j --params nu=1").exit_code == 2);
    CHECK(run_cli("eval --fn bessel_j --params nu=-2,x=1").exit_code == 2);
    CHECK(run_cli("eval --fn bessel_j --params nu=zero,x=1").exit_code == 2);
    CHECK(run_cli("eval").exit_code == 2);
}

TEST_CASE("verify passes reference identities") {
    RunResult r = run_cli("verify --identity sph-bessel-integral --params n=0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("status = pass") != std::string::npos);
    CHECK(r.output.find("closed_value = 3.141592653589793") != std::string::npos);

    r = run_cli("verify --identity struve-mellin --params mu=-1,nu=0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1.57079632679489") != std::string::npos);
}

TEST_CASE("verify reports constraint violations with exit 2") {
    RunResult r = run_cli("verify --identity struve-mellin --params mu=1,nu=1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("even integer") != std::string::npos);
    CHECK(run_cli("verify --identity no-such-id --params x=1").exit_code == 2);
}

TEST_CASE("verify fails numerically with exit 1 under an impossible tolerance") {
    RunResult r = run_cli(
        "verify --identity bessel-j0-integral --params alpha=1 --tol-abs 1e-18 --tol-rel 0");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("status = fail") != std::string::npos);
}

TEST_CASE("table sweeps a range and keeps rows in input order") {
    RunResult r = run_cli("table --identity sph-bessel-integral --range n=0..6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n,closed_value,oracle_value,abs_err,rel_err,status,evaluations") !=
          std::string::npos);
    // 7 data rows, odd orders have closed_value 0
    int rows = 0;
    for (std::size_t pos = r.output.find('\n'); pos != std::string::npos;
         pos = r.output.find('\n', pos + 1))
        ++rows;
    CHECK(rows >= 7);
    CHECK(r.output.find("1,0,") != std::string::npos); // n=1 row, closed 0
}

TEST_CASE("table supports lists, fixed parameters, and skipped rows") {
    RunResult r = run_cli("table --identity bessel-j0-integral --list alpha=0.5,1,2,4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("2.8284271247461") != std::string::npos); // 2*sqrt(2)
    CHECK(r.output.find("1.4142135623730") != std::string::npos); // sqrt(2)

    r = run_cli("table --identity gaussian-moment --range n=0..4 --fixed a=1,b=1,alpha=2 "
                "--tol-abs 1e-8 --tol-rel 1e-8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fail") == std::string::npos);

    // mu+nu sweeps across an even integer: those rows are skipped, not dropped
    r = run_cli("table --identity struve-mellin --range mu=-1.0..0.0:0.5 --fixed nu=1.0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("skipped") != std::string::npos);
}

TEST_CASE("table emits machine-parsable json") {
    RunResult r = run_cli(
        "table --identity sph-bessel-integral --range n=0..2 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"closed_value\"") != std::string::npos);
    CHECK(r.output.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("table usage errors exit 2") {
    CHECK(run_cli("table --identity sph-bessel-integral").exit_code == 2);
    CHECK(run_cli("table --identity sph-bessel-integral --range n=0..6:0").exit_code == 2);
    CHECK(run_cli("table --identity sph-bessel-integral --range n=0..2 --format xml")
              .exit_code == 2);
}
