#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "agpolar/kernel.hpp"
#include "agpolar/metrics.hpp"

using namespace agpolar;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(AGPOLAR_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string temp_path(const std::string& name) {
    return std::string("agpolar_cli_test_") + name;
}

} // namespace

TEST_CASE("kernel file written by the CLI matches the in-process builder") {
    const std::string path = temp_path("hermitian.txt");
    const RunResult r = run_cli("kernel --family hermitian --q0 2 --out " + path);
    REQUIRE(r.exit_code == 0);

    const KernelMatrix K = build_kernel(curve_spec(CurveFamily::hermitian, 2), Field(2));
    std::ifstream f(path, std::ios::binary);
    std::stringstream body;
    body << f.rdbuf();
    CHECK(body.str() == format_kernel(K));
    std::remove(path.c_str());
}

TEST_CASE("profile round trip equals the in-process pipeline") {
    const std::string path = temp_path("rs4.txt");
    REQUIRE(run_cli("kernel --family rs --m 2 --out " + path).exit_code == 0);

    const RunResult r = run_cli("profile --kernel " + path + " --method exact");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "index,D,kind\n1,1,exact\n2,2,exact\n3,3,exact\n4,4,exact\n");

    const RunResult g = run_cli("profile --kernel " + path + " --method goppa");
    CHECK(g.output == "index,D,kind\n1,1,lower_bound\n2,2,lower_bound\n3,3,lower_bound\n"
                      "4,4,lower_bound\n");

    const RunResult p = run_cli("profile --kernel " + path + " --method paper --g 1");
    CHECK(p.output == "index,D,kind\n1,3,lower_bound\n2,2,lower_bound\n3,1,lower_bound\n"
                      "4,1,lower_bound\n");
    std::remove(path.c_str());
}

TEST_CASE("oesterle subcommand") {
    const RunResult r = run_cli("oesterle --q 4096 --L 262144");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "ell,u,theta,genus\n2,0,1.047197551,2016\n");
}

TEST_CASE("closed-form exponent") {
    const RunResult r = run_cli("exponent --L 8 --g 1 --q 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "E,base,source\n0.5124670008,8,closed_form\n");

    const RunResult b = run_cli("exponent --L 262144 --g 2016 --q 4096 --binary --m 12");
    REQUIRE(b.exit_code == 0);
    CHECK(b.output.find("0.76066") != std::string::npos);
}

TEST_CASE("polarize summarizes the tree") {
    const std::string path = temp_path("arikan.txt");
    {
        std::ofstream f(path, std::ios::binary);
        f << "m=1 L=2 poly=3\n1 0\n1 1\n";
    }
    const RunResult r = run_cli("polarize --kernel " + path + " --eps 0.5 --levels 2 --beta 0,0.5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("leaves,4") != std::string::npos);
    CHECK(r.output.find("mean,0.5\n") != std::string::npos);
    CHECK(r.output.find("beta,fraction") != std::string::npos);

    const RunResult j = run_cli("--json polarize --kernel " + path + " --eps 0.5 --levels 2");
    REQUIRE(j.exit_code == 0);
    const json doc = json::parse(j.output);
    CHECK(doc["leaves"] == 4);
    CHECK(doc["mean"].get<double>() == doctest::Approx(0.5));
    std::remove(path.c_str());
}

TEST_CASE("study table1 flags the argmax row") {
    const RunResult r = run_cli("--json study table1 --n 3145728");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    bool saw_argmax_12 = false;
    for (const auto& row : doc["rows"]) {
        if (row["argmax"].get<bool>()) {
            saw_argmax_12 = row["m"].get<double>() == 12.0;
            CHECK(row["E2"].get<double>() == doctest::Approx(0.760667).epsilon(1e-3));
        }
    }
    CHECK(saw_argmax_12);
}

TEST_CASE("study crossover and ecc emit single-table CSV") {
    const RunResult c = run_cli("study crossover --a rs --b hermitian --nlo 100 --nhi 10000");
    REQUIRE(c.exit_code == 0);
    CHECK(c.output.rfind("a,b,n_star,n_lo,n_hi\nrs,hermitian,", 0) == 0);

    const RunResult e = run_cli("study ecc --family hermitian --rate 0.5 --nlo 16 --nhi 1600 --samples 3");
    REQUIRE(e.exit_code == 0);
    CHECK(e.output.rfind("n,bound\n16,0.75\n", 0) == 0);
}

TEST_CASE("outputs are byte-identical across runs") {
    const std::string cmd = "study sweep --fix m --value 8 --grid 1024,4096,393216";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.rfind("m,q,L,g,n,E2\n", 0) == 0);
}

TEST_CASE("exit codes distinguish usage and computation errors") {
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("oesterle --q 4096").exit_code == 2);            // missing required flag
    CHECK(run_cli("profile --kernel no_such_file.txt").exit_code == 1);
    CHECK(run_cli("oesterle --q 0.5 --L 64").exit_code == 1);      // domain error
    const std::string path = temp_path("arikan2.txt");
    {
        std::ofstream f(path, std::ios::binary);
        f << "m=1 L=2 poly=3\n1 0\n1 1\n";
    }
    // full tree of 2^40 leaves trips the resource guard
    CHECK(run_cli("polarize --kernel " + path + " --eps 0.5 --levels 40").exit_code == 1);
    std::remove(path.c_str());
}
