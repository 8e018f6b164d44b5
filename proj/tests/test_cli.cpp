#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const char* cli = std::getenv("NAR_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string config_dir() {
    const char* dir = std::getenv("NAR_CONFIG_DIR");
    REQUIRE(dir != nullptr);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::path("cli_scratch") / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

// small, fast ensemble on top of the stock configuration
const std::string kSmall = " --set N=500 --set T=50 --set r=2";

}  // namespace

TEST_CASE("simulate is deterministic and reproducible byte for byte") {
    const auto a = fresh_dir("sim_a");
    const auto b = fresh_dir("sim_b");
    const std::string base =
        "simulate --config " + config_dir() + "/case1.cfg" + kSmall + " --out ";
    const RunResult ra = run(base + a.string());
    REQUIRE(ra.exit_code == 0);
    const RunResult rb = run(base + b.string());
    REQUIRE(rb.exit_code == 0);

    for (const char* f : {"realisation_000.csv", "realisation_001.csv"}) {
        REQUIRE(fs::exists(a / f));
        CHECK(slurp(a / f) == slurp(b / f));
    }
    CHECK_FALSE(fs::exists(a / "realisation_002.csv"));
    CHECK(fs::exists(a / "manifest.txt"));

    // a different seed changes the data
    const auto c = fresh_dir("sim_c");
    const RunResult rc = run(base + c.string() + " --seed 99");
    REQUIRE(rc.exit_code == 0);
    CHECK(slurp(a / "realisation_000.csv") != slurp(c / "realisation_000.csv"));
}

TEST_CASE("simulate with r=0 writes only the manifest") {
    const auto d = fresh_dir("sim_empty");
    const RunResult r = run("simulate --config " + config_dir() + "/case1.cfg" + kSmall +
                            " --set r=0 --out " + d.string());
    REQUIRE(r.exit_code == 0);
    CHECK(fs::exists(d / "manifest.txt"));
    CHECK_FALSE(fs::exists(d / "realisation_000.csv"));
    // the manifest records the resolved configuration
    const std::string manifest = slurp(d / "manifest.txt");
    CHECK(manifest.find("command = simulate") != std::string::npos);
    CHECK(manifest.find("r = 0") != std::string::npos);
}

TEST_CASE("errors are single-line, machine-parsable, nonzero") {
    SUBCASE("missing config file") {
        const RunResult r = run("simulate --config /nonexistent/nope.cfg");
        CHECK(r.exit_code != 0);
        CHECK(r.output.rfind("error: ", 0) == 0);
        CHECK(count_lines(r.output) == 1);
    }
    SUBCASE("unknown subcommand") {
        const RunResult r = run("frobnicate");
        CHECK(r.exit_code != 0);
        CHECK(r.output.rfind("error: ", 0) == 0);
        CHECK(count_lines(r.output) == 1);
    }
    SUBCASE("predict on a missing model") {
        const RunResult r = run("predict nope_model.txt nope_traj.csv");
        CHECK(r.exit_code != 0);
        CHECK(r.output.rfind("error: ", 0) == 0);
        CHECK(count_lines(r.output) == 1);
    }
    SUBCASE("no subcommand at all") {
        const RunResult r = run("");
        CHECK(r.exit_code != 0);
        CHECK(count_lines(r.output) == 1);
    }
}

TEST_CASE("fit, predict and sweep round-trip on a simulated dataset") {
    const auto data = fresh_dir("pipeline_data");
    REQUIRE(run("simulate --config " + config_dir() + "/case1.cfg" + kSmall + " --out " +
                data.string())
                .exit_code == 0);

    const auto fitdir = fresh_dir("pipeline_fit");
    const RunResult rf = run("fit --set data_dir=" + data.string() +
                             " --set p=1 --set lambda=0.05 --out " + fitdir.string());
    REQUIRE(rf.exit_code == 0);
    CHECK(rf.output.find("x1(t+1) =") != std::string::npos);
    CHECK(rf.output.find("x2(t+1) =") != std::string::npos);
    const fs::path model = fitdir / "model_lambda0.05.txt";
    REQUIRE(fs::exists(model));

    const auto preddir = fresh_dir("pipeline_pred");
    const RunResult rp = run("predict " + model.string() + " " + data.string() +
                             "/realisation_000.csv --set steps=5 --out " + preddir.string());
    REQUIRE(rp.exit_code == 0);
    CHECK(rp.output.find("one_step_error = ") != std::string::npos);
    REQUIRE(fs::exists(preddir / "prediction.csv"));
    CHECK(count_lines(slurp(preddir / "prediction.csv")) == 6);  // header + 5 states

    const auto sweepdir = fresh_dir("pipeline_sweep");
    const RunResult rs = run("sweep --set data_dir=" + data.string() +
                             " --set train=1 --set l=10 --set p=1,2 --set lambda=0 --out " +
                             sweepdir.string());
    REQUIRE(rs.exit_code == 0);
    const std::string csv = slurp(sweepdir / "sweep.csv");
    CHECK(csv.rfind("p,lambda,mean_block_error,mean_one_step_error,n_blocks,n_diverged\n", 0) ==
          0);
    CHECK(count_lines(csv) == 3);  // header + one row per (p, lambda)
}

TEST_CASE("hausdorff subcommand computes the distance between two clouds") {
    const auto d = fresh_dir("haus");
    {
        std::ofstream a(d / "a.csv");
        a << "x,y\n0,0\n1,0\n";
        std::ofstream b(d / "b.csv");
        b << "x,y\n0,0\n1,0\n5,0\n";
    }
    const RunResult r =
        run("hausdorff " + (d / "a.csv").string() + " " + (d / "b.csv").string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("hausdorff = 4") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    const RunResult r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("simulate") != std::string::npos);
    CHECK(r.output.find("hausdorff") != std::string::npos);
}
