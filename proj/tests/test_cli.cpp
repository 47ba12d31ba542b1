// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        "\"" + std::string(VIRTLENS_CLI_PATH) + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.output.append(buf, n);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        r.exit_code = WEXITSTATUS(status);
    }
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    return lines;
}

const std::string kTable1 = std::string(VIRTLENS_DATA_DIR) + "/table1.session";
const std::string kTable2 = std::string(VIRTLENS_DATA_DIR) + "/table2.session";

}  // namespace

TEST_CASE("reproduce checks every displayed cell of both reference sets") {
    const RunResult r1 = run_cli("reproduce --table 1");
    CHECK(r1.exit_code == 0);
    CHECK(contains(r1.output, "all 42 reference cells match"));
    CHECK(contains(r1.output, "mean f = -26.9 ± 0.06 cm"));
    CHECK(!contains(r1.output, "note:"));

    const RunResult r2 = run_cli("reproduce --table 2");
    CHECK(r2.exit_code == 0);
    CHECK(contains(r2.output, "all 42 reference cells match"));
    CHECK(contains(r2.output, "mean f = 17.2 ± 0.04 cm"));
    CHECK(contains(r2.output,
                   "note: mean and SEM are computed over the rounded "
                   "per-observation focal lengths shown above"));
}

TEST_CASE("reproduce rejects unknown sets and a missing --table") {
    CHECK(run_cli("reproduce --table 3").exit_code == 1);
    CHECK(run_cli("reproduce").exit_code == 1);
}

TEST_CASE("estimate defaults to the full-precision text report") {
    const RunResult r = run_cli("estimate " + kTable1);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "mean f = -26.9 ± 0.04 cm"));

    const RunResult table = run_cli("estimate " + kTable1 + " --mode table");
    CHECK(table.exit_code == 0);
    CHECK(contains(table.output, "mean f = -26.9 ± 0.06 cm"));
}

TEST_CASE("estimate emits csv and plotdata") {
    const RunResult csv =
        run_cli("estimate " + kTable1 + " --mode table --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output,
                   "obs_no,D1_cm,pixel1,I1_cm,D_cm,pixel2,I2_cm,I_cm,m,f_cm"));
    CHECK(contains(csv.output,
                   "1,3.6,1211,0.2059,21.6,376,0.0639,3.76,0.752,-26.7"));
    CHECK(contains(csv.output, "# n = 10"));

    const RunResult plot = run_cli("estimate " + kTable1 + " --format plotdata");
    CHECK(plot.exit_code == 0);
    CHECK(contains(plot.output, "# D_cm f_cm"));
    CHECK(contains(plot.output, "# D1_cm I_cm"));

    CHECK(run_cli("estimate " + kTable1 + " --format yaml").exit_code == 1);
    CHECK(run_cli("estimate " + kTable1 + " --mode fast").exit_code == 1);
}

TEST_CASE("estimate reports unreadable and malformed files on exit code 2") {
    const RunResult missing = run_cli("estimate /nonexistent/file.session");
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "cannot open file"));

    const std::string path = "malformed_test.session";
    {
        std::ofstream out(path);
        out << "camera_model = cam\n"
            << "camera_fc_cm = 0.5\n"
            << "zzz = 1\n";
    }
    const RunResult bad = run_cli("estimate " + path);
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.output, "line 3"));
    CHECK(contains(bad.output, "unknown key 'zzz'"));
    std::remove(path.c_str());
}

TEST_CASE("simulate synthesizes the reference geometry exactly") {
    const RunResult r = run_cli(
        "simulate --f -26.9 --u -8.8 --O 5 --fc 0.532 --pitch 1.7 "
        "--positions 3.6:21.6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "camera_model = synthetic"));
    CHECK(contains(r.output, "lens_kind = concave"));
    CHECK(contains(r.output, "1,3.6,1216,21.6,377"));
}

TEST_CASE("simulate with noise is deterministic in the seed") {
    const std::string args =
        "simulate --f -26.9 --u -8.8 --O 5 --fc 0.532 --pitch 1.7 "
        "--positions 3.6:21.6,4.5:22.4 --noise 0.5,0.05,0.05 --seed 9";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const RunResult c = run_cli(
        "simulate --f -26.9 --u -8.8 --O 5 --fc 0.532 --pitch 1.7 "
        "--positions 3.6:21.6,4.5:22.4 --noise 0.5,0.05,0.05 --seed 10");
    CHECK(c.exit_code == 0);
    CHECK(a.output != c.output);
}

TEST_CASE("simulate rejects bad positions and degenerate scenes") {
    const RunResult bad = run_cli(
        "simulate --f -26.9 --u -8.8 --O 5 --fc 0.532 --pitch 1.7 "
        "--positions garbage");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "invalid --positions"));

    // object outside a convex focal length forms a real image
    const RunResult real_image = run_cli(
        "simulate --f 10 --u -15 --O 5 --fc 0.532 --pitch 1.7 "
        "--positions 3.6:21.6");
    CHECK(real_image.exit_code == 3);
}

TEST_CASE("uncertainty prints one row per observation plus a pooled row") {
    const std::string args =
        "uncertainty " + kTable1 + " --trials 200 --seed 5";
    const RunResult a = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(count_lines(a.output) == 12);
    CHECK(a.output.rfind("   obs", 0) == 0);
    CHECK(contains(a.output, "pooled"));

    const RunResult b = run_cli(args);
    CHECK(a.output == b.output);

    const RunResult other = run_cli(
        "uncertainty " + kTable1 + " --trials 200 --seed 6");
    CHECK(other.exit_code == 0);
    CHECK(a.output != other.output);
}

TEST_CASE("uncertainty accepts a custom noise triple") {
    const RunResult r = run_cli("uncertainty " + kTable2 +
                                " --trials 150 --seed 1 --noise 1.0,0.1,0.1");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 12);
}

TEST_CASE("uncertainty enforces the minimum trial count at parse time") {
    CHECK(run_cli("uncertainty " + kTable1 + " --trials 50").exit_code == 1);
}

TEST_CASE("top-level usage errors exit 1 and help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
}
