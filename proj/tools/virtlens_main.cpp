// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
//
// virtlens: two-position focal-length estimation from photographs of
// virtual images.
//
// Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input
// (and reference-cell mismatches), 3 degenerate data or computation.
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "virtlens/dataset_io.hpp"
#include "virtlens/estimation.hpp"
#include "virtlens/rng.hpp"
#include "virtlens/rounding.hpp"
#include "virtlens/simulation.hpp"

namespace {

using virtlens::format_fixed;

bool parse_double_token(std::string_view s, double& out) {
    if (s.empty()) {
        return false;
    }
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(s.data(), last, out);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

bool parse_positions(const std::string& text,
                     std::vector<virtlens::sim::CameraPosition>& out) {
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view tok =
            std::string_view(text).substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start);
        const std::size_t colon = tok.find(':');
        if (colon == std::string_view::npos) {
            return false;
        }
        virtlens::sim::CameraPosition pos;
        if (!parse_double_token(tok.substr(0, colon), pos.d1_cm) ||
            !parse_double_token(tok.substr(colon + 1), pos.d_cm)) {
            return false;
        }
        out.push_back(pos);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return !out.empty();
}

virtlens::estimation::Session load_session(const std::string& path) {
    try {
        return virtlens::io::load_session_file(path);
    } catch (const virtlens::ParseError& e) {
        // Same exit class as ParseError, message gains the file name.
        throw virtlens::FileError(path + ": " + e.what());
    }
}

int run_reproduce(int set_no) {
    namespace est = virtlens::estimation;
    namespace io = virtlens::io;

    const est::Session session = io::bundled::session(set_no);
    const est::AggregateResult result = est::estimate_session(
        session, est::RoundingMode::table_reproduction);
    std::fputs(io::emit_report(result, io::ReportFormat::text_table).c_str(),
               stdout);
    if (set_no == 2) {
        std::puts(
            "note: mean and SEM are computed over the rounded "
            "per-observation focal lengths shown above");
    }

    const io::bundled::ExpectedCells expect = io::bundled::expected_cells(set_no);
    static constexpr std::array<const char*, 4> kLabel = {"I1", "I2", "I",
                                                          "f"};
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const est::EstimateRow& row = result.rows[i];
        const std::array<std::string, 4> got = {
            format_fixed(row.i1_cm, 4), format_fixed(row.i2_cm, 4),
            format_fixed(row.i_cm, 2), format_fixed(row.f_cm, 1)};
        for (std::size_t j = 0; j < got.size(); ++j) {
            ++checked;
            if (got[j] != expect.rows[i][j]) {
                std::fprintf(stderr,
                             "mismatch: row %d %s: got %s expected %s\n",
                             row.source.obs_no, kLabel[j], got[j].c_str(),
                             expect.rows[i][j].c_str());
                ++mismatches;
            }
        }
    }
    ++checked;
    if (format_fixed(result.mean_f_cm, 1) != expect.mean_f) {
        std::fprintf(stderr, "mismatch: mean f: got %s expected %s\n",
                     format_fixed(result.mean_f_cm, 1).c_str(),
                     expect.mean_f.c_str());
        ++mismatches;
    }
    ++checked;
    if (format_fixed(result.sem_f_cm.value(), 2) != expect.sem_f) {
        std::fprintf(stderr, "mismatch: SEM: got %s expected %s\n",
                     format_fixed(result.sem_f_cm.value(), 2).c_str(),
                     expect.sem_f.c_str());
        ++mismatches;
    }
    if (mismatches > 0) {
        std::fprintf(stderr, "%zu of %zu reference cells differ\n",
                     mismatches, checked);
        return 2;
    }
    std::printf("all %zu reference cells match\n", checked);
    return 0;
}

int run_estimate(const std::string& file, const std::string& mode,
                 const std::string& format) {
    namespace est = virtlens::estimation;
    namespace io = virtlens::io;

    const est::Session session = load_session(file);
    const est::RoundingMode rm = mode == "table"
                                     ? est::RoundingMode::table_reproduction
                                     : est::RoundingMode::full_precision;
    const io::ReportFormat fmt =
        format == "csv"
            ? io::ReportFormat::csv
            : format == "plotdata" ? io::ReportFormat::plotdata
                                   : io::ReportFormat::text_table;
    const est::AggregateResult result = est::estimate_session(session, rm);
    std::fputs(io::emit_report(result, fmt).c_str(), stdout);
    return 0;
}

struct SimulateArgs {
    double f_cm = 0.0;
    double u_cm = 0.0;
    double object_width_cm = 0.0;
    double fc_cm = 0.0;
    double pitch_um = 0.0;
    std::string positions;
    std::vector<double> noise;
    std::uint64_t seed = 0;
    double camera_offset_cm = 0.0;
    std::string model = "synthetic";
};

int run_simulate(const SimulateArgs& args) {
    namespace sim = virtlens::sim;

    std::vector<sim::CameraPosition> positions;
    if (!parse_positions(args.positions, positions)) {
        std::fprintf(stderr,
                     "virtlens: invalid --positions value '%s' "
                     "(expected 'D1:D[,D1:D...]')\n",
                     args.positions.c_str());
        return 1;
    }
    const sim::BenchScene scene{
        virtlens::LensSpec::from_focal_length(args.f_cm),
        virtlens::ObjectSpec{args.object_width_cm, args.u_cm},
        virtlens::CameraSpec{args.fc_cm, args.pitch_um, args.model},
        positions,
        args.camera_offset_cm,
    };
    std::optional<virtlens::NoiseSpec> noise;
    if (!args.noise.empty()) {
        virtlens::NoiseSpec ns;
        ns.pixel_halfwidth_px = args.noise[0];
        ns.d_halfwidth_cm = args.noise[1];
        ns.u_halfwidth_cm = args.noise[2];
        ns.seed = args.seed;
        noise = ns;
    }
    const virtlens::estimation::Session session =
        sim::synthesize_session(scene, noise);
    std::fputs(virtlens::io::serialize_session(session).c_str(), stdout);
    return 0;
}

void print_uncertainty_row(const char* label,
                           const virtlens::estimation::UncertaintySummary& s) {
    std::printf("%6s  %10zu  %8zu  %14.6f  %12.6f  %14.6f  %14.6f  %14.6f  "
                "%14.6f  %14.6f\n",
                label, s.used, s.failures, s.mean_f_cm, s.sd_f_cm, s.q05,
                s.q25, s.q50, s.q75, s.q95);
}

int run_uncertainty(const std::string& file, std::size_t trials,
                    std::uint64_t seed, const std::vector<double>& noise_v) {
    namespace est = virtlens::estimation;

    const est::Session session = load_session(file);
    virtlens::NoiseSpec base;
    if (!noise_v.empty()) {
        base.pixel_halfwidth_px = noise_v[0];
        base.d_halfwidth_cm = noise_v[1];
        base.u_halfwidth_cm = noise_v[2];
    }

    std::printf("%6s  %10s  %8s  %14s  %12s  %14s  %14s  %14s  %14s  %14s\n",
                "obs", "used", "failures", "mean_f", "sd_f", "p05", "p25",
                "p50", "p75", "p95");

    // One master stream hands each observation its own seed, so per-row
    // streams are independent and the whole report is fixed by --seed.
    virtlens::SplitMix64 master(seed);
    std::vector<double> pooled;
    pooled.reserve(trials * session.rows.size());
    std::size_t pooled_failures = 0;
    for (const virtlens::ObservationRow& row : session.rows) {
        virtlens::NoiseSpec ns = base;
        ns.seed = master.next();
        std::size_t failures = 0;
        const std::vector<double> samples = est::uncertainty_samples(
            session.camera, session.object, row, ns, trials, failures);
        const est::UncertaintySummary summary =
            est::summarize_samples(samples, trials, failures);
        print_uncertainty_row(std::to_string(row.obs_no).c_str(), summary);
        pooled.insert(pooled.end(), samples.begin(), samples.end());
        pooled_failures += failures;
    }
    const est::UncertaintySummary all = est::summarize_samples(
        pooled, trials * session.rows.size(), pooled_failures);
    print_uncertainty_row("pooled", all);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "two-position focal-length estimation from photographs of virtual "
        "images"};
    app.require_subcommand(1);

    CLI::App* rep = app.add_subcommand(
        "reproduce",
        "recompute a bundled reference observation set and check every "
        "displayed cell");
    int set_no = 0;
    rep->add_option("--table", set_no, "reference observation set")
        ->required()
        ->check(CLI::IsMember({1, 2}));

    CLI::App* est = app.add_subcommand(
        "estimate", "estimate a focal length from a session file");
    std::string est_file;
    std::string est_mode = "full";
    std::string est_format = "text";
    est->add_option("file", est_file, "session file")->required();
    est->add_option("--mode", est_mode,
                    "rounding mode: full (default) or table")
        ->check(CLI::IsMember({"full", "table"}));
    est->add_option("--format", est_format,
                    "output format: text (default), csv, or plotdata")
        ->check(CLI::IsMember({"text", "csv", "plotdata"}));

    CLI::App* simc = app.add_subcommand(
        "simulate", "synthesize a session from a simulated optical bench");
    SimulateArgs sim_args;
    simc->add_option("--f", sim_args.f_cm,
                     "lens focal length, cm (sign picks the kind)")
        ->required();
    simc->add_option("--u", sim_args.u_cm, "object distance, cm (negative)")
        ->required();
    simc->add_option("--O", sim_args.object_width_cm, "object width, cm")
        ->required();
    simc->add_option("--fc", sim_args.fc_cm, "camera focal length, cm")
        ->required();
    simc->add_option("--pitch", sim_args.pitch_um, "sensor pixel pitch, um")
        ->required();
    simc->add_option("--positions", sim_args.positions,
                     "camera placements 'D1:D[,D1:D...]' in cm")
        ->required();
    simc->add_option("--noise", sim_args.noise,
                     "uniform noise half-widths 'PX,D_cm,U_cm'")
        ->delimiter(',')
        ->expected(3);
    simc->add_option("--seed", sim_args.seed, "RNG seed used with --noise");
    simc->add_option("--camera-offset", sim_args.camera_offset_cm,
                     "offset between distance reference and camera lens, cm");
    simc->add_option("--model", sim_args.model, "camera model label");

    CLI::App* unc = app.add_subcommand(
        "uncertainty",
        "Monte Carlo focal-length uncertainty for each observation");
    std::string unc_file;
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
    std::vector<double> unc_noise;
    unc->add_option("file", unc_file, "session file")->required();
    unc->add_option("--trials", trials, "Monte Carlo trials per observation")
        ->check(CLI::Range(std::size_t{100}, std::size_t{100000000}));
    unc->add_option("--seed", seed, "master RNG seed");
    unc->add_option("--noise", unc_noise,
                    "uniform noise half-widths 'PX,D_cm,U_cm'")
        ->delimiter(',')
        ->expected(3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rep->parsed()) {
            return run_reproduce(set_no);
        }
        if (est->parsed()) {
            return run_estimate(est_file, est_mode, est_format);
        }
        if (simc->parsed()) {
            return run_simulate(sim_args);
        }
        return run_uncertainty(unc_file, trials, seed, unc_noise);
    } catch (const virtlens::ParseError& e) {
        std::fprintf(stderr, "virtlens: %s\n", e.what());
        return 2;
    } catch (const virtlens::FileError& e) {
        std::fprintf(stderr, "virtlens: %s\n", e.what());
        return 2;
    } catch (const virtlens::Error& e) {
        std::fprintf(stderr, "virtlens: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "virtlens: unexpected error: %s\n", e.what());
        return 3;
    }
}
