// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#include "virtlens/estimation.hpp"

#include <algorithm>
#include <cmath>

#include "virtlens/optics.hpp"
#include "virtlens/rng.hpp"
#include "virtlens/rounding.hpp"
#include "virtlens/sensor.hpp"

namespace virtlens::estimation {

namespace {

double sample_mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    return sum / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs, double mean) {
    double ssq = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        ssq += d * d;
    }
    return std::sqrt(ssq / static_cast<double>(xs.size() - 1));
}

/// Linear-interpolation quantile of an ascending-sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + (sorted[lo + 1] - sorted[lo]) * frac;
}

}  // namespace

void Session::validate() const {
    camera.validate();
    object.validate();
    if (rows.empty()) {
        throw InsufficientData("session has no observations");
    }
    int last = 0;
    for (const ObservationRow& row : rows) {
        row.validate();
        if (row.obs_no <= last) {
            throw InvalidValue("observation numbers must be strictly increasing");
        }
        last = row.obs_no;
    }
}

EstimateRow estimate_row(const CameraSpec& camera, const ObjectSpec& object,
                         const ObservationRow& obs, RoundingMode mode,
                         std::optional<LensKind> declared_kind) {
    camera.validate();
    object.validate();
    obs.validate();

    const bool table = mode == RoundingMode::table_reproduction;

    double i1 = sensor::pixels_to_width(PixelCount(obs.pixel1),
                                        camera.pixel_pitch_um)
                    .cm();
    double i2 = sensor::pixels_to_width(PixelCount(obs.pixel2),
                                        camera.pixel_pitch_um)
                    .cm();
    if (table) {
        i1 = round_to_decimals(i1, 4);
        i2 = round_to_decimals(i2, 4);
        if (i1 <= 0.0 || i2 <= 0.0) {
            throw ZeroWidth("sensor width rounds to zero");
        }
        if (i1 == i2) {
            throw DegenerateObservation(
                "sensor widths coincide after rounding");
        }
    }

    double i = optics::width_from_two_positions(obs.d_cm, camera.fc_cm,
                                                TransverseWidth(i1),
                                                TransverseWidth(i2))
                   .cm();
    if (table) {
        i = round_to_decimals(i, 2);
        if (i <= 0.0) {
            throw ZeroWidth("virtual-image width rounds to zero");
        }
    }

    const double m = i / object.width_cm;
    double f = optics::focal_from_magnification(
                   SignedDistance(object.distance_cm), Magnification(m))
                   .cm();
    if (declared_kind) {
        const LensKind estimated =
            f > 0.0 ? LensKind::convex : LensKind::concave;
        if (estimated != *declared_kind) {
            throw InconsistentKind(
                "estimated focal length sign contradicts declared lens kind " +
                to_string(*declared_kind));
        }
    }
    if (table) {
        f = round_to_decimals(f, 1);
    }

    EstimateRow out;
    out.source = obs;
    out.i1_cm = i1;
    out.i2_cm = i2;
    out.i_cm = i;
    out.m = m;
    out.f_cm = f;
    out.mode = mode;
    return out;
}

AggregateResult aggregate(std::vector<EstimateRow> rows) {
    if (rows.size() < 2) {
        throw InsufficientData(
            "at least two observations are required for a mean with SEM");
    }
    std::vector<double> fs;
    fs.reserve(rows.size());
    for (const EstimateRow& row : rows) {
        fs.push_back(row.f_cm);
    }
    const double mean = sample_mean(fs);
    const double sem =
        sample_sd(fs, mean) / std::sqrt(static_cast<double>(fs.size()));

    AggregateResult out;
    out.n = rows.size();
    out.mean_f_cm = mean;
    out.sem_f_cm = sem;
    out.rows = std::move(rows);
    return out;
}

AggregateResult estimate_session(const Session& session, RoundingMode mode) {
    session.validate();
    std::vector<EstimateRow> rows;
    rows.reserve(session.rows.size());
    for (const ObservationRow& obs : session.rows) {
        rows.push_back(estimate_row(session.camera, session.object, obs, mode,
                                    session.lens_kind));
    }
    if (rows.size() == 1) {
        AggregateResult out;
        out.n = 1;
        out.mean_f_cm = rows.front().f_cm;
        out.sem_f_cm = std::nullopt;
        out.rows = std::move(rows);
        return out;
    }
    return aggregate(std::move(rows));
}

std::vector<double> uncertainty_samples(const CameraSpec& camera,
                                        const ObjectSpec& object,
                                        const ObservationRow& obs,
                                        const NoiseSpec& noise,
                                        std::size_t trials,
                                        std::size_t& failures_out) {
    camera.validate();
    object.validate();
    obs.validate();
    noise.validate();
    if (trials < 100) {
        throw InvalidValue("at least 100 trials are required");
    }

    SplitMix64 rng(noise.seed);
    const double px1 = static_cast<double>(obs.pixel1);
    const double px2 = static_cast<double>(obs.pixel2);

    std::vector<double> samples;
    samples.reserve(trials);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        // Draw order is part of the reproducibility contract.
        const double dpx1 =
            rng.uniform(-noise.pixel_halfwidth_px, noise.pixel_halfwidth_px);
        const double dpx2 =
            rng.uniform(-noise.pixel_halfwidth_px, noise.pixel_halfwidth_px);
        const double dd =
            rng.uniform(-noise.d_halfwidth_cm, noise.d_halfwidth_cm);
        const double du =
            rng.uniform(-noise.u_halfwidth_cm, noise.u_halfwidth_cm);
        try {
            const double w1 =
                (px1 + dpx1) * camera.pixel_pitch_um * sensor::cm_per_um;
            const double w2 =
                (px2 + dpx2) * camera.pixel_pitch_um * sensor::cm_per_um;
            const double d = obs.d_cm + dd;
            const double u = object.distance_cm + du;
            if (u >= 0.0) {
                throw InvalidValue("perturbed object distance not negative");
            }
            const double i =
                optics::width_from_two_positions(d, camera.fc_cm,
                                                 TransverseWidth(w1),
                                                 TransverseWidth(w2))
                    .cm();
            const double m = i / object.width_cm;
            const double f = optics::focal_from_magnification(
                                 SignedDistance(u), Magnification(m))
                                 .cm();
            samples.push_back(f);
        } catch (const Error&) {
            ++failures;
        }
    }
    if (failures * 100 > trials) {
        throw DegenerateObservation(
            "noise model rejected more than 1% of trials as degenerate");
    }
    failures_out = failures;
    return samples;
}

UncertaintySummary summarize_samples(const std::vector<double>& samples,
                                     std::size_t trials,
                                     std::size_t failures) {
    if (samples.size() < 2) {
        throw InsufficientData("too few samples to summarize");
    }
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());

    UncertaintySummary out;
    out.trials = trials;
    out.used = samples.size();
    out.failures = failures;
    out.mean_f_cm = sample_mean(samples);
    out.sd_f_cm = sample_sd(samples, out.mean_f_cm);
    out.q05 = quantile_sorted(sorted, 0.05);
    out.q25 = quantile_sorted(sorted, 0.25);
    out.q50 = quantile_sorted(sorted, 0.50);
    out.q75 = quantile_sorted(sorted, 0.75);
    out.q95 = quantile_sorted(sorted, 0.95);
    return out;
}

UncertaintySummary propagate_uncertainty(const CameraSpec& camera,
                                         const ObjectSpec& object,
                                         const ObservationRow& obs,
                                         const NoiseSpec& noise,
                                         std::size_t trials) {
    std::size_t failures = 0;
    const std::vector<double> samples =
        uncertainty_samples(camera, object, obs, noise, trials, failures);
    return summarize_samples(samples, trials, failures);
}

}  // namespace virtlens::estimation
