// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "virtlens/types.hpp"

namespace virtlens::estimation {

/// full_precision keeps every intermediate at double precision.
/// table_reproduction rounds between stages the way the reference hand
/// calculation does: sensor widths to 4 decimals, the virtual-image width to
/// 2 decimals, the focal length to 1 decimal (ties away from zero).
enum class RoundingMode { full_precision, table_reproduction };

/// Per-observation estimate. In table_reproduction mode the stored values
/// are the stage-rounded ones.
struct EstimateRow {
    ObservationRow source;
    double i1_cm = 0.0;  ///< sensor image width at the first camera position
    double i2_cm = 0.0;  ///< sensor image width at the second camera position
    double i_cm = 0.0;   ///< virtual-image width
    double m = 0.0;      ///< lens-under-test magnification
    double f_cm = 0.0;   ///< estimated focal length
    RoundingMode mode = RoundingMode::full_precision;
};

/// Mean focal length with its standard error over a set of row estimates.
/// sem_f_cm is empty for a single observation.
struct AggregateResult {
    std::size_t n = 0;
    double mean_f_cm = 0.0;
    std::optional<double> sem_f_cm;
    std::vector<EstimateRow> rows;
};

/// A complete measurement session: one camera, one object and lens, many
/// two-position observations.
struct Session {
    CameraSpec camera;
    ObjectSpec object;
    LensKind lens_kind = LensKind::convex;
    std::vector<ObservationRow> rows;

    void validate() const;
};

/// Runs the two-position pipeline on one observation: pixel counts to sensor
/// widths, widths to the virtual-image width, magnification against the known
/// object, focal length from the magnification. When `declared_kind` is given
/// the sign of the (unrounded) estimate must match it, else InconsistentKind.
EstimateRow estimate_row(const CameraSpec& camera, const ObjectSpec& object,
                         const ObservationRow& obs, RoundingMode mode,
                         std::optional<LensKind> declared_kind = {});

/// Mean and standard error of the mean over at least two row estimates.
/// The SEM uses the n-1 sample variance.
AggregateResult aggregate(std::vector<EstimateRow> rows);

/// estimate_row over every observation followed by aggregate. A single-row
/// session yields its one estimate with an undefined SEM.
AggregateResult estimate_session(const Session& session, RoundingMode mode);

/// Monte Carlo summary of the focal-length distribution under the uniform
/// bounded measurement-noise model.
struct UncertaintySummary {
    std::size_t trials = 0;    ///< trials attempted
    std::size_t used = 0;      ///< trials that produced an estimate
    std::size_t failures = 0;  ///< trials rejected as degenerate
    double mean_f_cm = 0.0;
    double sd_f_cm = 0.0;
    double q05 = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double q95 = 0.0;
};

/// Draws `trials` perturbed copies of one observation (pixel widths, camera
/// displacement, object distance; independent uniform errors) and runs the
/// full-precision pipeline on each. Degenerate draws are counted in
/// `failures_out` and skipped; more than 1% of them is an error. The stream
/// is fully determined by noise.seed.
std::vector<double> uncertainty_samples(const CameraSpec& camera,
                                        const ObjectSpec& object,
                                        const ObservationRow& obs,
                                        const NoiseSpec& noise,
                                        std::size_t trials,
                                        std::size_t& failures_out);

/// Mean, n-1 standard deviation, and interpolated quantiles of `samples`.
UncertaintySummary summarize_samples(const std::vector<double>& samples,
                                     std::size_t trials,
                                     std::size_t failures);

/// uncertainty_samples followed by summarize_samples.
UncertaintySummary propagate_uncertainty(const CameraSpec& camera,
                                         const ObjectSpec& object,
                                         const ObservationRow& obs,
                                         const NoiseSpec& noise,
                                         std::size_t trials);

}  // namespace virtlens::estimation
