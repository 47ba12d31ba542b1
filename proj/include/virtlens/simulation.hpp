// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "virtlens/estimation.hpp"
#include "virtlens/rng.hpp"
#include "virtlens/types.hpp"

namespace virtlens::sim {

/// One camera placement: first distance from the lens under test, plus the
/// displacement to the second shot. The displacement may be negative
/// (camera moved toward the lens), never zero.
struct CameraPosition {
    double d1_cm = 0.0;
    double d_cm = 0.0;
};

/// A complete simulated bench: lens under test, object, camera, and the
/// camera placements to photograph from. camera_offset_cm models a fixed
/// offset between the tape-measure reference and the camera's lens plane;
/// the two-position estimate is invariant to it.
struct BenchScene {
    LensSpec lens;
    ObjectSpec object;
    CameraSpec camera;
    std::vector<CameraPosition> positions;
    double camera_offset_cm = 0.0;

    void validate() const;
};

/// The virtual image formed by the lens under test: signed distance from the
/// lens (negative, same side as the object) and transverse width.
struct VirtualImage {
    SignedDistance distance;
    TransverseWidth width;
};

/// Solves the thin-lens equation for the scene's object and lens and checks
/// the image is virtual. Convex lenses require the object inside the focal
/// length; an object at the focal point has no finite image.
VirtualImage virtual_image(const LensSpec& lens, const ObjectSpec& object);

/// Noise-free synthetic observation for one camera placement: projects the
/// virtual image onto the sensor at both camera spots and rounds to whole
/// pixels. Throws if the synthesized row is degenerate (zero pixels, equal
/// counts).
ObservationRow synthesize_observation(const BenchScene& scene,
                                      std::size_t index);

/// Noisy variant: adds a uniform reading error to each continuous pixel
/// width before rounding and to the recorded displacement. Consumes three
/// draws from `rng` per call (pixel1, pixel2, displacement).
ObservationRow synthesize_observation(const BenchScene& scene,
                                      std::size_t index,
                                      const NoiseSpec& noise,
                                      SplitMix64& rng);

/// Synthesizes a full session from the scene. With noise, the recorded
/// object distance is perturbed once (a session is measured with one tape
/// reading), then each row consumes three draws; the RNG is seeded from
/// noise->seed.
estimation::Session synthesize_session(
    const BenchScene& scene, const std::optional<NoiseSpec>& noise = {});

struct RoundTrip {
    double true_focal_cm = 0.0;
    double estimated_focal_cm = 0.0;
};

/// Simulates one observation and feeds it back through the full-precision
/// estimation pipeline. With quantize = false the continuous sensor widths
/// skip pixel rounding, so the estimate must match the true focal length to
/// numerical precision.
RoundTrip round_trip(const BenchScene& scene, std::size_t index,
                     bool quantize);

}  // namespace virtlens::sim
