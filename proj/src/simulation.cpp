// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#include "virtlens/simulation.hpp"

#include <cmath>

#include "virtlens/optics.hpp"
#include "virtlens/sensor.hpp"

namespace virtlens::sim {

namespace {

/// Continuous (unrounded) sensor widths for one placement, in cm.
struct ContinuousPair {
    double s1_cm = 0.0;
    double s2_cm = 0.0;
};

ContinuousPair project_position(const BenchScene& scene,
                                const VirtualImage& vi,
                                const CameraPosition& pos) {
    const double va = std::abs(vi.distance.cm());
    const double da = pos.d1_cm + scene.camera_offset_cm + va;
    const double db = pos.d1_cm + pos.d_cm + scene.camera_offset_cm + va;
    ContinuousPair out;
    out.s1_cm =
        sensor::sensor_image_width(vi.width, da, scene.camera.fc_cm).cm();
    out.s2_cm =
        sensor::sensor_image_width(vi.width, db, scene.camera.fc_cm).cm();
    return out;
}

ObservationRow quantize_row(const BenchScene& scene, const ContinuousPair& s,
                            const CameraPosition& pos, std::size_t index) {
    ObservationRow row;
    row.obs_no = static_cast<int>(index) + 1;
    row.d1_cm = pos.d1_cm;
    row.d_cm = pos.d_cm;
    row.pixel1 = sensor::width_to_pixels(TransverseWidth(s.s1_cm),
                                         scene.camera.pixel_pitch_um)
                     .count();
    row.pixel2 = sensor::width_to_pixels(TransverseWidth(s.s2_cm),
                                         scene.camera.pixel_pitch_um)
                     .count();
    row.validate();
    return row;
}

ObservationRow noisy_row(const BenchScene& scene, const ContinuousPair& s,
                         const CameraPosition& pos, std::size_t index,
                         const NoiseSpec& noise, SplitMix64& rng) {
    const double dpx1 =
        rng.uniform(-noise.pixel_halfwidth_px, noise.pixel_halfwidth_px);
    const double dpx2 =
        rng.uniform(-noise.pixel_halfwidth_px, noise.pixel_halfwidth_px);
    const double dd =
        rng.uniform(-noise.d_halfwidth_cm, noise.d_halfwidth_cm);
    const double pitch = scene.camera.pixel_pitch_um;

    ObservationRow row;
    row.obs_no = static_cast<int>(index) + 1;
    row.d1_cm = pos.d1_cm;
    row.d_cm = pos.d_cm + dd;
    row.pixel1 = std::llround(s.s1_cm * sensor::um_per_cm / pitch + dpx1);
    row.pixel2 = std::llround(s.s2_cm * sensor::um_per_cm / pitch + dpx2);
    row.validate();
    return row;
}

std::size_t checked_index(const BenchScene& scene, std::size_t index) {
    if (index >= scene.positions.size()) {
        throw InvalidValue("camera position index out of range");
    }
    return index;
}

}  // namespace

VirtualImage virtual_image(const LensSpec& lens, const ObjectSpec& object) {
    object.validate();
    const SignedDistance v = optics::image_distance(
        SignedDistance(object.distance_cm), lens.focal_length());
    if (v.cm() > 0.0) {
        throw NotVirtual("configuration forms a real image");
    }
    const double m = v.cm() / object.distance_cm;
    return VirtualImage{v, TransverseWidth(std::abs(m) * object.width_cm)};
}

void BenchScene::validate() const {
    object.validate();
    camera.validate();
    if (!std::isfinite(camera_offset_cm)) {
        throw InvalidValue("camera offset must be finite");
    }
    if (positions.empty()) {
        throw InsufficientData("scene has no camera positions");
    }
    const VirtualImage vi = virtual_image(lens, object);
    const double va = std::abs(vi.distance.cm());
    for (const CameraPosition& pos : positions) {
        if (!std::isfinite(pos.d1_cm) || !std::isfinite(pos.d_cm)) {
            throw InvalidValue("camera position must be finite");
        }
        if (pos.d1_cm < 0.0) {
            throw InvalidValue("camera distance D1 must be non-negative");
        }
        if (pos.d_cm == 0.0) {
            throw DegenerateObservation(
                "camera displacement D must be nonzero");
        }
        const double da = pos.d1_cm + camera_offset_cm + va;
        const double db = pos.d1_cm + pos.d_cm + camera_offset_cm + va;
        if (da <= camera.fc_cm || db <= camera.fc_cm) {
            throw DegenerateGeometry(
                "camera placement puts the image at or inside the camera "
                "focal plane");
        }
    }
}

ObservationRow synthesize_observation(const BenchScene& scene,
                                      std::size_t index) {
    scene.validate();
    const std::size_t i = checked_index(scene, index);
    const VirtualImage vi = virtual_image(scene.lens, scene.object);
    return quantize_row(scene, project_position(scene, vi, scene.positions[i]),
                        scene.positions[i], i);
}

ObservationRow synthesize_observation(const BenchScene& scene,
                                      std::size_t index,
                                      const NoiseSpec& noise,
                                      SplitMix64& rng) {
    scene.validate();
    noise.validate();
    const std::size_t i = checked_index(scene, index);
    const VirtualImage vi = virtual_image(scene.lens, scene.object);
    return noisy_row(scene, project_position(scene, vi, scene.positions[i]),
                     scene.positions[i], i, noise, rng);
}

estimation::Session synthesize_session(const BenchScene& scene,
                                       const std::optional<NoiseSpec>& noise) {
    scene.validate();
    estimation::Session out;
    out.camera = scene.camera;
    out.object = scene.object;
    out.lens_kind = scene.lens.kind();

    const VirtualImage vi = virtual_image(scene.lens, scene.object);
    SplitMix64 rng(noise ? noise->seed : 0);
    if (noise) {
        noise->validate();
        const double du =
            rng.uniform(-noise->u_halfwidth_cm, noise->u_halfwidth_cm);
        out.object.distance_cm = scene.object.distance_cm + du;
        out.object.validate();
    }
    out.rows.reserve(scene.positions.size());
    for (std::size_t i = 0; i < scene.positions.size(); ++i) {
        const ContinuousPair s =
            project_position(scene, vi, scene.positions[i]);
        out.rows.push_back(noise ? noisy_row(scene, s, scene.positions[i], i,
                                             *noise, rng)
                                 : quantize_row(scene, s, scene.positions[i],
                                                i));
    }
    out.validate();
    return out;
}

RoundTrip round_trip(const BenchScene& scene, std::size_t index,
                     bool quantize) {
    scene.validate();
    const std::size_t i = checked_index(scene, index);
    const VirtualImage vi = virtual_image(scene.lens, scene.object);
    const CameraPosition& pos = scene.positions[i];
    const ContinuousPair s = project_position(scene, vi, pos);

    RoundTrip out;
    out.true_focal_cm = scene.lens.focal_length().cm();
    if (quantize) {
        const ObservationRow row = quantize_row(scene, s, pos, i);
        out.estimated_focal_cm =
            estimation::estimate_row(scene.camera, scene.object, row,
                                     estimation::RoundingMode::full_precision)
                .f_cm;
    } else {
        const double w = optics::width_from_two_positions(
                             pos.d_cm, scene.camera.fc_cm,
                             TransverseWidth(s.s1_cm),
                             TransverseWidth(s.s2_cm))
                             .cm();
        const double m = w / scene.object.width_cm;
        out.estimated_focal_cm =
            optics::focal_from_magnification(
                SignedDistance(scene.object.distance_cm), Magnification(m))
                .cm();
    }
    return out;
}

}  // namespace virtlens::sim
