// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "virtlens/types.hpp"

namespace virtlens::sensor {

inline constexpr double um_per_cm = 1e4;
inline constexpr double cm_per_um = 1e-4;

/// Physical width spanned by `count` pixels of pitch `pixel_pitch_um`.
/// Throws ZeroWidth for a zero count.
TransverseWidth pixels_to_width(PixelCount count, double pixel_pitch_um);

/// Inverse of pixels_to_width with rounding to the nearest pixel
/// (ties away from zero).
PixelCount width_to_pixels(TransverseWidth width, double pixel_pitch_um);

/// Width of the image formed on the camera sensor when a fixed-focus camera
/// of focal length fc photographs a (virtual) image of width `subject_width`
/// at distance `subject_distance_cm` in front of the camera lens:
/// s = I fc / (d - fc). Requires d > fc (subject beyond the focal plane).
TransverseWidth sensor_image_width(TransverseWidth subject_width,
                                   double subject_distance_cm, double fc_cm);

}  // namespace virtlens::sensor
