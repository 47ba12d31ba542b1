// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#include "virtlens/sensor.hpp"

#include <cmath>

namespace virtlens::sensor {

TransverseWidth pixels_to_width(PixelCount count, double pixel_pitch_um) {
    if (!std::isfinite(pixel_pitch_um) || pixel_pitch_um <= 0.0) {
        throw InvalidValue("pixel pitch must be positive");
    }
    if (count.count() == 0) {
        throw ZeroWidth("zero pixels span no width");
    }
    return TransverseWidth(static_cast<double>(count.count()) *
                           pixel_pitch_um * cm_per_um);
}

PixelCount width_to_pixels(TransverseWidth width, double pixel_pitch_um) {
    if (!std::isfinite(pixel_pitch_um) || pixel_pitch_um <= 0.0) {
        throw InvalidValue("pixel pitch must be positive");
    }
    return PixelCount(
        std::llround(width.cm() * um_per_cm / pixel_pitch_um));
}

TransverseWidth sensor_image_width(TransverseWidth subject_width,
                                   double subject_distance_cm, double fc_cm) {
    if (!std::isfinite(fc_cm) || fc_cm <= 0.0) {
        throw InvalidValue("camera focal length must be positive");
    }
    if (!std::isfinite(subject_distance_cm)) {
        throw InvalidValue("subject distance must be finite");
    }
    if (subject_distance_cm <= fc_cm) {
        throw DegenerateGeometry(
            "subject at or inside the camera focal plane");
    }
    return TransverseWidth(subject_width.cm() * fc_cm /
                           (subject_distance_cm - fc_cm));
}

}  // namespace virtlens::sensor
