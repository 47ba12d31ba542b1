// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#include "virtlens/types.hpp"

#include <cmath>

namespace virtlens {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw InvalidValue(std::string(what) + " must be finite");
    }
}

}  // namespace

SignedDistance::SignedDistance(double cm) : cm_(cm) {
    require_finite(cm, "distance");
}

Magnification::Magnification(double value) : value_(value) {
    require_finite(value, "magnification");
}

TransverseWidth::TransverseWidth(double cm) : cm_(cm) {
    require_finite(cm, "width");
    if (cm <= 0.0) {
        throw InvalidValue("width must be positive");
    }
}

PixelCount::PixelCount(std::int64_t count) : count_(count) {
    if (count < 0) {
        throw InvalidValue("pixel count must be non-negative");
    }
}

std::string to_string(LensKind kind) {
    return kind == LensKind::convex ? "convex" : "concave";
}

LensKind lens_kind_from_string(std::string_view text) {
    if (text == "convex") {
        return LensKind::convex;
    }
    if (text == "concave") {
        return LensKind::concave;
    }
    throw InvalidValue("unknown lens kind: " + std::string(text));
}

LensSpec::LensSpec(SignedDistance focal_length, LensKind kind)
    : focal_(focal_length), kind_(kind) {
    const double f = focal_.cm();
    if (f == 0.0) {
        throw InvalidValue("focal length must be nonzero");
    }
    if ((kind == LensKind::convex && f < 0.0) ||
        (kind == LensKind::concave && f > 0.0)) {
        throw InconsistentKind("focal length sign contradicts lens kind " +
                               to_string(kind));
    }
}

LensSpec LensSpec::from_focal_length(double focal_cm) {
    const LensKind kind =
        focal_cm > 0.0 ? LensKind::convex : LensKind::concave;
    return LensSpec(SignedDistance(focal_cm), kind);
}

void CameraSpec::validate() const {
    require_finite(fc_cm, "camera focal length");
    require_finite(pixel_pitch_um, "pixel pitch");
    if (fc_cm <= 0.0) {
        throw InvalidValue("camera focal length must be positive");
    }
    if (pixel_pitch_um <= 0.0) {
        throw InvalidValue("pixel pitch must be positive");
    }
}

void ObjectSpec::validate() const {
    require_finite(width_cm, "object width");
    require_finite(distance_cm, "object distance");
    if (width_cm <= 0.0) {
        throw InvalidValue("object width must be positive");
    }
    if (distance_cm >= 0.0) {
        throw InvalidValue("object distance must be negative (real object)");
    }
}

void ObservationRow::validate() const {
    if (obs_no < 1) {
        throw InvalidValue("obs_no must be >= 1");
    }
    require_finite(d1_cm, "D1");
    require_finite(d_cm, "D");
    if (d1_cm < 0.0) {
        throw InvalidValue("D1 must be non-negative");
    }
    if (pixel1 <= 0 || pixel2 <= 0) {
        throw ZeroWidth("pixel counts must be positive");
    }
    if (d_cm == 0.0) {
        throw DegenerateObservation("camera displacement D must be nonzero");
    }
    if (pixel1 == pixel2) {
        throw DegenerateObservation(
            "equal pixel counts carry no width information");
    }
}

void NoiseSpec::validate() const {
    require_finite(pixel_halfwidth_px, "pixel noise half-width");
    require_finite(d_halfwidth_cm, "displacement noise half-width");
    require_finite(u_halfwidth_cm, "object-distance noise half-width");
    if (pixel_halfwidth_px < 0.0 || d_halfwidth_cm < 0.0 ||
        u_halfwidth_cm < 0.0) {
        throw InvalidValue("noise half-widths must be non-negative");
    }
}

}  // namespace virtlens
