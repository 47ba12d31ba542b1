// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#include "virtlens/optics.hpp"

#include <cmath>

namespace virtlens::optics {

SignedDistance image_distance(SignedDistance object_distance,
                              SignedDistance focal_length) {
    const double u = object_distance.cm();
    const double f = focal_length.cm();
    if (u == 0.0) {
        throw InvalidValue("object distance must be nonzero");
    }
    if (f == 0.0) {
        throw InvalidValue("focal length must be nonzero");
    }
    if (u + f == 0.0) {
        throw DegenerateGeometry("object at focal point: image at infinity");
    }
    return SignedDistance(u * f / (u + f));
}

Magnification magnification_from_distances(SignedDistance object_distance,
                                           SignedDistance image_distance) {
    const double u = object_distance.cm();
    if (u == 0.0) {
        throw InvalidValue("object distance must be nonzero");
    }
    return Magnification(image_distance.cm() / u);
}

Magnification magnification_from_object_and_focal(
    SignedDistance object_distance, SignedDistance focal_length) {
    const double u = object_distance.cm();
    const double f = focal_length.cm();
    if (f == 0.0) {
        throw InvalidValue("focal length must be nonzero");
    }
    if (u + f == 0.0) {
        throw DegenerateGeometry("object at focal point: image at infinity");
    }
    return Magnification(1.0 / (1.0 + u / f));
}

SignedDistance focal_from_magnification(SignedDistance object_distance,
                                        Magnification magnification) {
    const double u = object_distance.cm();
    const double m = magnification.value();
    if (u == 0.0) {
        throw InvalidValue("object distance must be nonzero");
    }
    if (m == 0.0) {
        throw DegenerateMagnification("magnification of zero has no focal length");
    }
    if (m == 1.0) {
        throw DegenerateMagnification("unit magnification: focal length at infinity");
    }
    return SignedDistance(u / (1.0 / m - 1.0));
}

double displacement_from_magnifications(double fc_cm, double m1, double m2) {
    if (!std::isfinite(fc_cm) || fc_cm <= 0.0) {
        throw InvalidValue("camera focal length must be positive");
    }
    if (!std::isfinite(m1) || !std::isfinite(m2)) {
        throw InvalidValue("magnifications must be finite");
    }
    if (m1 == 0.0 || m2 == 0.0) {
        throw DegenerateMagnification("magnification of zero has no inverse");
    }
    return fc_cm * (1.0 / m2 - 1.0 / m1);
}

TransverseWidth width_from_two_positions(double displacement_cm, double fc_cm,
                                         TransverseWidth sensor_width1,
                                         TransverseWidth sensor_width2) {
    if (!std::isfinite(displacement_cm)) {
        throw InvalidValue("displacement must be finite");
    }
    if (!std::isfinite(fc_cm) || fc_cm <= 0.0) {
        throw InvalidValue("camera focal length must be positive");
    }
    if (displacement_cm == 0.0) {
        throw DegenerateObservation("zero camera displacement");
    }
    const double i1 = sensor_width1.cm();
    const double i2 = sensor_width2.cm();
    if (i1 == i2) {
        throw DegenerateObservation(
            "equal sensor widths carry no distance information");
    }
    return TransverseWidth(std::abs(displacement_cm) /
                           (fc_cm * std::abs(1.0 / i2 - 1.0 / i1)));
}

}  // namespace virtlens::optics
