// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "virtlens/types.hpp"

namespace virtlens::optics {

/// Thin-lens image distance: v = u f / (u + f), from 1/v - 1/u = 1/f.
/// Throws DegenerateGeometry when the object sits at the focal point
/// (u + f = 0, image at infinity).
SignedDistance image_distance(SignedDistance object_distance,
                              SignedDistance focal_length);

/// Transverse magnification from conjugate distances: m = v / u.
Magnification magnification_from_distances(SignedDistance object_distance,
                                           SignedDistance image_distance);

/// Magnification straight from object distance and focal length:
/// m = 1 / (1 + u/f).
Magnification magnification_from_object_and_focal(
    SignedDistance object_distance, SignedDistance focal_length);

/// Inverts the previous map: f = u / (1/m - 1). Throws
/// DegenerateMagnification for m = 0 (no image) and m = 1 (f at infinity).
SignedDistance focal_from_magnification(SignedDistance object_distance,
                                        Magnification magnification);

/// Camera displacement that moves the sensor image between two observed
/// magnifications of a fixed virtual image: D = fc (1/m2 - 1/m1).
/// Signed; positive when the camera moved away from the image.
double displacement_from_magnifications(double fc_cm, double m1, double m2);

/// Width of the photographed virtual image from one camera displacement and
/// the two sensor-image widths: I = |D| / (fc |1/I2 - 1/I1|).
TransverseWidth width_from_two_positions(double displacement_cm, double fc_cm,
                                         TransverseWidth sensor_width1,
                                         TransverseWidth sensor_width2);

}  // namespace virtlens::optics
