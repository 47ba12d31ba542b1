// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "virtlens/errors.hpp"

namespace virtlens {

/// Signed distance along the optical axis, in cm. Sign convention: distances
/// measured against the direction of incident light are negative, so a real
/// object sits at u < 0 and a virtual image at v < 0.
class SignedDistance {
  public:
    explicit SignedDistance(double cm);

    double cm() const noexcept { return cm_; }

  private:
    double cm_;
};

/// Transverse (lateral) magnification, dimensionless. Positive for an erect
/// image; a virtual image of a real object always has m > 0.
class Magnification {
  public:
    explicit Magnification(double value);

    double value() const noexcept { return value_; }

  private:
    double value_;
};

/// Width of an object or image transverse to the optical axis, in cm.
/// Always finite and strictly positive.
class TransverseWidth {
  public:
    explicit TransverseWidth(double cm);

    double cm() const noexcept { return cm_; }

  private:
    double cm_;
};

/// Count of sensor pixels spanned by an image. Non-negative.
class PixelCount {
  public:
    PixelCount() noexcept : count_(0) {}
    explicit PixelCount(std::int64_t count);

    std::int64_t count() const noexcept { return count_; }

  private:
    std::int64_t count_;
};

enum class LensKind { convex, concave };

std::string to_string(LensKind kind);
LensKind lens_kind_from_string(std::string_view text);

/// A thin lens: focal length plus kind, with the sign of the focal length
/// required to match the kind (convex f > 0, concave f < 0).
class LensSpec {
  public:
    LensSpec(SignedDistance focal_length, LensKind kind);

    /// Derives the kind from the sign of the focal length.
    static LensSpec from_focal_length(double focal_cm);

    SignedDistance focal_length() const noexcept { return focal_; }
    LensKind kind() const noexcept { return kind_; }

  private:
    SignedDistance focal_;
    LensKind kind_;
};

/// The fixed-focus camera used to photograph the virtual image.
struct CameraSpec {
    double fc_cm = 0.0;           ///< camera lens focal length, cm
    double pixel_pitch_um = 0.0;  ///< sensor pixel pitch, micrometres
    std::string model_label;      ///< free-form label, may be empty

    void validate() const;
};

/// The physical object placed in front of the lens under test.
struct ObjectSpec {
    double width_cm = 0.0;     ///< transverse width O, > 0
    double distance_cm = 0.0;  ///< signed object distance u, < 0

    void validate() const;
};

/// One two-position photographic observation: pixel widths of the same
/// virtual image taken at camera distances D1 and D1 + D from the lens.
struct ObservationRow {
    int obs_no = 0;       ///< 1-based observation index
    double d1_cm = 0.0;   ///< distance of the first camera position from the lens
    std::int64_t pixel1 = 0;  ///< image width in pixels at the first position
    double d_cm = 0.0;    ///< camera displacement between the two positions
    std::int64_t pixel2 = 0;  ///< image width in pixels at the second position

    void validate() const;
};

/// Half-widths of the uniform measurement-error model, plus the RNG seed.
struct NoiseSpec {
    double pixel_halfwidth_px = 0.5;  ///< pixel-width reading error, px
    double d_halfwidth_cm = 0.05;     ///< displacement reading error, cm
    double u_halfwidth_cm = 0.05;     ///< object-distance reading error, cm
    std::uint64_t seed = 0;

    void validate() const;
};

}  // namespace virtlens
