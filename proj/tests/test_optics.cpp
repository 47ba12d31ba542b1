// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>

#include "doctest.h"
#include "virtlens/optics.hpp"
#include "virtlens/rng.hpp"

using namespace virtlens;

namespace {

/// Random scene in the virtual-image regime: any object for a concave lens,
/// object inside the focal length for a convex one.
struct Scene {
    double u = 0.0;
    double f = 0.0;
};

Scene random_scene(SplitMix64& rng) {
    const bool concave = rng.uniform01() < 0.5;
    const double mag = rng.uniform(1.0, 80.0);
    Scene s;
    s.f = concave ? -mag : mag;
    s.u = concave ? -rng.uniform(0.5, 200.0) : -mag * rng.uniform(0.05, 0.95);
    return s;
}

}  // namespace

TEST_CASE("image distance satisfies the defining conjugate relation") {
    SplitMix64 rng(101);
    for (int i = 0; i < 5000; ++i) {
        const Scene s = random_scene(rng);
        const double v =
            optics::image_distance(SignedDistance(s.u), SignedDistance(s.f))
                .cm();
        CHECK(v < 0.0);
        const double lhs = 1.0 / v - 1.0 / s.u;
        const double rhs = 1.0 / s.f;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs) + 1e-15);
    }
}

TEST_CASE("reference scenes reproduce pinned values") {
    const double v1 =
        optics::image_distance(SignedDistance(-8.8), SignedDistance(-26.9))
            .cm();
    CHECK(v1 == -6.6308123249299715);
    CHECK(optics::magnification_from_distances(SignedDistance(-8.8),
                                               SignedDistance(v1))
              .value() == 0.753501400560224);

    const double v2 =
        optics::image_distance(SignedDistance(-9.1), SignedDistance(17.2))
            .cm();
    CHECK(v2 == -19.323456790123455);
    CHECK(optics::magnification_from_distances(SignedDistance(-9.1),
                                               SignedDistance(v2))
              .value() == 2.1234567901234565);
    CHECK(optics::magnification_from_object_and_focal(SignedDistance(-9.1),
                                                      SignedDistance(17.2))
              .value() == 2.123456790123457);

    CHECK(optics::focal_from_magnification(SignedDistance(-8.8),
                                           Magnification(0.752))
              .cm() == -26.68387096774194);
    CHECK(optics::focal_from_magnification(SignedDistance(-9.1),
                                           Magnification(2.115))
              .cm() == 17.261434977578475);

    CHECK(optics::displacement_from_magnifications(0.532, 0.2059 / 3.76,
                                                   0.0639 / 3.76) ==
          21.588905077977447);
    CHECK(optics::displacement_from_magnifications(0.422, 0.0595 / 4.23,
                                                   0.0311 / 4.23) ==
          27.396419249371775);

    CHECK(optics::width_from_two_positions(21.6, 0.532,
                                           TransverseWidth(0.2059),
                                           TransverseWidth(0.0639))
              .cm() == 3.7619323308270682);
    CHECK(optics::width_from_two_positions(27.4, 0.422,
                                           TransverseWidth(0.0595),
                                           TransverseWidth(0.0311))
              .cm() == 4.230552866964821);
}

TEST_CASE("both magnification routes agree") {
    SplitMix64 rng(202);
    for (int i = 0; i < 5000; ++i) {
        const Scene s = random_scene(rng);
        const double v =
            optics::image_distance(SignedDistance(s.u), SignedDistance(s.f))
                .cm();
        const double m1 = optics::magnification_from_distances(
                              SignedDistance(s.u), SignedDistance(v))
                              .value();
        const double m2 = optics::magnification_from_object_and_focal(
                              SignedDistance(s.u), SignedDistance(s.f))
                              .value();
        CHECK(m1 > 0.0);
        CHECK(std::abs(m1 - m2) <= 1e-12 * std::abs(m1));
    }
}

TEST_CASE("focal_from_magnification inverts the forward map") {
    SplitMix64 rng(303);
    for (int i = 0; i < 10000; ++i) {
        const Scene s = random_scene(rng);
        const double m = optics::magnification_from_object_and_focal(
                             SignedDistance(s.u), SignedDistance(s.f))
                             .value();
        const double f_rec = optics::focal_from_magnification(
                                 SignedDistance(s.u), Magnification(m))
                                 .cm();
        CHECK(std::abs(f_rec - s.f) <= 1e-10 * std::abs(s.f));
    }
}

TEST_CASE("displacement and width recovery are mutually consistent") {
    SplitMix64 rng(404);
    for (int i = 0; i < 5000; ++i) {
        const double width = rng.uniform(0.5, 50.0);
        const double fc = rng.uniform(0.1, 2.0);
        const double d1 = fc + rng.uniform(0.5, 100.0);
        double d2 = fc + rng.uniform(0.5, 100.0);
        if (std::abs(d2 - d1) < 0.5) {
            d2 += 1.0;
        }
        const double s1 = width * fc / (d1 - fc);
        const double s2 = width * fc / (d2 - fc);
        const double m1 = s1 / width;
        const double m2 = s2 / width;

        const double d_rec =
            optics::displacement_from_magnifications(fc, m1, m2);
        CHECK(std::abs(d_rec - (d2 - d1)) <=
              1e-9 * (std::abs(d1) + std::abs(d2)));

        const double w_rec = optics::width_from_two_positions(
                                 d2 - d1, fc, TransverseWidth(s1),
                                 TransverseWidth(s2))
                                 .cm();
        CHECK(std::abs(w_rec - width) <= 1e-11 * width);
    }
}

TEST_CASE("width recovery is symmetric and displacement-sign blind") {
    SplitMix64 rng(505);
    for (int i = 0; i < 5000; ++i) {
        const double s1 = rng.uniform(0.001, 1.0);
        double s2 = rng.uniform(0.001, 1.0);
        if (s2 == s1) {
            s2 += 0.001;
        }
        const double d = rng.uniform(0.1, 200.0);
        const double fc = rng.uniform(0.1, 2.0);
        const double a = optics::width_from_two_positions(
                             d, fc, TransverseWidth(s1), TransverseWidth(s2))
                             .cm();
        const double b = optics::width_from_two_positions(
                             d, fc, TransverseWidth(s2), TransverseWidth(s1))
                             .cm();
        const double c = optics::width_from_two_positions(
                             -d, fc, TransverseWidth(s1), TransverseWidth(s2))
                             .cm();
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("degenerate optics inputs throw typed errors") {
    CHECK_THROWS_AS(optics::image_distance(SignedDistance(0.0),
                                           SignedDistance(5.0)),
                    InvalidValue);
    CHECK_THROWS_AS(optics::image_distance(SignedDistance(-5.0),
                                           SignedDistance(0.0)),
                    InvalidValue);
    CHECK_THROWS_AS(optics::image_distance(SignedDistance(-5.0),
                                           SignedDistance(5.0)),
                    DegenerateGeometry);
    CHECK_THROWS_AS(optics::magnification_from_object_and_focal(
                        SignedDistance(-5.0), SignedDistance(5.0)),
                    DegenerateGeometry);
    CHECK_THROWS_AS(optics::magnification_from_distances(SignedDistance(0.0),
                                                         SignedDistance(1.0)),
                    InvalidValue);
    CHECK_THROWS_AS(optics::focal_from_magnification(SignedDistance(-5.0),
                                                     Magnification(1.0)),
                    DegenerateMagnification);
    CHECK_THROWS_AS(optics::focal_from_magnification(SignedDistance(-5.0),
                                                     Magnification(0.0)),
                    DegenerateMagnification);
    CHECK_THROWS_AS(optics::focal_from_magnification(SignedDistance(0.0),
                                                     Magnification(0.5)),
                    InvalidValue);
    CHECK_THROWS_AS(optics::displacement_from_magnifications(0.0, 0.5, 0.7),
                    InvalidValue);
    CHECK_THROWS_AS(optics::displacement_from_magnifications(0.5, 0.0, 0.7),
                    DegenerateMagnification);
    CHECK_THROWS_AS(optics::width_from_two_positions(0.0, 0.5,
                                                     TransverseWidth(0.1),
                                                     TransverseWidth(0.2)),
                    DegenerateObservation);
    CHECK_THROWS_AS(optics::width_from_two_positions(1.0, 0.5,
                                                     TransverseWidth(0.1),
                                                     TransverseWidth(0.1)),
                    DegenerateObservation);
    CHECK_THROWS_AS(optics::width_from_two_positions(1.0, -0.5,
                                                     TransverseWidth(0.1),
                                                     TransverseWidth(0.2)),
                    InvalidValue);
}

TEST_CASE("value types enforce their domains") {
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(SignedDistance{inf}, InvalidValue);
    CHECK_THROWS_AS(SignedDistance{nan}, InvalidValue);
    CHECK_THROWS_AS(Magnification{nan}, InvalidValue);
    CHECK_THROWS_AS(TransverseWidth{0.0}, InvalidValue);
    CHECK_THROWS_AS(TransverseWidth{-1.0}, InvalidValue);
    CHECK_THROWS_AS(TransverseWidth{inf}, InvalidValue);
    CHECK_THROWS_AS(PixelCount{-1}, InvalidValue);
    CHECK(PixelCount().count() == 0);

    CHECK(LensSpec::from_focal_length(-26.9).kind() == LensKind::concave);
    CHECK(LensSpec::from_focal_length(17.2).kind() == LensKind::convex);
    CHECK_THROWS_AS(LensSpec::from_focal_length(0.0), InvalidValue);
    CHECK_THROWS_AS(LensSpec(SignedDistance(-5.0), LensKind::convex),
                    InconsistentKind);
    CHECK_THROWS_AS(LensSpec(SignedDistance(5.0), LensKind::concave),
                    InconsistentKind);

    CHECK(to_string(LensKind::convex) == "convex");
    CHECK(lens_kind_from_string("concave") == LensKind::concave);
    CHECK_THROWS_AS(lens_kind_from_string("flat"), InvalidValue);

    ObjectSpec object{5.0, -8.8};
    CHECK_NOTHROW(object.validate());
    object.distance_cm = 8.8;
    CHECK_THROWS_AS(object.validate(), InvalidValue);

    NoiseSpec noise;
    CHECK_NOTHROW(noise.validate());
    noise.pixel_halfwidth_px = -0.5;
    CHECK_THROWS_AS(noise.validate(), InvalidValue);
}
