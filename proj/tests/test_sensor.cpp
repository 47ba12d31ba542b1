// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "virtlens/rng.hpp"
#include "virtlens/sensor.hpp"

using namespace virtlens;

TEST_CASE("pixel counts convert to the pinned physical widths") {
    CHECK(sensor::pixels_to_width(PixelCount(1211), 1.7).cm() == 0.20587);
    CHECK(sensor::pixels_to_width(PixelCount(376), 1.7).cm() ==
          0.06391999999999999);
    CHECK(sensor::pixels_to_width(PixelCount(425), 1.4).cm() ==
          0.059500000000000004);
    CHECK(sensor::pixels_to_width(PixelCount(222), 1.4).cm() ==
          0.031079999999999997);
    // 10^4 pixels of 1 um pitch span exactly one centimetre
    CHECK(sensor::pixels_to_width(PixelCount(10000), 1.0).cm() == 1.0);
}

TEST_CASE("width_to_pixels inverts pixels_to_width exactly") {
    SplitMix64 rng(42);
    const double pitches[] = {0.8, 1.4, 1.7, 2.44};
    for (int i = 0; i < 20000; ++i) {
        const auto px =
            static_cast<std::int64_t>(1 + (rng.next() % 100000));
        const double pitch = pitches[rng.next() % 4];
        const TransverseWidth w =
            sensor::pixels_to_width(PixelCount(px), pitch);
        CHECK(sensor::width_to_pixels(w, pitch).count() == px);
    }
}

TEST_CASE("width_to_pixels rounds ties away from zero") {
    // 5e-4 cm at 2 um pitch is exactly 2.5 pixels
    CHECK(sensor::width_to_pixels(TransverseWidth(5e-4), 2.0).count() == 3);
}

TEST_CASE("pixel width is linear in the count") {
    SplitMix64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const auto n = static_cast<std::int64_t>(1 + (rng.next() % 5000));
        const double pitch = rng.uniform(0.5, 3.0);
        const double one = sensor::pixels_to_width(PixelCount(1), pitch).cm();
        const double many =
            sensor::pixels_to_width(PixelCount(n), pitch).cm();
        CHECK(std::abs(many - static_cast<double>(n) * one) <= 1e-14 * many);
    }
}

TEST_CASE("sensor image width matches the pinned projections") {
    CHECK(sensor::sensor_image_width(TransverseWidth(3.7617), 10.2308, 0.532)
              .cm() == 0.20633732008083472);
    CHECK(sensor::sensor_image_width(TransverseWidth(1.0), 1000.0, 0.5)
              .cm() == 0.0005002501250625312);
}

TEST_CASE("sensor projection scales like a pinhole at long range") {
    // far beyond the focal plane the image size approaches I*fc/d
    const double s =
        sensor::sensor_image_width(TransverseWidth(4.0), 1.0e6, 0.5).cm();
    const double pinhole = 4.0 * 0.5 / 1.0e6;
    CHECK(std::abs(s - pinhole) <= 1e-6 * pinhole + 1e-18);
}

TEST_CASE("sensor projection obeys the camera magnification relation") {
    SplitMix64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        const double width = rng.uniform(0.1, 50.0);
        const double fc = rng.uniform(0.1, 2.0);
        const double d = fc + rng.uniform(0.01, 500.0);
        const double s =
            sensor::sensor_image_width(TransverseWidth(width), d, fc).cm();
        // s / I must equal fc / (d - fc)
        const double lhs = s / width;
        const double rhs = fc / (d - fc);
        CHECK(std::abs(lhs - rhs) <= 1e-14 * rhs);
        // doubling the subject exactly doubles the image
        const double s2 =
            sensor::sensor_image_width(TransverseWidth(2.0 * width), d, fc)
                .cm();
        CHECK(s2 == 2.0 * s);
    }
}

TEST_CASE("degenerate sensor inputs throw typed errors") {
    CHECK_THROWS_AS(sensor::pixels_to_width(PixelCount(0), 1.7), ZeroWidth);
    CHECK_THROWS_AS(sensor::pixels_to_width(PixelCount(100), 0.0),
                    InvalidValue);
    CHECK_THROWS_AS(sensor::pixels_to_width(PixelCount(100), -1.7),
                    InvalidValue);
    CHECK_THROWS_AS(sensor::width_to_pixels(TransverseWidth(0.1), 0.0),
                    InvalidValue);
    CHECK_THROWS_AS(
        sensor::sensor_image_width(TransverseWidth(1.0), 0.5, 0.5),
        DegenerateGeometry);
    CHECK_THROWS_AS(
        sensor::sensor_image_width(TransverseWidth(1.0), 0.3, 0.5),
        DegenerateGeometry);
    CHECK_THROWS_AS(
        sensor::sensor_image_width(TransverseWidth(1.0), 10.0, 0.0),
        InvalidValue);
    // a width smaller than half a pixel legitimately rounds to zero pixels
    CHECK(sensor::width_to_pixels(TransverseWidth(1e-9), 1.7).count() == 0);
}
