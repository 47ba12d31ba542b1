// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#include "virtlens/rounding.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "virtlens/errors.hpp"

namespace virtlens {

namespace {

double pow10i(int n) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
        p *= 10.0;
    }
    return p;
}

}  // namespace

double round_to_decimals(double x, int decimals) {
    if (!std::isfinite(x)) {
        throw InvalidValue("cannot round a non-finite value");
    }
    if (decimals < 0 || decimals > 15) {
        throw InvalidValue("decimals out of range");
    }
    const double scale = pow10i(decimals);
    return std::round(x * scale) / scale;
}

std::string format_fixed(double x, int decimals) {
    if (!std::isfinite(x)) {
        throw InvalidValue("cannot format a non-finite value");
    }
    if (decimals < 0 || decimals > 17) {
        throw InvalidValue("decimals out of range");
    }
    char buf[64];
    const int n = std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_shortest(double x) {
    if (!std::isfinite(x)) {
        throw InvalidValue("cannot format a non-finite value");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace virtlens
