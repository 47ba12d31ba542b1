// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace virtlens {

/// Rounds to `decimals` decimal places, ties away from zero. This is the
/// rounding a hand calculation applies between pipeline stages.
double round_to_decimals(double x, int decimals);

/// Fixed-point decimal rendering with `decimals` digits after the point.
std::string format_fixed(double x, int decimals);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_shortest(double x);

}  // namespace virtlens
