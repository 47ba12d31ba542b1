// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace virtlens {

/// SplitMix64: a tiny, fast, portable 64-bit generator. Chosen over
/// std::mt19937_64 so that streams are reproducible bit-for-bit across
/// standard libraries and platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform01();
    }

  private:
    std::uint64_t state_;
};

}  // namespace virtlens
