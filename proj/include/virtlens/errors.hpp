// Copyright (c) 2026 The virtlens Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace virtlens {

/// Base class of every error thrown by this library. Degenerate inputs are
/// rejected with a typed error; no operation returns NaN or infinity.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A value failed its domain constraint (non-finite, wrong sign, ...).
class InvalidValue : public Error {
  public:
    using Error::Error;
};

/// Geometry with no finite solution, e.g. object at the focal point
/// (image at infinity) or an object at or inside the camera's focal plane.
class DegenerateGeometry : public Error {
  public:
    using Error::Error;
};

/// Magnification from which no focal length can be recovered (m = 0 or m = 1).
class DegenerateMagnification : public Error {
  public:
    using Error::Error;
};

/// Observation that carries no width information (equal widths, zero
/// displacement, equal pixel counts).
class DegenerateObservation : public Error {
  public:
    using Error::Error;
};

/// A zero pixel count: the sensor image has no measurable width.
class ZeroWidth : public Error {
  public:
    using Error::Error;
};

/// The configuration forms a real image where a virtual one is required.
class NotVirtual : public Error {
  public:
    using Error::Error;
};

/// The sign of an estimated focal length contradicts the declared lens kind.
class InconsistentKind : public Error {
  public:
    using Error::Error;
};

/// Too few rows for the requested statistic.
class InsufficientData : public Error {
  public:
    using Error::Error;
};

/// A file could not be opened or read.
class FileError : public Error {
  public:
    using Error::Error;
};

/// Session text rejected by the parser. Carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace virtlens
