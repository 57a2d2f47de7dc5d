#pragma once

#include <stdexcept>
#include <string>

namespace mixalign {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A shape whose landmark layout cannot support an affine fit
// (fewer than 3 landmarks, collinear points, zero extent, ...).
struct DegenerateShape : Error {
  using Error::Error;
};

// An affine transform with zero determinant was asked to invert.
struct SingularTransform : Error {
  using Error::Error;
};

// A linear system (normal equations, KKT system) is rank deficient.
struct SingularSystem : Error {
  using Error::Error;
};

struct InvalidArg : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct InsufficientData : Error {
  using Error::Error;
};

// File parsing failed; messages carry "path:line:" prefixes where known.
struct ParseError : Error {
  using Error::Error;
};

struct MismatchedCount : ParseError {
  using ParseError::ParseError;
};

struct UnsupportedFormat : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Model container carries a format version this build does not read.
struct VersionMismatch : Error {
  using Error::Error;
};

// Model container is truncated, has a bad magic, or violates invariants.
struct CorruptModel : Error {
  using Error::Error;
};

}  // namespace mixalign
