#pragma once

#include <stdexcept>
#include <string>

namespace orthoplane {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A transform matrix is singular or otherwise unusable.
class InvalidTransformError : public Error {
 public:
  using Error::Error;
};

/// A plane with zero distance cannot induce a homography.
class DegeneratePlaneError : public Error {
 public:
  using Error::Error;
};

/// The constructed homography is (numerically) singular.
class DegenerateHomographyError : public Error {
 public:
  using Error::Error;
};

/// A plane residual pushed a sampled disparity or height out of range.
class InvalidResidualError : public Error {
 public:
  using Error::Error;
};

/// An operation that reduces over pixels received none.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Inputs that must share a shape do not.
class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

/// A file is not in the expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A configuration document violates the schema.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace orthoplane
