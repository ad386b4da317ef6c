#pragma once

#include <stdexcept>
#include <string>

namespace mav {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched dimensions, fields or matrix sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numerical convexity certificate failed.
class ConvexityError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not produce a trustworthy value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid user-facing configuration (specs, run configs).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mav
