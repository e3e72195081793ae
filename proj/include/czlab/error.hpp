#pragma once

#include <stdexcept>
#include <string>

namespace czlab {

/// Argument outside the mathematical domain of an operation (e.g. delta <= 0).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dyadic index that does not name a cube of the grid.
class InvalidCube : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Grid functions that should share a grid do not.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A fit or estimate was requested on too few usable points.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or configuration.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace czlab
