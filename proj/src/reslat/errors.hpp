#pragma once

#include <stdexcept>
#include <string>

namespace reslat {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two sites passed as a bond are not nearest neighbors.
struct NotAdjacentError : Error {
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Parameter outside the documented range.
struct RangeError : Error {
  using Error::Error;
};

/// The same undirected bond appears twice in an edit list.
struct DuplicateBondError : Error {
  DuplicateBondError(const std::string& what, std::size_t index)
      : Error(what), edit_index(index) {}
  std::size_t edit_index;
};

/// Numerical quadrature failed to reach the requested tolerance.
struct ConvergenceFailure : Error {
  using Error::Error;
};

/// A finite network is not connected.
struct DisconnectedNetworkError : Error {
  using Error::Error;
};

/// Edit endpoints spill outside the truncation window.
struct WindowTooSmallError : Error {
  using Error::Error;
};

/// No removed bond is available to reconnect a component.
struct AugmentationImpossibleError : Error {
  using Error::Error;
};

/// Kirchhoff conservation violated beyond tolerance in a current map.
struct ConservationError : Error {
  using Error::Error;
};

}  // namespace reslat
