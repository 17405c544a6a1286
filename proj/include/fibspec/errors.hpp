#pragma once

#include <stdexcept>
#include <string>

namespace fibspec {

// Invalid inputs are reported with std::invalid_argument. The two types below
// cover failures that happen on valid input.

/// A numerical procedure could not certify its result (band isolation,
/// eigenvalue separation, periodicity detection).
class NumericFailure : public std::runtime_error {
 public:
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

/// An operation would exceed one of the fixed desk-scale size caps.
class SizeCapExceeded : public std::length_error {
 public:
  explicit SizeCapExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace fibspec
