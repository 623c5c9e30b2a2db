#pragma once

#include <stdexcept>
#include <string>

namespace cavity {

// Precondition violated by a caller-supplied value.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Valid input outside the configurations the models are defined for
// (odd N in the two-cavity recursion, detuned Rabi dynamics, ...).
class UnsupportedConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative or recursive numerical procedure could not finish.
// `index()` is the eigenvalue index or recursion depth where it stopped.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, int index)
      : std::runtime_error(what), index_(index) {}

  int index() const noexcept { return index_; }

 private:
  int index_;
};

// The resolvent recursion hit a (near) pole at depth `index()`; move z
// further away from the real axis.
class NearPoleError : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace cavity
