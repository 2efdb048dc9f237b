#pragma once

#include <stdexcept>
#include <string>

namespace cvgraph {

/// Input outside the domain an operation supports (e.g. non-uniform
/// parameters where a closed form needs uniform ones).
class UnsupportedError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A numerical procedure failed to reach its postcondition.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Critical-temperature search found no sign change of the PT criterion.
class NoTransitionError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

} // namespace cvgraph
