#pragma once

#include <stdexcept>
#include <string>

namespace fibsq {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request would materialize more letters than the configured cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A closed form or recursion produced an impossible value (e.g. a numerator
/// that should be a multiple of 5 is not). Signals a transcription bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fibsq
