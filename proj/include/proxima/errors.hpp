#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proxima {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an API contract: mismatched spaces, out-of-range parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A point handed to a map lies in neither region (or misses the table).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A point lies in both regions and the two rules disagree on its image.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

/// An orbit left Omega ∪ Delta, or failed to alternate sides.
class CyclicityError : public Error {
 public:
  CyclicityError(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Inputs to a checker do not satisfy the hypotheses of the inequality.
/// Distinct from the inequality itself being false.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace proxima
