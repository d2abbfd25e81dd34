#pragma once

#include <stdexcept>
#include <string>

namespace sric {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two elements from algebras with different generator counts were combined.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An operation required a definite grade parity the argument does not have.
class GradingError : public Error {
public:
  using Error::Error;
};

/// Inversion of an element with zero body.
class NonInvertibleError : public Error {
public:
  using Error::Error;
};

/// An element left the 5-blade superfield subspace (or its reality slice).
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Expression source text could not be parsed. `offset` is the byte position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

/// Evaluation produced a non-finite value or hit a function domain boundary.
/// `where` is the time at which evaluation failed, when known.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what, double where = 0.0)
      : Error(what), where(where) {}
  double where;
};

/// The state norm blew up (movable singularity) or a pole/node was reached.
/// `where` locates the event in time.
class SingularityError : public Error {
public:
  SingularityError(const std::string& what, double where)
      : Error(what + " near t = " + std::to_string(where)), where(where) {}
  double where;
};

/// Adaptive step control could not meet the tolerance above the minimum step.
class StiffnessError : public Error {
public:
  StiffnessError(const std::string& what, double where)
      : Error(what + " near t = " + std::to_string(where)), where(where) {}
  double where;
};

/// A run configuration or operation precondition failed validation.
class ValidationError : public Error {
public:
  using Error::Error;
};

}  // namespace sric
