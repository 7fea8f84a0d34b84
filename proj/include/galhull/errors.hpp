#ifndef GALHULL_ERRORS_HPP
#define GALHULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galhull {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-prime characteristic, reducible modulus, repeated locators, ...
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Two elements (or matrices, polynomials) from different field instances were combined.
class FieldMismatch : public Error {
  public:
    FieldMismatch() : Error("operands belong to different fields") {}
    using Error::Error;
};

/// The field was created without discrete-log tables and the operation needs them.
class CapabilityError : public Error {
  public:
    using Error::Error;
};

/// nth_root() was asked for a root that does not exist.
class NoRootError : public Error {
  public:
    using Error::Error;
};

/// A hypothesis of a construction does not hold. The message names the failed hypothesis.
class HypothesisError : public Error {
  public:
    using Error::Error;
};

/// An exhaustive computation would exceed its configured work limit.
class InstanceTooLarge : public Error {
  public:
    using Error::Error;
};

/// A mathematically impossible state was reached; always indicates a bug.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace galhull

#endif  // GALHULL_ERRORS_HPP
