#pragma once

#include <stdexcept>
#include <string>

namespace singindex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (shape, context, tag, range).
class RejectedInput : public Error {
 public:
  using Error::Error;
};

/// A basis computation produced a polynomial above the configured degree cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(unsigned cap, unsigned degree);
  unsigned cap() const noexcept { return cap_; }
  unsigned degree() const noexcept { return degree_; }

 private:
  unsigned cap_;
  unsigned degree_;
};

/// Randomised generic choices kept producing degenerate data.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// A quantity required to be finite was infinite (non-isolated singular point).
class NotIsolated : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug or inconsistent input
/// that theory rules out.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace singindex
