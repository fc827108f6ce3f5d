#pragma once

#include <stdexcept>
#include <string>

namespace hornsat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed text encoding of an index, tuple or partition.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A partition does not fit the r x (n-r) rectangle.
class RectangleOverflow : public Error {
 public:
  using Error::Error;
};

/// Two cohomology classes live in different Grassmannians.
class RectangleMismatch : public Error {
 public:
  using Error::Error;
};

/// A partition is wider than the width bound of a saturation query.
class WidthOverflow : public Error {
 public:
  using Error::Error;
};

/// The Horn recursion was asked to go deeper than its configured bound.
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluations of an arithmetic identity disagreed.
/// Always an implementation bug.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

/// Random flags or a random kernel element did not behave generically.
/// Callers resample.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// No candidate maximal contradictor had intersection number one.
class CandidatesExhausted : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would be too large.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hornsat
