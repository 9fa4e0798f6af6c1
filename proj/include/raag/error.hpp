#ifndef RAAG_ERROR_HPP_
#define RAAG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace raag {

// Every error raised by the library derives from raag::Error so callers can
// catch the whole family at one site (the CLI maps subclasses to exit codes).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& name)
      : Error("unknown vertex '" + name + "'") {}
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Raised by every operation that needs a connected, triangle-free graph with
// at least two edges.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

// Raised by operations whose formula or construction excludes star graphs.
class StarGraph : public Error {
 public:
  StarGraph() : Error("operation is undefined for star graphs") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class MismatchedGraphs : public Error {
 public:
  MismatchedGraphs() : Error("operands live over different graphs") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A constructive certificate that should exist could not be produced. Seeing
// one of these means either a bug or a counterexample to a structural claim.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace raag

#endif  // RAAG_ERROR_HPP_
