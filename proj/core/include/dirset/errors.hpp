#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dirset {

// Base class for every error raised by the library. Callers that only want
// a coarse success/failure split can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Two points closer than the coincidence threshold; their direction is
// numerically meaningless.
class CoincidentPoints : public Error {
 public:
  using Error::Error;
};

class TooFewPoints : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class BadTolerance : public Error {
 public:
  using Error::Error;
};

class UnsortedDomain : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class CoincidentBasePoints : public Error {
 public:
  using Error::Error;
};

// Invalid generator parameters; message names the offending field.
class BadSpec : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

// Point-cloud ingestion rejected an exact duplicate row.
class DuplicatePoints : public Error {
 public:
  using Error::Error;
};

// CSV/JSON parsing problems; message carries the row number where relevant.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A cloud is not the graph of a function over the requested direction.
// Carries the witness pair of point indices whose segment is (anti)parallel
// to the pole.
class NotAGraph : public Error {
 public:
  NotAGraph(const std::string& msg, std::size_t i, std::size_t j)
      : Error(msg), witness_i(i), witness_j(j) {}

  std::size_t witness_i;
  std::size_t witness_j;
};

// Violation of an internal postcondition (for example a cap report that
// fails its own emptiness check). Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dirset
