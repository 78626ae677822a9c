#pragma once

#include <stdexcept>
#include <string>

namespace cdg {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPermutation : Error {
  using Error::Error;
};

struct OrderCapExceeded : Error {
  using Error::Error;
};

/// A multiplication table failed one of the group axioms. The message
/// names the violated axiom and a witness.
struct NotAGroup : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct NoSuitablePrime : Error {
  using Error::Error;
};

/// A computed character table failed its own orthogonality self-check.
struct InternalInconsistency : Error {
  using Error::Error;
};

struct NonIntegerMultiplicity : Error {
  using Error::Error;
};

struct NonIntegralCodegree : Error {
  using Error::Error;
};

struct InvalidRecipe : Error {
  using Error::Error;
};

struct BacktrackBoundExceeded : Error {
  using Error::Error;
};

struct ArithmeticOverflow : Error {
  using Error::Error;
};

/// Group file syntax error, with 1-based line and column.
struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& message)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

}  // namespace cdg
