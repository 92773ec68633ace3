#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace painleve {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// expr

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DegenerateSubstitution : public Error {
 public:
  using Error::Error;
};

class PoleAtPoint : public Error {
 public:
  using Error::Error;
};

/// Even root of a negative number during numeric evaluation.
class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

// parse

class ParseError : public Error {
 public:
  enum class Kind { SyntaxError, UnknownFunction, NonIntegerExponent };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : Error(describe(kind) + " at offset " + std::to_string(offset) + ": " +
              what),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

  static std::string describe(Kind kind) {
    switch (kind) {
      case Kind::SyntaxError:
        return "SyntaxError";
      case Kind::UnknownFunction:
        return "UnknownFunction";
      case Kind::NonIntegerExponent:
        return "NonIntegerExponent";
    }
    return "ParseError";
  }

 private:
  Kind kind_;
  std::size_t offset_;
};

class NotCubicInDerivative : public Error {
 public:
  using Error::Error;
};

// invariants / classify

class BothComponentsZero : public Error {
 public:
  using Error::Error;
};

class GammaUndefined : public Error {
 public:
  using Error::Error;
};

class SqrtOfNonPositive : public Error {
 public:
  using Error::Error;
};

// transform

class DegenerateMap : public Error {
 public:
  using Error::Error;
};

class BranchVerificationFailed : public Error {
 public:
  using Error::Error;
};

class SixthRootOfNegative : public Error {
 public:
  using Error::Error;
};

class AllSamplesSingular : public Error {
 public:
  using Error::Error;
};

}  // namespace painleve
