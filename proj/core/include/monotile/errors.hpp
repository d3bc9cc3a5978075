#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monotile {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Precondition on a value was violated (negative sqrt, parameter out of
/// range, non-unit direction, zero vector, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DegeneratePolygon : public Error {
 public:
  DegeneratePolygon() : Error("degenerate polygon") {}
};

/// Geometry outside what the exact 30-degree model supports.
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public Error {
 public:
  enum class Kind { kBadIndex, kDuplicateKite, kOverlap, kDisconnectedBoundary, kOpenChain };

  AssemblyError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace monotile
