#pragma once

#include <stdexcept>
#include <string>

namespace transfersys {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural problem with a lattice: not a partial order, missing meet,
// bad automorphism, duplicate label, ...
class LatticeError : public Error {
 public:
  using Error::Error;
};

// Malformed interchange document (syntax, schema, unknown keys).
class FormatError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Arrow that does not belong to the lattice the tables were built for.
class ArrowError : public Error {
 public:
  using Error::Error;
};

class NotClosedError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class CrossCheckError : public Error {
 public:
  CrossCheckError(std::string check, const std::string& detail)
      : Error(check + ": " + detail), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace transfersys
