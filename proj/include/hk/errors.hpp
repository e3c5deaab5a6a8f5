#pragma once

#include <stdexcept>
#include <string>

namespace hk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalars or matrices from different fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Shapes, sources or targets do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A sequence expected to compose to zero does not.
class NotAComplex : public Error {
 public:
  using Error::Error;
};

// A structure constant or other piece of presentation data is absent.
class MissingData : public Error {
 public:
  using Error::Error;
};

// A computation left the declared window (word length, dots, degrees, lattice size).
class WindowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hk
