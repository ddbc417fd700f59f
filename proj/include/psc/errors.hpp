#pragma once

#include <stdexcept>
#include <string>

namespace psc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Permutations of different degrees were mixed.
class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

// A malformed group spec, cycle word, or file.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line = 0) : Error(format(msg, line)), line_(line) {}
  int line() const { return line_; }

private:
  static std::string format(const std::string& msg, int line) {
    if (line <= 0) return msg;
    return "line " + std::to_string(line) + ": " + msg;
  }
  int line_ = 0;
};

class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

// A subgroup operation was asked across incompatible groups.
class ContainmentError : public Error {
public:
  using Error::Error;
};

// The requested computation exceeds a configured exactness bound.
class CapacityError : public Error {
public:
  using Error::Error;
};

// An action map that is not an automorphism of the normal factor.
class InvalidActionError : public Error {
public:
  using Error::Error;
};

}  // namespace psc
