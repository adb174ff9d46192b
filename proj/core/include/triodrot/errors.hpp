#pragma once

#include <stdexcept>
#include <string>

namespace triodrot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point operation received the branching point where a branch point was
// required.
class CenterPoint : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

// The three innermost points do not step cyclically through the branches.
class NoInnerRing : public Error {
 public:
  using Error::Error;
};

class BadRho : public Error {
 public:
  using Error::Error;
};

class OutsideHull : public Error {
 public:
  using Error::Error;
};

class NotATwist : public Error {
 public:
  using Error::Error;
};

class NoCycle : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Internal invariants are enforced unconditionally; exact arithmetic makes
// the checks cheap and a silent inconsistency would poison every verdict
// downstream.
#define TRIODROT_CHECK(cond, msg)                                     \
  do {                                                                \
    if (!(cond)) throw ::triodrot::Error(std::string("internal: ") + (msg)); \
  } while (0)

}  // namespace triodrot
