#ifndef UFACT_ERROR_HPP
#define UFACT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ufact {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied or configured size guard was hit. Never a silent truncation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (wrong universe, invalid decomposition, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ufact

#endif  // UFACT_ERROR_HPP
