#ifndef OPERAD_ERROR_HPP
#define OPERAD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace operad {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax errors in the identity language. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// An identity whose terms all cancel.
class EmptyIdentityError : public Error {
 public:
  using Error::Error;
};

}  // namespace operad

#endif  // OPERAD_ERROR_HPP
