#ifndef NCREG_ERRORS_HPP
#define NCREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncreg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid input text (presentation / module files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", col " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// A request exceeded the certified degree / homological window.
class WindowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncreg

#endif
