#pragma once

#include <stdexcept>
#include <string>

namespace spreadmx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the offending location.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

/// Unknown node label or layer name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter or precondition violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace spreadmx
