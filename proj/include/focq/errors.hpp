#pragma once

#include <stdexcept>
#include <string>

namespace focq {

// Base of every error the library throws. `code()` is a stable, machine-parsable
// identifier (the CLI prints it verbatim); `what()` carries the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& reason)
      : Error("SyntaxError", std::to_string(line) + ":" + std::to_string(col) + ": " + reason),
        line_(line),
        col_(col),
        reason_(reason) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  int col_;
  std::string reason_;
};

// Input is well-formed but lies outside the first-order subset
// (row variables, quoted terms, sentence-position variables, ...).
class UnsupportedConstruct : public Error {
 public:
  UnsupportedConstruct(int line, const std::string& construct)
      : Error("UnsupportedConstruct", std::to_string(line) + ": unsupported construct: " + construct),
        line_(line),
        construct_(construct) {}

  int line() const noexcept { return line_; }
  const std::string& construct() const noexcept { return construct_; }

 private:
  int line_;
  std::string construct_;
};

class MalformedLine : public Error {
 public:
  MalformedLine(const std::string& file, long line, const std::string& reason)
      : Error("MalformedLine", file + ":" + std::to_string(line) + ": " + reason), line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("IoError", message) {}
};

}  // namespace focq
