#pragma once

#include <stdexcept>
#include <string>

namespace swnet {

// Error categories mirror the status codes of the C API (swnet.h).
enum class ErrorCode {
  invalid_argument = 1,
  io = 2,
  parse = 3,
  domain = 4,
  corpus = 5,
  evaluation = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace swnet
