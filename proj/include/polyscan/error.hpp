#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyscan {

enum class ErrorCode {
  InvalidPoint,
  ZeroLengthSegment,
  TooFewVertices,
  DuplicateConsecutiveVertex,
  DegenerateArea,
  IndexOutOfRange,
  NotACrossing,
  DegenerateInput,
  NonTermination,
  InsufficientData,
  InvalidSpec,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when two non-adjacent edges touch or overlap instead of crossing
// properly. Carries the offending pair in the polygon state at detection time.
class DegenerateInputError : public Error {
 public:
  DegenerateInputError(std::size_t edge_i, std::size_t edge_j);

  std::size_t edge_i() const noexcept { return edge_i_; }
  std::size_t edge_j() const noexcept { return edge_j_; }

 private:
  std::size_t edge_i_;
  std::size_t edge_j_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace polyscan
