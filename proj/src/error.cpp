#include "polyscan/error.hpp"

namespace polyscan {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::ZeroLengthSegment: return "ZeroLengthSegment";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::DuplicateConsecutiveVertex: return "DuplicateConsecutiveVertex";
    case ErrorCode::DegenerateArea: return "DegenerateArea";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotACrossing: return "NotACrossing";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

DegenerateInputError::DegenerateInputError(std::size_t edge_i, std::size_t edge_j)
    : Error(ErrorCode::DegenerateInput,
            "edges " + std::to_string(edge_i) + " and " + std::to_string(edge_j) +
                " touch or overlap without a proper crossing"),
      edge_i_(edge_i),
      edge_j_(edge_j) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

}  // namespace polyscan
