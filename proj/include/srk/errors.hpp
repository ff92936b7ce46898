#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srk {

enum class ErrorCode {
  BadArity,
  NotStrictlyIncreasing,
  OutOfBounds,
  PositionOutOfRange,
  SplitsIntoTwo,
  BadPrime,
  NoIsotropicRoom,
  NotDiagramRepresentable,
  NotSchubertDiagram,
  StructurallyInvalid,
  NotAdmissible,
  AlreadyTerminal,
  DepthExceeded,
  SyntaxError,
  InconsistentDigits,
  MarkerMisplaced,
  SearchBudgetExceeded,
  IoError,
  SchemaError,
  Internal,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::SplitsIntoTwo: return "SplitsIntoTwo";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NoIsotropicRoom: return "NoIsotropicRoom";
    case ErrorCode::NotDiagramRepresentable: return "NotDiagramRepresentable";
    case ErrorCode::NotSchubertDiagram: return "NotSchubertDiagram";
    case ErrorCode::StructurallyInvalid: return "StructurallyInvalid";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::AlreadyTerminal: return "AlreadyTerminal";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InconsistentDigits: return "InconsistentDigits";
    case ErrorCode::MarkerMisplaced: return "MarkerMisplaced";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Errors caused by bad user input, as opposed to engine failures.
inline bool is_validation_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadArity:
    case ErrorCode::NotStrictlyIncreasing:
    case ErrorCode::OutOfBounds:
    case ErrorCode::PositionOutOfRange:
    case ErrorCode::SplitsIntoTwo:
    case ErrorCode::BadPrime:
    case ErrorCode::NoIsotropicRoom:
    case ErrorCode::NotDiagramRepresentable:
    case ErrorCode::NotSchubertDiagram:
    case ErrorCode::StructurallyInvalid:
    case ErrorCode::NotAdmissible:
    case ErrorCode::AlreadyTerminal:
    case ErrorCode::SyntaxError:
    case ErrorCode::InconsistentDigits:
    case ErrorCode::MarkerMisplaced:
    case ErrorCode::SchemaError:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a_i = b_j + 1. Carries the two indices whose union the input denotes.
class SplitError : public Error {
 public:
  struct Part {
    std::vector<int> a;
    std::vector<int> b;
  };

  SplitError(int i, int j, Part first, Part second, const std::string& message)
      : Error(ErrorCode::SplitsIntoTwo, message),
        i_(i), j_(j), first_(std::move(first)), second_(std::move(second)) {}

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  const Part& first() const noexcept { return first_; }
  const Part& second() const noexcept { return second_; }

 private:
  int i_;
  int j_;
  Part first_;
  Part second_;
};

/// Raised by parsers; position is a 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace srk
