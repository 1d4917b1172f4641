#include "ftloop/error.hpp"

namespace ftloop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::EmptyTops: return "EmptyTops";
    case ErrorCode::BadKooN: return "BadKooN";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RepairableUnsupported: return "RepairableUnsupported";
    case ErrorCode::TooManyLoopGates: return "TooManyLoopGates";
    case ErrorCode::TooManyBasics: return "TooManyBasics";
    case ErrorCode::IllegalRepair: return "IllegalRepair";
    case ErrorCode::UnknownBasic: return "UnknownBasic";
    case ErrorCode::UnknownGate: return "UnknownGate";
    case ErrorCode::BadAssignment: return "BadAssignment";
    case ErrorCode::MissingProbability: return "MissingProbability";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

namespace {

std::string render(ErrorCode code, const std::string& detail, std::size_t line,
                   std::size_t column) {
  std::string out;
  if (line > 0) {
    out += std::to_string(line) + ":" + std::to_string(column) + ": ";
  }
  out += to_string(code);
  out += ": ";
  out += detail;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string detail, std::string subject)
    : Error(code, std::move(detail), 0, 0, std::move(subject)) {}

Error::Error(ErrorCode code, std::string detail, std::size_t line, std::size_t column,
             std::string subject)
    : std::runtime_error(render(code, detail, line, column)),
      code_(code),
      detail_(std::move(detail)),
      subject_(std::move(subject)),
      line_(line),
      column_(column) {}

Error Error::at(std::size_t line, std::size_t column) const {
  return Error(code_, detail_, line, column, subject_);
}

}  // namespace ftloop
