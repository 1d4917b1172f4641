#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ftloop {

enum class ErrorCode {
  DuplicateId,
  UnresolvedReference,
  EmptyTops,
  BadKooN,
  BadProbability,
  SyntaxError,
  NonMonotoneTime,
  CapExceeded,
  RepairableUnsupported,
  TooManyLoopGates,
  TooManyBasics,
  IllegalRepair,
  UnknownBasic,
  UnknownGate,
  BadAssignment,
  MissingProbability,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `what()` renders as
/// "<Code>: <detail>", prefixed with "line:col: " when a source position is
/// known, which is also what the CLI writes after "error: ".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, std::string subject = {});
  Error(ErrorCode code, std::string detail, std::size_t line, std::size_t column,
        std::string subject = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  // Identifier the error is about (offending id), empty when not applicable.
  const std::string& subject() const noexcept { return subject_; }
  // 1-based; 0 when no source position is attached.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

  Error at(std::size_t line, std::size_t column) const;

 private:
  ErrorCode code_;
  std::string detail_;
  std::string subject_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace ftloop
