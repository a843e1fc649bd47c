#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mlab {

enum class ErrorCode {
  EmptyPattern,
  NonBinaryCharacter,
  WidthExceeded,
  MixedWidths,
  Conflicts,
  MalformedRecord,
  SyntaxError,
  VariableOutOfRange,
  WidthMismatch,
  ClassTooLarge,
  NotSufficientInput,
  SubsetSearchTooLarge,
  ConflictingSample,
  WidthTooLargeForExtraction,
  BadShape,
};

const char* error_code_name(ErrorCode code);

/// Domain error. `detail` carries the 1-based position, line number or
/// variable index where that applies; `items` carries offending patterns
/// (conflict reports).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, long long detail = -1,
        std::vector<std::string> items = {});

  ErrorCode code() const noexcept { return code_; }
  long long detail() const noexcept { return detail_; }
  const std::vector<std::string>& items() const noexcept { return items_; }

 private:
  ErrorCode code_;
  long long detail_;
  std::vector<std::string> items_;
};

}  // namespace mlab
