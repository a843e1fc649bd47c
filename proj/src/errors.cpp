#include "mlab/errors.hpp"

namespace mlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::NonBinaryCharacter: return "NonBinaryCharacter";
    case ErrorCode::WidthExceeded: return "WidthExceeded";
    case ErrorCode::MixedWidths: return "MixedWidths";
    case ErrorCode::Conflicts: return "Conflicts";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::ClassTooLarge: return "ClassTooLarge";
    case ErrorCode::NotSufficientInput: return "NotSufficientInput";
    case ErrorCode::SubsetSearchTooLarge: return "SubsetSearchTooLarge";
    case ErrorCode::ConflictingSample: return "ConflictingSample";
    case ErrorCode::WidthTooLargeForExtraction: return "WidthTooLargeForExtraction";
    case ErrorCode::BadShape: return "BadShape";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, std::string message, long long detail,
             std::vector<std::string> items)
    : std::runtime_error(std::move(message)),
      code_(code),
      detail_(detail),
      items_(std::move(items)) {}

}  // namespace mlab
