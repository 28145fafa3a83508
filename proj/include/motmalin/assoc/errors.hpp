#pragma once

#include <string_view>

#include "motmalin/error.hpp"

namespace motmalin::assoc {

enum class AssocCode {
  MissingFile,
  BadHeader,
  BadValue,
  DimMismatch,
  DuplicateWord,
  ZeroVector,
  WordOOV,
  TargetWordOOV,
  Timeout,
  BadResponse,
  Disabled,
};

constexpr std::string_view to_string(AssocCode code) {
  switch (code) {
    case AssocCode::MissingFile: return "MissingFile";
    case AssocCode::BadHeader: return "BadHeader";
    case AssocCode::BadValue: return "BadValue";
    case AssocCode::DimMismatch: return "DimMismatch";
    case AssocCode::DuplicateWord: return "DuplicateWord";
    case AssocCode::ZeroVector: return "ZeroVector";
    case AssocCode::WordOOV: return "WordOOV";
    case AssocCode::TargetWordOOV: return "TargetWordOOV";
    case AssocCode::Timeout: return "Timeout";
    case AssocCode::BadResponse: return "BadResponse";
    case AssocCode::Disabled: return "Disabled";
  }
  return "Unknown";
}

using AssocError = CodedError<AssocCode>;

}  // namespace motmalin::assoc
