#pragma once

#include <string_view>

#include "motmalin/error.hpp"

namespace motmalin::agent {

enum class AgentCode { UnknownTemplate, BadProfile, BadTemplateFile };

constexpr std::string_view to_string(AgentCode code) {
  switch (code) {
    case AgentCode::UnknownTemplate: return "UnknownTemplate";
    case AgentCode::BadProfile: return "BadProfile";
    case AgentCode::BadTemplateFile: return "BadTemplateFile";
  }
  return "Unknown";
}

using AgentError = CodedError<AgentCode>;

}  // namespace motmalin::agent
