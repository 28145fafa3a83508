#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "motmalin/agent/templates.hpp"
#include "motmalin/assoc/clue_generator.hpp"

namespace motmalin::agent {

enum class HintStyle : std::uint8_t { Silent, PartialHint };

struct AgentProfile {
  std::string name = "agent";
  double proactivity = 1.0;           // chance of asking to speak when a good clue exists
  double confidence_threshold = 0.2;  // tau: clue total and per-axis confidence bar
  double intimacy_level = 0.5;        // chance of intimacy decorations / disclosures
  HintStyle hint_style = HintStyle::PartialHint;
  std::uint64_t rng_seed = 0;
  std::shared_ptr<const TemplateSet> templates = default_templates();
  assoc::ClueParams clue;
};

// Throws AgentError(BadProfile) on out-of-range values or missing templates.
void validate_profile(const AgentProfile& profile);

// Fields absent from the JSON keep their defaults.
AgentProfile profile_from_json(const nlohmann::json& j, std::shared_ptr<const TemplateSet> templates);
nlohmann::json profile_to_json(const AgentProfile& profile);

}  // namespace motmalin::agent
