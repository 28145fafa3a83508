#pragma once

#include <memory>
#include <span>
#include <vector>

#include "motmalin/agent/behavior.hpp"
#include "motmalin/agent/templates.hpp"

namespace motmalin::agent {

// Translates high-level actions into instructions a given body can perform.
// GameAct entries are skipped; the session forwards them as commands.
class Realizer {
 public:
  Realizer() : Realizer(default_templates()) {}
  explicit Realizer(std::shared_ptr<const TemplateSet> templates, SubstitutionTable substitutions = default_substitutions())
      : templates_(std::move(templates)), substitutions_(std::move(substitutions)) {}

  explicit Realizer(const BehaviorConfig& config) : Realizer(config.templates, config.substitutions) {}

  // Throws AgentError(UnknownTemplate).
  std::vector<Instruction> realize(std::span<const BehaviorAction> actions, const EmbodimentProfile& body) const;

 private:
  std::shared_ptr<const TemplateSet> templates_;
  SubstitutionTable substitutions_;
};

inline std::vector<Instruction> realize(std::span<const BehaviorAction> actions, const EmbodimentProfile& body) {
  return Realizer().realize(actions, body);
}

}  // namespace motmalin::agent
