#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "motmalin/agent/behavior.hpp"

namespace motmalin::agent {

// Utterance templates: key -> text with {slot} placeholders.
class TemplateSet {
 public:
  TemplateSet() = default;
  explicit TemplateSet(std::map<std::string, std::string> templates, std::string language = "en")
      : templates_(std::move(templates)), language_(std::move(language)) {}

  bool has(std::string_view key) const { return templates_.find(std::string(key)) != templates_.end(); }
  const std::string& language() const noexcept { return language_; }

  // Throws AgentError(UnknownTemplate). Placeholders without a slot value are
  // left as written.
  std::string render(std::string_view key, const Slots& slots = {}) const;

  std::vector<std::string> missing(std::span<const std::string_view> keys) const;

 private:
  std::map<std::string, std::string> templates_;
  std::string language_ = "en";
};

// Keys that decide() and react() refer to.
std::span<const std::string_view> required_template_keys();

// Action substitutions applied when a body lacks a capability, by action name.
using SubstitutionTable = std::map<std::string, std::string, std::less<>>;

SubstitutionTable default_substitutions();

struct BehaviorConfig {
  std::shared_ptr<const TemplateSet> templates;
  SubstitutionTable substitutions;
};

// {"language": "fr", "templates": {...}, "substitutions": {...}}; templates
// must cover required_template_keys(). Throws AgentError(BadTemplateFile).
BehaviorConfig behavior_config_from_json(const nlohmann::json& j);
BehaviorConfig load_behavior_config(const std::string& path);

// Compiled-in English set used when no file is configured.
std::shared_ptr<const TemplateSet> default_templates();

}  // namespace motmalin::agent
