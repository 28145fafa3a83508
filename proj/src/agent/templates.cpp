#include "motmalin/agent/templates.hpp"

#include <array>
#include <fstream>

#include "motmalin/agent/errors.hpp"

namespace motmalin::agent {

namespace {

constexpr std::array<std::string_view, 6> kRequiredKeys = {
    "celebrate", "disclose_weakness", "partial_hint", "reference_previous", "axis_column", "axis_row",
};

}  // namespace

std::string TemplateSet::render(std::string_view key, const Slots& slots) const {
  const auto it = templates_.find(std::string(key));
  if (it == templates_.end()) throw AgentError(AgentCode::UnknownTemplate, std::string(key));
  const std::string& text = it->second;

  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '{') {
      const auto close = text.find('}', i + 1);
      if (close != std::string::npos) {
        const auto slot = slots.find(text.substr(i + 1, close - i - 1));
        if (slot != slots.end()) {
          out += slot->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += text[i++];
  }
  return out;
}

std::vector<std::string> TemplateSet::missing(std::span<const std::string_view> keys) const {
  std::vector<std::string> out;
  for (auto key : keys) {
    if (!has(key)) out.emplace_back(key);
  }
  return out;
}

std::span<const std::string_view> required_template_keys() { return kRequiredKeys; }

SubstitutionTable default_substitutions() { return {{"OpenHandGesture", "HeadNod"}}; }

BehaviorConfig behavior_config_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("templates") || !j.at("templates").is_object()) {
    throw AgentError(AgentCode::BadTemplateFile, "expected an object with a 'templates' object");
  }
  std::map<std::string, std::string> entries;
  for (const auto& [key, value] : j.at("templates").items()) {
    if (!value.is_string()) throw AgentError(AgentCode::BadTemplateFile, "template '" + key + "' is not a string");
    entries.emplace(key, value.get<std::string>());
  }
  auto templates = std::make_shared<TemplateSet>(std::move(entries), j.value("language", std::string("en")));
  if (const auto gaps = templates->missing(required_template_keys()); !gaps.empty()) {
    throw AgentError(AgentCode::BadTemplateFile, "missing template '" + gaps.front() + "'");
  }

  BehaviorConfig config{std::move(templates), default_substitutions()};
  if (j.contains("substitutions")) {
    const auto& subs = j.at("substitutions");
    if (!subs.is_object()) throw AgentError(AgentCode::BadTemplateFile, "'substitutions' must be an object");
    config.substitutions.clear();
    for (const auto& [from, to] : subs.items()) {
      if (!to.is_string() || !simple_action_from_name(from) || !simple_action_from_name(to.get<std::string>())) {
        throw AgentError(AgentCode::BadTemplateFile, "bad substitution '" + from + "'");
      }
      config.substitutions.emplace(from, to.get<std::string>());
    }
  }
  return config;
}

BehaviorConfig load_behavior_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AgentError(AgentCode::BadTemplateFile, "cannot open " + path);
  try {
    return behavior_config_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw AgentError(AgentCode::BadTemplateFile, path + ": " + e.what());
  }
}

std::shared_ptr<const TemplateSet> default_templates() {
  static const auto templates = std::make_shared<const TemplateSet>(
      std::map<std::string, std::string>{
          {"celebrate", "Yes, we found it!"},
          {"disclose_weakness", "Sorry, I'm not very good at this kind of association."},
          {"partial_hint", "I think {clue} is for sure related to {sure_word}, but I am not sure about the {unsure_axis}..."},
          {"reference_previous", "That reminds me of {word}, from earlier."},
          {"axis_column", "column"},
          {"axis_row", "row"},
      },
      "en");
  return templates;
}

}  // namespace motmalin::agent
