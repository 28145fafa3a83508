#include "motmalin/agent/profile.hpp"

#include <cmath>

#include "motmalin/agent/errors.hpp"

namespace motmalin::agent {

namespace {

void check_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw AgentError(AgentCode::BadProfile, std::string(name) + " must be within [0, 1]");
  }
}

}  // namespace

void validate_profile(const AgentProfile& profile) {
  check_unit(profile.proactivity, "proactivity");
  check_unit(profile.intimacy_level, "intimacy_level");
  if (!std::isfinite(profile.confidence_threshold)) {
    throw AgentError(AgentCode::BadProfile, "confidence_threshold must be finite");
  }
  if (!profile.templates) throw AgentError(AgentCode::BadProfile, "no template set");
  if (const auto gaps = profile.templates->missing(required_template_keys()); !gaps.empty()) {
    throw AgentError(AgentCode::BadProfile, "missing template '" + gaps.front() + "'");
  }
  if (profile.clue.distractor_weight < 0.0) throw AgentError(AgentCode::BadProfile, "lambda must be >= 0");
}

AgentProfile profile_from_json(const nlohmann::json& j, std::shared_ptr<const TemplateSet> templates) {
  if (!j.is_object()) throw AgentError(AgentCode::BadProfile, "profile must be an object");
  AgentProfile p;
  if (templates) p.templates = std::move(templates);
  try {
    p.name = j.value("name", p.name);
    p.proactivity = j.value("proactivity", p.proactivity);
    p.confidence_threshold = j.value("confidence_threshold", p.confidence_threshold);
    p.intimacy_level = j.value("intimacy_level", p.intimacy_level);
    p.rng_seed = j.value("rng_seed", p.rng_seed);
    if (j.contains("hint_style")) {
      const auto style = j.at("hint_style").get<std::string>();
      if (style == "silent") {
        p.hint_style = HintStyle::Silent;
      } else if (style == "partial_hint") {
        p.hint_style = HintStyle::PartialHint;
      } else {
        throw AgentError(AgentCode::BadProfile, "unknown hint_style '" + style + "'");
      }
    }
    p.clue.pool_size = j.value("k", p.clue.pool_size);
    p.clue.distractor_weight = j.value("lambda", p.clue.distractor_weight);
    p.clue.beta = j.value("beta", p.clue.beta);
    p.clue.require_self_consistency = j.value("self_consistency", p.clue.require_self_consistency);
    if (j.contains("combine")) p.clue.combine = assoc::combine_from_string(j.at("combine").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw AgentError(AgentCode::BadProfile, e.what());
  } catch (const std::invalid_argument& e) {
    throw AgentError(AgentCode::BadProfile, e.what());
  }
  validate_profile(p);
  return p;
}

nlohmann::json profile_to_json(const AgentProfile& p) {
  return nlohmann::json{
      {"name", p.name},
      {"proactivity", p.proactivity},
      {"confidence_threshold", p.confidence_threshold},
      {"intimacy_level", p.intimacy_level},
      {"hint_style", p.hint_style == HintStyle::Silent ? "silent" : "partial_hint"},
      {"rng_seed", p.rng_seed},
      {"k", p.clue.pool_size},
      {"lambda", p.clue.distractor_weight},
      {"beta", p.clue.beta},
      {"combine", assoc::to_string(p.clue.combine)},
      {"self_consistency", p.clue.require_self_consistency},
  };
}

}  // namespace motmalin::agent
