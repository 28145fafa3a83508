#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motmalin/agent/behavior.hpp"
#include "motmalin/agent/profile.hpp"
#include "motmalin/agent/templates.hpp"
#include "motmalin/assoc/embedding_store.hpp"
#include "motmalin/game/grid.hpp"
#include "motmalin/game/state.hpp"

namespace motmalin::session {

// Table compositions. agents_only seats four agents and exists for self-play.
enum class Condition { HumansOnly, EcaPair, RobotPair, Hybrid, AgentsOnly };

std::string_view to_string(Condition condition);
Condition condition_from_string(std::string_view name);  // throws SessionError(BadConfig)

struct AgentSeatConfig {
  int seat = 0;
  agent::AgentProfile profile;
  agent::EmbodimentProfile embodiment;
  std::string embedding_file;  // empty: the session's lexicon
};

struct SessionConfig {
  std::string session_id = "S1";
  Condition condition = Condition::HumansOnly;
  std::string grid_file;
  std::string embedding_file;
  std::string behavior_file;  // templates + substitutions; empty: compiled-in English
  std::uint64_t shuffle_seed = 0;
  std::string log_path;
  std::vector<AgentSeatConfig> agents;

  game::Seats seats() const;
};

// Parses the JSON config, resolving relative paths against base_dir and
// assigning seats and bodies from the condition. For hybrid tables the two
// face/voice identities are dealt to the bodies by the shuffle seed.
// Throws SessionError(BadConfig | MissingFile).
SessionConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
SessionConfig load_session_config(const std::string& path);

// Checks the condition invariants. Throws SessionError(BadConfig).
void validate_config(const SessionConfig& config);

// {"columns": [...], "rows": [...]}. Throws SessionError(MissingFile | BadConfig).
game::Grid load_grid_file(const std::string& path);

// Files referenced by a config, loaded once and shared read-only.
struct SessionResources {
  game::Grid grid;
  std::shared_ptr<const assoc::EmbeddingStore> store;
  std::map<std::string, std::shared_ptr<const assoc::EmbeddingStore>> agent_stores;  // by seat-config file
  agent::BehaviorConfig behavior;

  std::shared_ptr<const assoc::EmbeddingStore> store_for(const AgentSeatConfig& agent) const;
};

// Throws SessionError(MissingFile | BadConfig).
SessionResources load_resources(const SessionConfig& config);

}  // namespace motmalin::session
