#include "motmalin/session/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "motmalin/agent/errors.hpp"
#include "motmalin/assoc/errors.hpp"
#include "motmalin/game/codec.hpp"
#include "motmalin/game/errors.hpp"
#include "motmalin/game/random.hpp"
#include "motmalin/session/errors.hpp"

namespace motmalin::session {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& detail) { throw SessionError(SessionCode::BadConfig, detail); }

std::string resolve(const std::filesystem::path& base, const std::string& path) {
  if (path.empty()) return path;
  const std::filesystem::path p(path);
  return p.is_absolute() || base.empty() ? path : (base / p).string();
}

// Agent seats per condition. Two-agent tables put the agents opposite each
// other, in the positions the humans do not take.
std::vector<int> agent_seats_for(Condition condition) {
  switch (condition) {
    case Condition::HumansOnly: return {};
    case Condition::EcaPair:
    case Condition::RobotPair:
    case Condition::Hybrid: return {1, 3};
    case Condition::AgentsOnly: return {0, 1, 2, 3};
  }
  return {};
}

}  // namespace

std::string_view to_string(Condition condition) {
  switch (condition) {
    case Condition::HumansOnly: return "humans_only";
    case Condition::EcaPair: return "eca_pair";
    case Condition::RobotPair: return "robot_pair";
    case Condition::Hybrid: return "hybrid";
    case Condition::AgentsOnly: return "agents_only";
  }
  return "?";
}

Condition condition_from_string(std::string_view name) {
  for (auto c : {Condition::HumansOnly, Condition::EcaPair, Condition::RobotPair, Condition::Hybrid,
                 Condition::AgentsOnly}) {
    if (to_string(c) == name) return c;
  }
  bad_config("unknown condition '" + std::string(name) + "'");
}

game::Seats SessionConfig::seats() const {
  game::Seats seats;
  for (int i = 0; i < game::kSeatCount; ++i) seats[i] = game::Seat{i, game::Occupant::Human, {}};
  for (const auto& agent : agents) {
    seats[agent.seat] = game::Seat{agent.seat, game::Occupant::Agent, agent.profile.name};
  }
  return seats;
}

void validate_config(const SessionConfig& config) {
  const auto expected = agent_seats_for(config.condition);
  if (config.agents.size() != expected.size()) {
    bad_config(std::string(to_string(config.condition)) + " needs " + std::to_string(expected.size()) +
               " agents, got " + std::to_string(config.agents.size()));
  }
  std::set<int> seats;
  std::set<std::string> faces;
  std::set<std::string> voices;
  int ecas = 0;
  int robots = 0;
  for (const auto& agent : config.agents) {
    if (agent.seat < 0 || agent.seat >= game::kSeatCount || !seats.insert(agent.seat).second) {
      bad_config("agent seats must be distinct seats 0-3");
    }
    if (!faces.insert(agent.embodiment.face_id).second) bad_config("agents share face '" + agent.embodiment.face_id + "'");
    if (!voices.insert(agent.embodiment.voice_id).second) {
      bad_config("agents share voice '" + agent.embodiment.voice_id + "'");
    }
    (agent.embodiment.kind == agent::EmbodimentKind::Eca ? ecas : robots) += 1;
    try {
      agent::validate_profile(agent.profile);
    } catch (const agent::AgentError& e) {
      bad_config(e.what());
    }
  }
  switch (config.condition) {
    case Condition::EcaPair:
      if (ecas != 2) bad_config("eca_pair needs two eca bodies");
      break;
    case Condition::RobotPair:
      if (robots != 2) bad_config("robot_pair needs two robot bodies");
      break;
    case Condition::Hybrid:
      if (ecas != 1 || robots != 1) bad_config("hybrid needs one eca and one robot");
      break;
    default: break;
  }
}

SessionConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) bad_config("config must be a JSON object");
  SessionConfig config;
  agent::BehaviorConfig behavior{agent::default_templates(), agent::default_substitutions()};
  try {
    config.session_id = j.value("session", config.session_id);
    config.condition = condition_from_string(j.value("condition", std::string("humans_only")));
    config.grid_file = resolve(base_dir, j.value("grid_file", std::string()));
    config.embedding_file = resolve(base_dir, j.value("embedding_file", std::string()));
    config.behavior_file = resolve(base_dir, j.value("behavior_file", std::string()));
    config.shuffle_seed = j.value("shuffle_seed", std::uint64_t{0});
    config.log_path = resolve(base_dir, j.value("log_path", std::string()));
    if (!config.behavior_file.empty()) behavior = agent::load_behavior_config(config.behavior_file);

    const json agents = j.value("agents", json::array());
    if (!agents.is_array()) bad_config("'agents' must be an array");
    const auto seats = agent_seats_for(config.condition);
    if (agents.size() != seats.size()) {
      bad_config(std::string(to_string(config.condition)) + " needs " + std::to_string(seats.size()) +
                 " agents, got " + std::to_string(agents.size()));
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const json& a = agents[i];
      AgentSeatConfig agent;
      agent.seat = a.value("seat", seats[i]);
      agent.profile = agent::profile_from_json(a.value("profile", json::object()), behavior.templates);
      if (!a.contains("profile") || !a.at("profile").contains("name")) {
        agent.profile.name = "agent-" + std::to_string(agent.seat);
      }
      agent.embodiment.face_id = a.value("face", "face-" + std::to_string(i));
      agent.embodiment.voice_id = a.value("voice", "voice-" + std::to_string(i));
      agent.embedding_file = resolve(base_dir, a.value("embedding_file", std::string()));
      switch (config.condition) {
        case Condition::EcaPair: agent.embodiment.kind = agent::EmbodimentKind::Eca; break;
        case Condition::RobotPair: agent.embodiment.kind = agent::EmbodimentKind::Robot; break;
        case Condition::Hybrid:
          agent.embodiment.kind = i == 0 ? agent::EmbodimentKind::Eca : agent::EmbodimentKind::Robot;
          break;
        default:
          agent.embodiment.kind = agent::embodiment_kind_from_string(
              a.value("embodiment", std::string(i % 2 == 0 ? "eca" : "robot")));
          break;
      }
      config.agents.push_back(std::move(agent));
    }
  } catch (const json::exception& e) {
    bad_config(e.what());
  } catch (const agent::AgentError& e) {
    bad_config(e.what());
  } catch (const std::invalid_argument& e) {
    bad_config(e.what());
  }

  if (config.condition == Condition::Hybrid && config.agents.size() == 2) {
    // Which look and voice goes on which body is drawn per session.
    game::Rng rng(game::mix_seed({config.shuffle_seed, 0x66616365ull}));
    if (rng.below(2) == 1) {
      std::swap(config.agents[0].embodiment.face_id, config.agents[1].embodiment.face_id);
      std::swap(config.agents[0].embodiment.voice_id, config.agents[1].embodiment.voice_id);
    }
  }
  validate_config(config);
  return config;
}

SessionConfig load_session_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError(SessionCode::MissingFile, path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    bad_config(path + ": " + e.what());
  }
  return config_from_json(j, std::filesystem::path(path).parent_path());
}

game::Grid load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError(SessionCode::MissingFile, path);
  try {
    json j = json::parse(in);
    if (j.is_object() && j.contains("columnWords") && !j.contains("columns")) {
      j["columns"] = j["columnWords"];
      j["rows"] = j.value("rowWords", json());
    }
    return game::grid_from_json(j);
  } catch (const json::exception& e) {
    bad_config(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    bad_config(path + ": " + e.what());
  } catch (const game::RuleError& e) {
    bad_config(path + ": " + e.what());
  }
}

std::shared_ptr<const assoc::EmbeddingStore> SessionResources::store_for(const AgentSeatConfig& agent) const {
  if (agent.embedding_file.empty()) return store;
  return agent_stores.at(agent.embedding_file);
}

SessionResources load_resources(const SessionConfig& config) {
  auto load_store = [](const std::string& path) {
    try {
      return std::make_shared<const assoc::EmbeddingStore>(assoc::load_embeddings_file(path));
    } catch (const assoc::AssocError& e) {
      if (e.code() == assoc::AssocCode::MissingFile) throw SessionError(SessionCode::MissingFile, path);
      bad_config(path + ": " + e.what());
    }
  };

  SessionResources resources;
  if (config.grid_file.empty()) bad_config("no grid_file");
  resources.grid = load_grid_file(config.grid_file);
  if (!config.embedding_file.empty()) {
    resources.store = load_store(config.embedding_file);
  }
  for (const auto& agent : config.agents) {
    if (!agent.embedding_file.empty() && !resources.agent_stores.contains(agent.embedding_file)) {
      resources.agent_stores.emplace(agent.embedding_file, load_store(agent.embedding_file));
    }
    if (agent.embedding_file.empty() && !resources.store) bad_config("agents need an embedding_file");
  }
  resources.behavior = config.behavior_file.empty()
                           ? agent::BehaviorConfig{agent::default_templates(), agent::default_substitutions()}
                           : agent::load_behavior_config(config.behavior_file);
  return resources;
}

}  // namespace motmalin::session
