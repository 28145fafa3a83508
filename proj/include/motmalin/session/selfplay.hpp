#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "motmalin/session/config.hpp"
#include "motmalin/session/log.hpp"

namespace motmalin::session {

struct SelfPlayOptions {
  std::size_t games = 0;
  std::uint64_t base_seed = 0;
  std::string log_dir;           // one selfplay_<seed>.jsonl per game when set
  unsigned workers = 1;
  std::size_t stall_ticks = 64;  // idle ticks without progress before a game is abandoned
  bool keep_logs = false;        // keep each game's records in the report
};

struct GameReport {
  std::uint64_t seed = 0;
  int completed = 0;
  int rounds = 0;  // resolutions
  bool finished = false;
  std::string digest;
  std::vector<LogRecord> log;
};

struct SelfPlayReport {
  std::size_t games = 0;
  double success_rate = 0.0;  // completed cells / resolutions; 0 when nothing was resolved
  double mean_rounds = 0.0;
  std::vector<GameReport> per_game;  // sorted by seed
};

// One headless game with the config's four agents and the given shuffle seed.
GameReport play_game(const SessionConfig& config, const SessionResources& resources, std::uint64_t seed,
                     std::size_t stall_ticks = 64);

// Runs games with seeds base_seed .. base_seed + games - 1.
// Throws SessionError(BadConfig) unless the config seats four agents.
SelfPlayReport selfplay(const SessionConfig& config, const SessionResources& resources,
                        const SelfPlayOptions& options);

nlohmann::json report_to_json(const SelfPlayReport& report);

}  // namespace motmalin::session
