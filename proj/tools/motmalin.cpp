#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "motmalin/agent/errors.hpp"
#include "motmalin/assoc/clue_generator.hpp"
#include "motmalin/assoc/errors.hpp"
#include "motmalin/assoc/inference.hpp"
#include "motmalin/assoc/remote_backend.hpp"
#include "motmalin/game/errors.hpp"
#include "motmalin/game/rules.hpp"
#include "motmalin/session/errors.hpp"
#include "motmalin/session/replay.hpp"
#include "motmalin/session/selfplay.hpp"
#include "motmalin/session/server.hpp"

namespace mm = motmalin;
using mm::session::SessionCode;
using mm::session::SessionError;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kVerify = 3 };

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string embeddings;
  std::string grid;
  std::string log_dir;
};

void add_common(CLI::App* app, Common& common) {
  app->add_option("--config", common.config, "session config (JSON)");
  app->add_option("--seed", common.seed, "shuffle seed / base seed");
  app->add_option("--embeddings", common.embeddings, "word2vec text lexicon");
  app->add_option("--grid", common.grid, "grid file");
  app->add_option("--log-dir", common.log_dir, "directory for session logs");
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value && *value ? std::string(value) : fallback;
}

// A config from --config, or a four-agent table built from the flags.
mm::session::SessionConfig build_config(const Common& common, mm::session::Condition fallback) {
  mm::session::SessionConfig config;
  if (!common.config.empty()) {
    config = mm::session::load_session_config(common.config);
  } else {
    nlohmann::json j{{"condition", mm::session::to_string(fallback)}, {"agents", nlohmann::json::array()}};
    const std::size_t n = fallback == mm::session::Condition::AgentsOnly ? 4 : 0;
    for (std::size_t i = 0; i < n; ++i) {
      j["agents"].push_back({{"face", "face-" + std::to_string(i)},
                             {"voice", "voice-" + std::to_string(i)},
                             {"profile", {{"name", "agent-" + std::to_string(i)}, {"rng_seed", i}}}});
    }
    config = mm::session::config_from_json(j);
  }
  if (!common.grid.empty()) config.grid_file = common.grid;
  if (!common.embeddings.empty()) config.embedding_file = common.embeddings;
  if (common.seed) config.shuffle_seed = *common.seed;
  return config;
}

mm::game::Grid read_grid(const std::string& path) {
  if (path.empty()) throw SessionError(SessionCode::MissingFile, "no grid file given (--grid)");
  return mm::session::load_grid_file(path);
}

mm::assoc::EmbeddingStore read_store(const std::string& path) {
  if (path.empty()) throw SessionError(SessionCode::MissingFile, "no lexicon given (--embeddings)");
  return mm::assoc::load_embeddings_file(path);
}

mm::game::CellSet parse_cells(const std::vector<std::string>& names) {
  mm::game::CellSet cells;
  for (const auto& name : names) cells.insert(mm::game::parse_coordinate(name));
  return cells;
}

int run_solve(const Common& common, const std::string& clue, const std::string& combine, double beta,
              const std::vector<std::string>& completed) {
  const auto grid = read_grid(common.grid);
  const auto store = read_store(common.embeddings);
  const auto result = mm::assoc::infer_coordinates(store, clue, grid, parse_cells(completed),
                                                   mm::assoc::combine_from_string(combine), beta);
  if (result.oov) std::printf("OOV: '%s' is not in the lexicon, ranking is uniform\n", clue.c_str());
  for (const auto& cell : result.cells) {
    std::printf("%s %.5f %.5f\n", cell.cell.to_string().c_str(), cell.score, cell.probability);
  }
  return kOk;
}

int run_clue(const Common& common, const std::string& target, const std::vector<std::string>& completed,
             const mm::assoc::ClueParams& params, const std::string& endpoint) {
  const auto grid = read_grid(common.grid);
  const auto store = read_store(common.embeddings);
  mm::assoc::GeneratorBackend backend;
  if (!endpoint.empty()) {
    backend.kind = mm::assoc::GeneratorBackend::Kind::Remote;
    backend.remote = mm::assoc::RemoteConfig{endpoint};
  }
  const auto clue = mm::assoc::generate_clue_with_backend(store, grid, mm::game::parse_coordinate(target),
                                                         parse_cells(completed), params, backend);
  if (!clue) {
    std::printf("none\n");
    return kOk;
  }
  std::printf("%s %.5f %.5f %.5f%s\n", clue->candidate.word.c_str(), clue->candidate.total,
              clue->candidate.pair_score, clue->candidate.distractor_score, clue->from_remote ? " remote" : "");
  return kOk;
}

int run_selfplay(const Common& common, std::size_t games, unsigned workers, std::size_t stall_ticks) {
  auto config = build_config(common, mm::session::Condition::AgentsOnly);
  const auto resources = mm::session::load_resources(config);
  mm::session::SelfPlayOptions options;
  options.games = games;
  options.base_seed = common.seed.value_or(0);
  options.log_dir = env_or("MOTMALIN_LOG_DIR", common.log_dir);
  if (!common.log_dir.empty()) options.log_dir = common.log_dir;
  options.workers = workers;
  options.stall_ticks = stall_ticks;
  const auto report = mm::session::selfplay(config, resources, options);
  std::cout << mm::session::report_to_json(report).dump(2) << '\n';
  return kOk;
}

int run_serve(const Common& common, const std::string& address, std::optional<unsigned short> port, int idle_ms) {
  const auto config = build_config(common, mm::session::Condition::HumansOnly);
  mm::session::ServerOptions options;
  options.address = address;
  options.port = static_cast<unsigned short>(std::stoi(env_or("MOTMALIN_PORT", std::to_string(options.port))));
  if (port) options.port = *port;
  options.log_dir = env_or("MOTMALIN_LOG_DIR", "");
  if (!common.log_dir.empty()) options.log_dir = common.log_dir;
  options.idle_tick = std::chrono::milliseconds(idle_ms);
  mm::session::Server server(options);
  const std::string id = server.host(config);
  const unsigned short bound = server.start();
  std::printf("serving session %s on ws://%s:%u/\n", id.c_str(), options.address.c_str(), bound);
  std::fflush(stdout);
  server.wait();
  return kOk;
}

int run_replay_verify(const std::string& path) {
  const auto records = mm::session::read_log_file(path);
  const auto result = mm::session::replay(records);
  for (const auto& check : result.digests) {
    if (!check.matches()) {
      std::printf("DigestMismatch: seq %llu recorded %s replayed %s\n", static_cast<unsigned long long>(check.seq),
                  check.recorded.c_str(), check.replayed.c_str());
      return kVerify;
    }
  }
  std::printf("ok: %zu records, %zu events, phase %s, %d resolved, %d completed, digest %s\n", records.size(),
              result.event_count, std::string(mm::game::phase_name(result.state.phase)).c_str(),
              result.state.resolved_count(), result.state.completed.size(),
              mm::game::state_digest(result.state).c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mot Malin table server and tools"};
  app.require_subcommand(1);

  Common common;

  auto* serve = app.add_subcommand("serve", "host a session over WebSocket");
  add_common(serve, common);
  std::string address = "0.0.0.0";
  std::optional<unsigned short> port;
  int idle_ms = 2000;
  serve->add_option("--address", address, "bind address");
  serve->add_option("--port", port, "listen port (env MOTMALIN_PORT)");
  serve->add_option("--idle-ms", idle_ms, "agent idle tick in ms")->check(CLI::PositiveNumber);

  auto* selfplay = app.add_subcommand("selfplay", "headless agent-only games");
  add_common(selfplay, common);
  std::size_t games = 1;
  unsigned workers = 1;
  std::size_t stall_ticks = 64;
  selfplay->add_option("-n,--games", games, "number of games");
  selfplay->add_option("--workers", workers, "parallel games")->check(CLI::PositiveNumber);
  selfplay->add_option("--stall-ticks", stall_ticks, "idle ticks before a stuck game is abandoned");

  auto* solve = app.add_subcommand("solve", "rank the grid cells for a clue");
  add_common(solve, common);
  std::string clue;
  std::string combine = "min";
  double beta = mm::assoc::kDefaultBeta;
  std::vector<std::string> completed;
  solve->add_option("clue", clue, "clue word")->required();
  solve->add_option("--combine", combine, "min or mean");
  solve->add_option("--beta", beta, "softmax temperature");
  solve->add_option("--completed", completed, "cells to leave out")->delimiter(',');

  auto* clue_cmd = app.add_subcommand("clue", "generate a clue for a cell");
  add_common(clue_cmd, common);
  std::string target;
  mm::assoc::ClueParams params;
  std::string endpoint;
  bool no_gate = false;
  clue_cmd->add_option("cell", target, "target cell, e.g. B4")->required();
  clue_cmd->add_option("--completed", completed, "cells to leave out")->delimiter(',');
  clue_cmd->add_option("-k,--pool", params.pool_size, "neighbors per target word");
  clue_cmd->add_option("--lambda", params.distractor_weight, "distractor weight");
  clue_cmd->add_option("--beta", params.beta, "softmax temperature");
  clue_cmd->add_flag("--no-self-check", no_gate, "skip the self-consistency check");
  clue_cmd->add_option("--remote", endpoint, "remote association endpoint");

  auto* verify = app.add_subcommand("replay-verify", "check a session log by replaying it");
  std::string log_file;
  verify->add_option("log", log_file, "JSONL session log")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*serve) return run_serve(common, address, port, idle_ms);
    if (*selfplay) return run_selfplay(common, games, workers, stall_ticks);
    if (*solve) return run_solve(common, clue, combine, beta, completed);
    if (*clue_cmd) {
      params.require_self_consistency = !no_gate;
      return run_clue(common, target, completed, params, endpoint);
    }
    if (*verify) return run_replay_verify(log_file);
  } catch (const SessionError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    const bool verification = e.code() == SessionCode::SeqGap || e.code() == SessionCode::CorruptRecord;
    return verification ? kVerify : kData;
  } catch (const mm::assoc::AssocError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kData;
  } catch (const mm::game::RuleError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kData;
  } catch (const mm::agent::AgentError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kData;
  }
  return kUsage;
}
