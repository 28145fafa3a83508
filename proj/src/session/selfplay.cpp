#include "motmalin/session/selfplay.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "motmalin/game/random.hpp"
#include "motmalin/session/errors.hpp"
#include "motmalin/session/session.hpp"

namespace motmalin::session {

namespace {

constexpr std::int64_t kTickMs = 1000;
constexpr std::size_t kMaxTicks = 100000;

}  // namespace

GameReport play_game(const SessionConfig& config, const SessionResources& resources, std::uint64_t seed,
                     std::size_t stall_ticks) {
  SessionConfig game_config = config;
  game_config.shuffle_seed = seed;
  for (auto& a : game_config.agents) a.profile.rng_seed = game::mix_seed({a.profile.rng_seed, seed});

  ManualClock clock;
  MemoryLog log;
  NullSink sink;
  Session session(make_setup(game_config, resources), clock, log, sink);
  session.start();

  std::size_t idle = 0;
  for (std::size_t tick = 0; tick < kMaxTicks && !session.finished() && idle < stall_ticks; ++tick) {
    const auto before = session.accepted_commands();
    clock.advance(kTickMs);
    session.idle_tick();
    idle = session.accepted_commands() == before ? idle + 1 : 0;
  }

  const game::GameState state = session.state();
  GameReport report;
  report.seed = seed;
  report.completed = static_cast<int>(state.completed.size());
  report.rounds = state.resolved_count();
  report.finished = state.is_over();
  report.digest = game::state_digest(state);
  report.log = log.records();
  return report;
}

SelfPlayReport selfplay(const SessionConfig& config, const SessionResources& resources,
                        const SelfPlayOptions& options) {
  if (config.agents.size() != static_cast<std::size_t>(game::kSeatCount)) {
    throw SessionError(SessionCode::BadConfig, "self-play needs four agent seats");
  }
  if (!options.log_dir.empty()) std::filesystem::create_directories(options.log_dir);

  SelfPlayReport report;
  report.games = options.games;
  report.per_game.resize(options.games);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < options.games; i = next++) {
      GameReport game = play_game(config, resources, options.base_seed + i, options.stall_ticks);
      if (!options.log_dir.empty()) {
        const auto path = std::filesystem::path(options.log_dir) / ("selfplay_" + std::to_string(game.seed) + ".jsonl");
        std::ofstream out(path);
        for (const auto& record : game.log) out << format_record(record) << '\n';
      }
      if (!options.keep_logs) game.log.clear();
      report.per_game[i] = std::move(game);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(options.games)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  long completed = 0;
  long rounds = 0;
  for (const auto& game : report.per_game) {
    completed += game.completed;
    rounds += game.rounds;
  }
  report.success_rate = rounds == 0 ? 0.0 : static_cast<double>(completed) / static_cast<double>(rounds);
  report.mean_rounds = options.games == 0 ? 0.0 : static_cast<double>(rounds) / static_cast<double>(options.games);
  return report;
}

nlohmann::json report_to_json(const SelfPlayReport& report) {
  nlohmann::json games = nlohmann::json::array();
  for (const auto& game : report.per_game) {
    games.push_back({{"seed", game.seed},
                     {"completed", game.completed},
                     {"rounds", game.rounds},
                     {"finished", game.finished},
                     {"digest", game.digest}});
  }
  return {{"games", report.games},
          {"successRate", report.success_rate},
          {"meanRounds", report.mean_rounds},
          {"perGame", std::move(games)}};
}

}  // namespace motmalin::session
