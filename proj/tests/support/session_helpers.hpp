#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "motmalin/session/session.hpp"
#include "support/fixtures.hpp"

namespace motmalin::testing {

struct Frame {
  int seat;
  nlohmann::json message;
};

class RecordingSink final : public session::MessageSink {
 public:
  void deliver(int seat, const nlohmann::json& message) override { frames.push_back({seat, message}); }
  std::vector<Frame> frames;

  std::vector<Frame> to(int seat) const {
    std::vector<Frame> out;
    for (const auto& f : frames) {
      if (f.seat == seat) out.push_back(f);
    }
    return out;
  }
};

inline session::AgentSeat fixture_agent(int seat, agent::EmbodimentKind kind,
                                        std::shared_ptr<const assoc::EmbeddingStore> store, double intimacy = 0.5) {
  agent::AgentProfile profile;
  profile.name = "agent-" + std::to_string(seat);
  profile.intimacy_level = intimacy;
  profile.rng_seed = static_cast<std::uint64_t>(seat) + 1;
  const std::string tag = std::to_string(seat);
  return session::AgentSeat{seat, profile, agent::EmbodimentProfile{kind, "face-" + tag, "voice-" + tag},
                            std::move(store), agent::Realizer()};
}

// Fixture grid; humans everywhere except the given agent seats.
inline session::SessionSetup fixture_setup(std::uint64_t seed, const std::vector<int>& agent_seats = {},
                                           std::shared_ptr<const assoc::EmbeddingStore> store = nullptr) {
  session::SessionSetup setup;
  setup.id = "S1";
  setup.grid = fixture_grid();
  setup.seats = default_seats();
  setup.shuffle_seed = seed;
  if (!store) store = std::make_shared<const assoc::EmbeddingStore>(fixture_store());
  for (std::size_t i = 0; i < agent_seats.size(); ++i) {
    const int seat = agent_seats[i];
    setup.seats[seat] = game::Seat{seat, game::Occupant::Agent, "agent-" + std::to_string(seat)};
    setup.agents.push_back(fixture_agent(seat, i % 2 == 0 ? agent::EmbodimentKind::Eca : agent::EmbodimentKind::Robot,
                                         store));
  }
  return setup;
}

// First shuffle seed that deals `cell` to `seat`.
inline std::uint64_t seed_dealing(int seat, game::Coordinate cell) {
  for (std::uint64_t seed = 0;; ++seed) {
    if (game::shuffled_deck(seed)[static_cast<std::size_t>(seat)] == cell) return seed;
  }
}

inline nlohmann::json command_message(const nlohmann::json& body) { return {{"kind", "command"}, {"body", body}}; }

}  // namespace motmalin::testing
