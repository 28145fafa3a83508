#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motmalin/agent/behavior.hpp"
#include "motmalin/agent/profile.hpp"
#include "motmalin/agent/realizer.hpp"
#include "motmalin/assoc/embedding_store.hpp"
#include "motmalin/game/rules.hpp"
#include "motmalin/session/config.hpp"
#include "motmalin/session/log.hpp"

namespace motmalin::session {

class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now_ms() = 0;
};

// Monotonic milliseconds since construction.
class SteadyClock final : public Clock {
 public:
  SteadyClock() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t now_ms() override {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

class ManualClock final : public Clock {
 public:
  std::int64_t now_ms() override { return now_; }
  void advance(std::int64_t ms) { now_ += ms; }

 private:
  std::int64_t now_ = 0;
};

// Outbound frames, addressed by seat. Agent seats receive them too; the
// transport decides whether anyone is listening.
class MessageSink {
 public:
  virtual ~MessageSink() = default;
  virtual void deliver(int seat, const nlohmann::json& message) = 0;
};

class NullSink final : public MessageSink {
 public:
  void deliver(int, const nlohmann::json&) override {}
};

struct AgentSeat {
  int seat = 0;
  agent::AgentProfile profile;
  agent::EmbodimentProfile embodiment;
  std::shared_ptr<const assoc::EmbeddingStore> store;
  agent::Realizer realizer;
};

struct SessionSetup {
  std::string id = "S1";
  game::Grid grid;
  game::Seats seats;
  std::uint64_t shuffle_seed = 0;
  std::vector<AgentSeat> agents;
};

// Builds the setup for one game from a config and its loaded files.
SessionSetup make_setup(const SessionConfig& config, const SessionResources& resources);

// One table. All commands, whether from sockets or agents, pass through a
// single ordered queue under one lock; every accepted command is applied by
// the rules engine, logged, and broadcast before the next one is looked at.
class Session {
 public:
  Session(SessionSetup setup, Clock& clock, LogSink& log, MessageSink& sink);

  // Deals the cards, logs and broadcasts the opening events, ticks agents.
  void start();

  // Inbound ProtocolMessage from an authenticated seat. Errors go back to
  // that seat only and are logged.
  void handle_message(int sender_seat, const nlohmann::json& message);

  void submit(const game::Command& command);

  // Periodic poll so that agents who passed on an earlier tick can act.
  void idle_tick();

  nlohmann::json snapshot(int seat) const;

  game::GameState state() const;
  std::string digest() const;
  bool finished() const;
  std::uint64_t accepted_commands() const;
  std::uint64_t ticks() const;
  const std::string& id() const noexcept { return id_; }
  bool is_agent_seat(int seat) const;

 private:
  struct Pending {
    int seat;
    game::Command command;
  };

  void drain();
  void process(const Pending& pending);
  void publish(const std::vector<game::GameEvent>& events);
  void tick_agents();
  void emit_instructions(const AgentSeat& agent, const std::vector<agent::BehaviorAction>& actions);
  void reject(int seat, std::string_view code, const std::string& message, const nlohmann::json& command);
  void log(std::optional<int> actor, std::string type, nlohmann::json payload);
  void broadcast(const nlohmann::json& message);
  nlohmann::json snapshot_locked(int seat) const;

  mutable std::mutex mutex_;
  std::string id_;
  game::GameState state_;
  SessionSetup setup_;
  std::vector<AgentSeat> agents_;
  std::array<bool, game::kSeatCount> pending_seat_{};
  std::deque<Pending> queue_;
  Clock& clock_;
  LogSink& log_;
  MessageSink& sink_;
  std::uint64_t seq_ = 0;
  std::uint64_t accepted_ = 0;
  std::uint64_t tick_ = 0;
  bool started_ = false;
};

}  // namespace motmalin::session
