#include "motmalin/session/session.hpp"

#include <algorithm>

#include "motmalin/agent/errors.hpp"
#include "motmalin/agent/mind.hpp"
#include "motmalin/game/codec.hpp"
#include "motmalin/game/errors.hpp"
#include "motmalin/session/errors.hpp"

namespace motmalin::session {

using nlohmann::json;

SessionSetup make_setup(const SessionConfig& config, const SessionResources& resources) {
  SessionSetup setup;
  setup.id = config.session_id;
  setup.grid = resources.grid;
  setup.seats = config.seats();
  setup.shuffle_seed = config.shuffle_seed;
  for (const auto& a : config.agents) {
    setup.agents.push_back(AgentSeat{a.seat, a.profile, a.embodiment, resources.store_for(a),
                                     agent::Realizer(a.profile.templates, resources.behavior.substitutions)});
  }
  return setup;
}

Session::Session(SessionSetup setup, Clock& clock, LogSink& log, MessageSink& sink)
    : id_(setup.id), setup_(std::move(setup)), clock_(clock), log_(log), sink_(sink) {
  agents_ = setup_.agents;
  std::sort(agents_.begin(), agents_.end(), [](const AgentSeat& a, const AgentSeat& b) { return a.seat < b.seat; });
}

void Session::start() {
  std::lock_guard lock(mutex_);
  if (started_) return;
  started_ = true;
  state_ = game::new_game(setup_.grid, setup_.seats, setup_.shuffle_seed);
  publish(state_.history);
  tick_agents();
  drain();
}

void Session::handle_message(int sender_seat, const json& message) {
  std::lock_guard lock(mutex_);
  if (!message.is_object() || message.value("kind", std::string()) != "command" || !message.contains("body") ||
      !message.at("body").is_object()) {
    reject(sender_seat, "Malformed", "expected {\"kind\":\"command\",\"body\":{...}}", message);
    return;
  }
  const json& body = message.at("body");
  if (message.contains("seat") &&
      !(message.at("seat").is_number_integer() && message.at("seat").get<int>() == sender_seat)) {
    reject(sender_seat, "NotYourSeat", "commands act for the sender's own seat", body);
    return;
  }
  if (body.contains("seat") && !(body.at("seat").is_number_integer() && body.at("seat").get<int>() == sender_seat)) {
    reject(sender_seat, "NotYourSeat", "commands act for the sender's own seat", body);
    return;
  }
  game::Command command;
  try {
    command = game::command_from_json(sender_seat, body);
  } catch (const std::exception& e) {
    reject(sender_seat, "Malformed", e.what(), body);
    return;
  }
  queue_.push_back({sender_seat, std::move(command)});
  drain();
}

void Session::submit(const game::Command& command) {
  std::lock_guard lock(mutex_);
  queue_.push_back({game::seat_of(command), command});
  drain();
}

void Session::idle_tick() {
  std::lock_guard lock(mutex_);
  if (!started_) return;
  ++tick_;
  tick_agents();
  drain();
}

json Session::snapshot(int seat) const {
  std::lock_guard lock(mutex_);
  return snapshot_locked(seat);
}

game::GameState Session::state() const {
  std::lock_guard lock(mutex_);
  return state_;
}

std::string Session::digest() const {
  std::lock_guard lock(mutex_);
  return game::state_digest(state_);
}

bool Session::finished() const {
  std::lock_guard lock(mutex_);
  return state_.is_over();
}

std::uint64_t Session::accepted_commands() const {
  std::lock_guard lock(mutex_);
  return accepted_;
}

std::uint64_t Session::ticks() const {
  std::lock_guard lock(mutex_);
  return tick_;
}

bool Session::is_agent_seat(int seat) const {
  return std::any_of(agents_.begin(), agents_.end(), [seat](const AgentSeat& a) { return a.seat == seat; });
}

void Session::drain() {
  while (!queue_.empty()) {
    const Pending pending = std::move(queue_.front());
    queue_.pop_front();
    pending_seat_[pending.seat] = false;
    process(pending);
  }
}

void Session::process(const Pending& pending) {
  if (!started_) {
    reject(pending.seat, "PhaseViolation", "game not started", game::command_body_to_json(pending.command));
    return;
  }
  if (auto violation = game::check_command(state_, pending.command)) {
    reject(pending.seat, game::to_string(violation->code), violation->detail,
           game::command_body_to_json(pending.command));
    return;
  }
  game::Transition t = game::apply_command(state_, pending.command);
  state_ = std::move(t.state);
  ++accepted_;
  publish(t.events);
  if (state_.is_over()) log(std::nullopt, kStateDigest, {{"digest", game::state_digest(state_)}});

  for (const auto& event : t.events) {
    if (const auto* outcome = std::get_if<game::ev::ResolutionAnnounced>(&event)) {
      for (const auto& a : agents_) {
        emit_instructions(a, agent::react(a.profile, *outcome, game::view_for(state_, a.seat, tick_)));
      }
    }
  }
  tick_agents();
}

void Session::publish(const std::vector<game::GameEvent>& events) {
  for (const auto& event : events) {
    LogRecord record = record_for_event(event);
    record.seq = ++seq_;
    record.ts = clock_.now_ms();
    record.session = id_;
    log_.append(record);

    const json public_body = game::event_to_json(game::public_projection(event));
    const auto* dealt = std::get_if<game::ev::CardDealt>(&event);
    for (int seat = 0; seat < game::kSeatCount; ++seat) {
      const bool owner = dealt && dealt->seat == seat;
      sink_.deliver(seat, json{{"kind", "event"},
                               {"session", id_},
                               {"seq", record.seq},
                               {"body", owner ? game::event_to_json(event) : public_body}});
    }
  }
}

void Session::tick_agents() {
  if (!started_ || state_.is_over() || agents_.empty()) return;
  // Decisions are taken on the same view; later ones are dropped when an
  // earlier agent's command already made them impossible.
  game::GameState scratch = state_;
  const std::size_t n = agents_.size();
  const std::size_t first = state_.history.size() % n;
  for (std::size_t k = 0; k < n; ++k) {
    const AgentSeat& a = agents_[(first + k) % n];
    if (pending_seat_[a.seat]) continue;
    auto actions = agent::decide(a.profile, a.embodiment, game::view_for(state_, a.seat, tick_), *a.store);
    if (actions.empty()) continue;
    std::optional<game::Command> command;
    for (const auto& action : actions) {
      if (const auto* g = std::get_if<agent::act::GameAct>(&action)) command = g->command;
    }
    if (command) {
      if (game::check_command(scratch, *command)) continue;
      scratch = game::apply_command(scratch, *command).state;
      queue_.push_back({a.seat, *command});
      pending_seat_[a.seat] = true;
    }
    emit_instructions(a, actions);
  }
}

void Session::emit_instructions(const AgentSeat& a, const std::vector<agent::BehaviorAction>& actions) {
  std::vector<agent::Instruction> instructions;
  try {
    instructions = a.realizer.realize(actions, a.embodiment);
  } catch (const agent::AgentError&) {
    return;
  }
  if (instructions.empty()) return;
  json list = json::array();
  for (const auto& instruction : instructions) list.push_back(agent::instruction_to_json(instruction));
  log(a.seat, kAgentInstruction, {{"instructions", list}});
  broadcast(json{{"kind", "instruction"}, {"session", id_}, {"seat", a.seat}, {"body", std::move(list)}});
}

void Session::reject(int seat, std::string_view code, const std::string& message, const json& command) {
  json body{{"code", code}, {"message", message}};
  log(seat >= 0 && seat < game::kSeatCount ? std::optional<int>(seat) : std::nullopt, kCommandRejected,
      {{"code", code}, {"message", message}, {"command", command}});
  if (seat >= 0 && seat < game::kSeatCount) sink_.deliver(seat, json{{"kind", "error"}, {"session", id_}, {"body", body}});
}

void Session::log(std::optional<int> actor, std::string type, json payload) {
  LogRecord record;
  record.seq = ++seq_;
  record.ts = clock_.now_ms();
  record.session = id_;
  record.actor = actor;
  record.type = std::move(type);
  record.payload = std::move(payload);
  log_.append(record);
}

void Session::broadcast(const json& message) {
  for (int seat = 0; seat < game::kSeatCount; ++seat) sink_.deliver(seat, message);
}

json Session::snapshot_locked(int seat) const {
  json body = game::view_to_json(game::view_for(state_, seat, tick_));
  const auto legal = game::legal_commands(state_, seat);
  json kinds = json::array();
  for (auto kind : legal.kinds()) kinds.push_back(game::to_string(kind));
  json selectable = json::array();
  for (const auto& cell : legal.selectable) selectable.push_back(cell.to_string());
  body["legal"] = std::move(kinds);
  body["selectable"] = std::move(selectable);
  body["session"] = id_;
  body["agent"] = is_agent_seat(seat);
  return json{{"kind", "state_snapshot"}, {"session", id_}, {"body", std::move(body)}};
}

}  // namespace motmalin::session
