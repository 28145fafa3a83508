#include "motmalin/session/replay.hpp"

#include <algorithm>
#include <deque>

#include "motmalin/game/errors.hpp"
#include "motmalin/game/rules.hpp"
#include "motmalin/session/errors.hpp"

namespace motmalin::session {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::optional<game::Command> command_behind(const game::GameEvent& event) {
  return std::visit(
      overloaded{
          [](const game::ev::SpeakRequested& e) -> std::optional<game::Command> { return game::cmd::RequestSpeak{e.seat}; },
          [](const game::ev::SpeakCancelled& e) -> std::optional<game::Command> { return game::cmd::CancelSpeak{e.seat}; },
          [](const game::ev::ClueProposed& e) -> std::optional<game::Command> {
            return game::cmd::ProposeClue{e.seat, e.word};
          },
          [](const game::ev::CellSelected& e) -> std::optional<game::Command> {
            return game::cmd::SelectCell{e.seat, e.cell};
          },
          [](const game::ev::ResolutionAnnounced& e) -> std::optional<game::Command> {
            return game::cmd::ConfirmResolution{e.seat};
          },
          [](const auto&) -> std::optional<game::Command> { return std::nullopt; },
      },
      event);
}

}  // namespace

bool ReplayResult::digests_match() const {
  return std::all_of(digests.begin(), digests.end(), [](const DigestCheck& d) { return d.matches(); });
}

ReplayResult replay(std::span<const LogRecord> records) {
  ReplayResult result;
  std::deque<game::GameEvent> expected;  // derived events still owed by the current group
  std::string session;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const LogRecord& record = records[i];
    const std::size_t line = record.line ? record.line : i + 1;
    auto corrupt = [&](const std::string& what) -> SessionError {
      return SessionError(SessionCode::CorruptRecord, "line " + std::to_string(line) + ": " + what);
    };

    if (record.seq != i + 1) {
      throw SessionError(SessionCode::SeqGap, "line " + std::to_string(line) + ": expected seq " +
                                                  std::to_string(i + 1) + ", found " + std::to_string(record.seq));
    }
    if (i == 0) {
      session = record.session;
    } else if (record.session != session) {
      throw corrupt("session '" + record.session + "' in a log of '" + session + "'");
    }

    if (record.type == kCommandRejected || record.type == kAgentInstruction) continue;
    if (record.type == kStateDigest) {
      if (!record.payload.contains("digest") || !record.payload.at("digest").is_string()) {
        throw corrupt("digest record without a digest");
      }
      result.digests.push_back(
          {record.seq, record.payload.at("digest").get<std::string>(), game::state_digest(result.state)});
      continue;
    }

    game::GameEvent event;
    try {
      event = event_from_record(record);
    } catch (const std::exception& e) {
      throw corrupt(e.what());
    }

    try {
      if (const auto* started = std::get_if<game::ev::GameStarted>(&event)) {
        if (result.state.started) throw corrupt("second GameStarted");
        if (!started->shuffle_seed) throw corrupt("GameStarted without its shuffle seed");
        const game::GameState opening = game::new_game(started->grid, started->seats, *started->shuffle_seed);
        expected.assign(opening.history.begin() + 1, opening.history.end());
        result.state = game::apply_event(std::move(result.state), event);
      } else if (auto command = command_behind(event)) {
        if (!expected.empty()) {
          throw corrupt(std::string(game::event_name(event)) + " where " +
                        std::string(game::event_name(expected.front())) + " was due");
        }
        game::Transition t = game::apply_command(result.state, *command);
        if (t.events.front() != event) throw corrupt(std::string(game::event_name(event)) + " differs from the rules");
        result.state = game::apply_event(std::move(result.state), event);
        expected.assign(t.events.begin() + 1, t.events.end());
      } else {
        if (!result.state.started) throw corrupt(std::string(game::event_name(event)) + " before GameStarted");
        if (expected.empty()) throw corrupt("unexpected " + std::string(game::event_name(event)));
        if (expected.front() != event) {
          throw corrupt(std::string(game::event_name(event)) + " where " +
                        std::string(game::event_name(expected.front())) + " was due");
        }
        expected.pop_front();
        result.state = game::apply_event(std::move(result.state), event);
      }
    } catch (const game::RuleError& e) {
      throw corrupt(e.what());
    }
    ++result.event_count;
  }
  return result;
}

}  // namespace motmalin::session
