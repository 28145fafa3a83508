#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "motmalin/game/errors.hpp"
#include "motmalin/game/state.hpp"

namespace motmalin::game {

struct Transition {
  GameState state;
  std::vector<GameEvent> events;
};

struct RuleViolation {
  RuleCode code;
  std::string detail;
};

// Shuffles the 16 cards with the seed and deals one card per seat.
// Throws RuleError(DuplicateGridWord | InvalidGridWord | BadSeatCount | InvalidSeat).
GameState new_game(const Grid& grid, std::span<const Seat> seats, std::uint64_t shuffle_seed);

// Seeded Fisher-Yates over the row-major cell list; the deal order of new_game.
std::vector<Coordinate> shuffled_deck(std::uint64_t shuffle_seed);

// Non-throwing legality check; nullopt means apply_command would accept.
std::optional<RuleViolation> check_command(const GameState& state, const Command& command);

// Pure transition. The emitted events are already appended to the returned
// state's history. Throws RuleError and leaves `state` untouched on rejection.
Transition apply_command(const GameState& state, const Command& command);
// Same, reusing `state`'s storage; `state` is only consumed when the command is accepted.
Transition apply_command(GameState&& state, const Command& command);

// Evolves a state by one event, checking that the event can follow it.
// Folding a game's history from GameState{} reproduces the game state.
// Throws RuleError.
GameState apply_event(GameState state, const GameEvent& event);

GameState fold_events(std::span<const GameEvent> events);

// Unanimous pick of the three guessers, if any. Throws RuleError(PhaseViolation)
// outside Guessing.
std::optional<Coordinate> check_agreement(const GameState& state);

// Commands a seat may issue right now. ProposeClue is a kind rather than an
// enumerable command; accepts() also validates the clue text.
struct LegalCommands {
  int seat = 0;
  bool request_speak = false;
  bool cancel_speak = false;
  bool propose_clue = false;
  bool confirm_resolution = false;
  std::vector<Coordinate> selectable;

  bool empty() const {
    return !request_speak && !cancel_speak && !propose_clue && !confirm_resolution && selectable.empty();
  }
  std::vector<CommandKind> kinds() const;
  bool accepts(const Command& command, const Grid& grid) const;
};

LegalCommands legal_commands(const GameState& state, int seat);

// Canonical serialization hashed with FNV-1a 64, as 16 hex digits.
std::string state_digest(const GameState& state);

}  // namespace motmalin::game
