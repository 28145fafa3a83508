#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "motmalin/game/coordinate.hpp"
#include "motmalin/game/grid.hpp"

namespace motmalin::game {

inline constexpr int kSeatCount = 4;

enum class Color : std::uint8_t { Red, Blue, Green, Yellow };

constexpr Color color_of_seat(int seat) { return static_cast<Color>(seat); }
std::string_view to_string(Color color);

enum class Occupant : std::uint8_t { Human, Agent };

struct Seat {
  int id = 0;
  Occupant occupant = Occupant::Human;
  std::string profile;  // agent profile reference; empty for humans

  Color color() const { return color_of_seat(id); }

  friend bool operator==(const Seat&, const Seat&) = default;
};

using Seats = std::array<Seat, kSeatCount>;

// ---- phases ---------------------------------------------------------------

namespace phase {
struct Open {
  friend bool operator==(const Open&, const Open&) = default;
};
struct ClueEntry {
  int speaker = 0;
  friend bool operator==(const ClueEntry&, const ClueEntry&) = default;
};
struct Guessing {
  int speaker = 0;
  std::string clue;
  friend bool operator==(const Guessing&, const Guessing&) = default;
};
struct Resolution {
  int speaker = 0;
  Coordinate agreed;
  friend bool operator==(const Resolution&, const Resolution&) = default;
};
struct End {
  friend bool operator==(const End&, const End&) = default;
};
}  // namespace phase

using GamePhase = std::variant<phase::Open, phase::ClueEntry, phase::Guessing, phase::Resolution, phase::End>;

std::optional<int> speaker_of(const GamePhase& phase);
std::string_view phase_name(const GamePhase& phase);

// ---- commands ---------------------------------------------------------------

namespace cmd {
struct RequestSpeak {
  int seat = 0;
  friend bool operator==(const RequestSpeak&, const RequestSpeak&) = default;
};
struct CancelSpeak {
  int seat = 0;
  friend bool operator==(const CancelSpeak&, const CancelSpeak&) = default;
};
struct ProposeClue {
  int seat = 0;
  std::string word;
  friend bool operator==(const ProposeClue&, const ProposeClue&) = default;
};
struct SelectCell {
  int seat = 0;
  Coordinate cell;
  friend bool operator==(const SelectCell&, const SelectCell&) = default;
};
struct ConfirmResolution {
  int seat = 0;
  friend bool operator==(const ConfirmResolution&, const ConfirmResolution&) = default;
};
}  // namespace cmd

using Command =
    std::variant<cmd::RequestSpeak, cmd::CancelSpeak, cmd::ProposeClue, cmd::SelectCell, cmd::ConfirmResolution>;

enum class CommandKind : std::uint8_t { RequestSpeak, CancelSpeak, ProposeClue, SelectCell, ConfirmResolution };

int seat_of(const Command& command);
CommandKind kind_of(const Command& command);
std::string_view to_string(CommandKind kind);

// ---- events -----------------------------------------------------------------

namespace ev {
struct GameStarted {
  Grid grid;
  Seats seats;
  std::optional<std::uint64_t> shuffle_seed;  // private: never in public payloads
  friend bool operator==(const GameStarted&, const GameStarted&) = default;
};
struct CardDealt {
  int seat = 0;
  std::optional<Coordinate> card;  // private: owner and log only
  friend bool operator==(const CardDealt&, const CardDealt&) = default;
};
struct SpeakRequested {
  int seat = 0;
  friend bool operator==(const SpeakRequested&, const SpeakRequested&) = default;
};
struct SpeakCancelled {
  int seat = 0;
  friend bool operator==(const SpeakCancelled&, const SpeakCancelled&) = default;
};
struct ClueProposed {
  int seat = 0;
  std::string word;
  friend bool operator==(const ClueProposed&, const ClueProposed&) = default;
};
struct CellSelected {
  int seat = 0;
  Coordinate cell;
  friend bool operator==(const CellSelected&, const CellSelected&) = default;
};
struct AgreementReached {
  Coordinate cell;
  friend bool operator==(const AgreementReached&, const AgreementReached&) = default;
};
struct ResolutionAnnounced {
  int seat = 0;
  bool success = false;
  Coordinate target;  // the speaker's card, revealed as it is discarded
  friend bool operator==(const ResolutionAnnounced&, const ResolutionAnnounced&) = default;
};
struct CellCompleted {
  Coordinate cell;
  friend bool operator==(const CellCompleted&, const CellCompleted&) = default;
};
struct GameEnded {
  int completed_count = 0;
  friend bool operator==(const GameEnded&, const GameEnded&) = default;
};
}  // namespace ev

using GameEvent = std::variant<ev::GameStarted, ev::CardDealt, ev::SpeakRequested, ev::SpeakCancelled,
                               ev::ClueProposed, ev::CellSelected, ev::AgreementReached, ev::ResolutionAnnounced,
                               ev::CellCompleted, ev::GameEnded>;

std::string_view event_name(const GameEvent& event);

// Seat that caused the event through a command; nullopt for server-derived events.
std::optional<int> actor_of(const GameEvent& event);

// Copy with private fields (shuffle seed, dealt card) removed.
GameEvent public_projection(const GameEvent& event);

// ---- state ------------------------------------------------------------------

struct GameState {
  bool started = false;
  Grid grid;
  Seats seats;
  std::uint64_t shuffle_seed = 0;
  std::vector<Coordinate> deck;  // front is the next card to deal
  std::array<std::optional<Coordinate>, kSeatCount> hands;
  std::vector<Coordinate> resolved;  // discarded cards, in resolution order
  CellSet completed;
  GamePhase phase = phase::Open{};
  std::array<std::optional<Coordinate>, kSeatCount> selections;
  std::vector<GameEvent> history;

  int resolved_count() const { return static_cast<int>(resolved.size()); }
  bool is_over() const { return std::holds_alternative<phase::End>(phase); }

  friend bool operator==(const GameState&, const GameState&) = default;
};

// What one seat is allowed to see: the public state plus its own card.
struct PlayerView {
  int seat = 0;
  Grid grid;
  Seats seats;
  GamePhase phase = phase::Open{};
  CellSet completed;
  std::array<std::optional<Coordinate>, kSeatCount> selections;
  int resolved_count = 0;
  std::size_t deck_size = 0;
  std::optional<Coordinate> own_card;
  std::vector<std::string> clues;  // every ClueProposed word so far, in order
  std::size_t history_length = 0;
  std::uint64_t tick = 0;  // session idle-tick counter, feeds agent randomness

  friend bool operator==(const PlayerView&, const PlayerView&) = default;
};

PlayerView view_for(const GameState& state, int seat, std::uint64_t tick = 0);

}  // namespace motmalin::game
