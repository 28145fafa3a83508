#include "motmalin/game/state.hpp"

#include <type_traits>

namespace motmalin::game {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string_view to_string(Color color) {
  switch (color) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Green: return "green";
    case Color::Yellow: return "yellow";
  }
  return "?";
}

std::optional<int> speaker_of(const GamePhase& phase) {
  return std::visit(overloaded{
                        [](const phase::ClueEntry& p) -> std::optional<int> { return p.speaker; },
                        [](const phase::Guessing& p) -> std::optional<int> { return p.speaker; },
                        [](const phase::Resolution& p) -> std::optional<int> { return p.speaker; },
                        [](const auto&) -> std::optional<int> { return std::nullopt; },
                    },
                    phase);
}

std::string_view phase_name(const GamePhase& phase) {
  static constexpr std::string_view names[] = {"Open", "ClueEntry", "Guessing", "Resolution", "End"};
  return names[phase.index()];
}

int seat_of(const Command& command) {
  return std::visit([](const auto& c) { return c.seat; }, command);
}

CommandKind kind_of(const Command& command) { return static_cast<CommandKind>(command.index()); }

std::string_view to_string(CommandKind kind) {
  switch (kind) {
    case CommandKind::RequestSpeak: return "RequestSpeak";
    case CommandKind::CancelSpeak: return "CancelSpeak";
    case CommandKind::ProposeClue: return "ProposeClue";
    case CommandKind::SelectCell: return "SelectCell";
    case CommandKind::ConfirmResolution: return "ConfirmResolution";
  }
  return "?";
}

std::string_view event_name(const GameEvent& event) {
  static constexpr std::string_view names[] = {
      "GameStarted",  "CardDealt",        "SpeakRequested",      "SpeakCancelled", "ClueProposed",
      "CellSelected", "AgreementReached", "ResolutionAnnounced", "CellCompleted",  "GameEnded",
  };
  return names[event.index()];
}

std::optional<int> actor_of(const GameEvent& event) {
  return std::visit(overloaded{
                        [](const ev::SpeakRequested& e) -> std::optional<int> { return e.seat; },
                        [](const ev::SpeakCancelled& e) -> std::optional<int> { return e.seat; },
                        [](const ev::ClueProposed& e) -> std::optional<int> { return e.seat; },
                        [](const ev::CellSelected& e) -> std::optional<int> { return e.seat; },
                        [](const ev::ResolutionAnnounced& e) -> std::optional<int> { return e.seat; },
                        [](const auto&) -> std::optional<int> { return std::nullopt; },
                    },
                    event);
}

GameEvent public_projection(const GameEvent& event) {
  GameEvent copy = event;
  if (auto* started = std::get_if<ev::GameStarted>(&copy)) started->shuffle_seed.reset();
  if (auto* dealt = std::get_if<ev::CardDealt>(&copy)) dealt->card.reset();
  return copy;
}

PlayerView view_for(const GameState& state, int seat, std::uint64_t tick) {
  PlayerView view;
  view.seat = seat;
  view.grid = state.grid;
  view.seats = state.seats;
  view.phase = state.phase;
  view.completed = state.completed;
  view.selections = state.selections;
  view.resolved_count = state.resolved_count();
  view.deck_size = state.deck.size();
  if (seat >= 0 && seat < kSeatCount) view.own_card = state.hands[seat];
  for (const auto& event : state.history) {
    if (const auto* clue = std::get_if<ev::ClueProposed>(&event)) view.clues.push_back(clue->word);
  }
  view.history_length = state.history.size();
  view.tick = tick;
  return view;
}

}  // namespace motmalin::game
