#include "motmalin/game/rules.hpp"

#include <algorithm>
#include <cstdio>

#include "motmalin/game/codec.hpp"
#include "motmalin/game/random.hpp"

namespace motmalin::game {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool valid_seat(int seat) { return seat >= 0 && seat < kSeatCount; }

RuleViolation violation(RuleCode code, std::string detail) { return RuleViolation{code, std::move(detail)}; }

std::string phase_detail(const GameState& state, std::string_view what) {
  return std::string(what) + " not allowed in phase " + std::string(phase_name(state.phase));
}

[[noreturn]] void mismatch(const std::string& detail) { throw RuleError(RuleCode::EventMismatch, detail); }

void raise(const std::optional<RuleViolation>& v) {
  if (v) throw RuleError(v->code, v->detail);
}

}  // namespace

std::vector<Coordinate> shuffled_deck(std::uint64_t shuffle_seed) {
  std::vector<Coordinate> deck(kCellCount);
  const auto cells = all_coordinates();
  std::copy(cells.begin(), cells.end(), deck.begin());
  Rng rng(shuffle_seed);
  for (std::size_t i = deck.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(deck[i], deck[j]);
  }
  return deck;
}

GameState new_game(const Grid& grid, std::span<const Seat> seats, std::uint64_t shuffle_seed) {
  validate_grid(grid);
  if (seats.size() != kSeatCount) {
    throw RuleError(RuleCode::BadSeatCount, "expected 4 seats, got " + std::to_string(seats.size()));
  }
  ev::GameStarted started{grid, {}, shuffle_seed};
  for (int i = 0; i < kSeatCount; ++i) {
    if (seats[i].id != i) throw RuleError(RuleCode::InvalidSeat, "seat at position " + std::to_string(i));
    started.seats[i] = seats[i];
  }
  GameState state = apply_event(GameState{}, started);
  for (int i = 0; i < kSeatCount; ++i) {
    state = apply_event(std::move(state), ev::CardDealt{i, state.deck.front()});
  }
  return state;
}

std::optional<RuleViolation> check_command(const GameState& state, const Command& command) {
  const int seat = seat_of(command);
  if (!valid_seat(seat)) return violation(RuleCode::InvalidSeat, std::to_string(seat));
  if (!state.started) return violation(RuleCode::PhaseViolation, "game not started");
  const std::string_view kind = to_string(kind_of(command));

  return std::visit(
      overloaded{
          [&](const cmd::RequestSpeak&) -> std::optional<RuleViolation> {
            if (!std::holds_alternative<phase::Open>(state.phase)) {
              return violation(RuleCode::PhaseViolation, phase_detail(state, kind));
            }
            if (!state.hands[seat]) return violation(RuleCode::PhaseViolation, "seat holds no card");
            return std::nullopt;
          },
          [&](const cmd::CancelSpeak&) -> std::optional<RuleViolation> {
            const auto* p = std::get_if<phase::ClueEntry>(&state.phase);
            if (!p) return violation(RuleCode::PhaseViolation, phase_detail(state, kind));
            if (p->speaker != seat) return violation(RuleCode::NotSpeaker, "seat " + std::to_string(seat));
            return std::nullopt;
          },
          [&](const cmd::ProposeClue& c) -> std::optional<RuleViolation> {
            const auto* p = std::get_if<phase::ClueEntry>(&state.phase);
            if (!p) return violation(RuleCode::PhaseViolation, phase_detail(state, kind));
            if (p->speaker != seat) return violation(RuleCode::NotSpeaker, "seat " + std::to_string(seat));
            try {
              validate_clue(state.grid, c.word);
            } catch (const RuleError& e) {
              return violation(e.code(), e.detail());
            }
            return std::nullopt;
          },
          [&](const cmd::SelectCell& c) -> std::optional<RuleViolation> {
            const auto* p = std::get_if<phase::Guessing>(&state.phase);
            if (!p) return violation(RuleCode::PhaseViolation, phase_detail(state, kind));
            if (p->speaker == seat) return violation(RuleCode::NotAGuesser, "the speaker cannot select a cell");
            if (state.completed.contains(c.cell)) return violation(RuleCode::CompletedCell, c.cell.to_string());
            return std::nullopt;
          },
          [&](const cmd::ConfirmResolution&) -> std::optional<RuleViolation> {
            const auto* p = std::get_if<phase::Resolution>(&state.phase);
            if (!p) return violation(RuleCode::PhaseViolation, phase_detail(state, kind));
            if (p->speaker != seat) return violation(RuleCode::NotSpeaker, "seat " + std::to_string(seat));
            return std::nullopt;
          },
      },
      command);
}

namespace {

Transition apply_checked(GameState state, const Command& command) {
  Transition out{std::move(state), {}};
  auto emit = [&out](GameEvent event) {
    out.state = apply_event(std::move(out.state), event);
    out.events.push_back(std::move(event));
  };

  std::visit(overloaded{
                 [&](const cmd::RequestSpeak& c) { emit(ev::SpeakRequested{c.seat}); },
                 [&](const cmd::CancelSpeak& c) { emit(ev::SpeakCancelled{c.seat}); },
                 [&](const cmd::ProposeClue& c) { emit(ev::ClueProposed{c.seat, validate_clue(out.state.grid, c.word)}); },
                 [&](const cmd::SelectCell& c) {
                   emit(ev::CellSelected{c.seat, c.cell});
                   if (auto agreed = check_agreement(out.state)) emit(ev::AgreementReached{*agreed});
                 },
                 [&](const cmd::ConfirmResolution& c) {
                   const auto& resolution = std::get<phase::Resolution>(out.state.phase);
                   const Coordinate card = *out.state.hands[c.seat];
                   const bool success = resolution.agreed == card;
                   emit(ev::ResolutionAnnounced{c.seat, success, card});
                   if (success) emit(ev::CellCompleted{card});
                   if (!out.state.deck.empty()) emit(ev::CardDealt{c.seat, out.state.deck.front()});
                   if (out.state.is_over()) emit(ev::GameEnded{out.state.completed.size()});
                 },
             },
             command);
  return out;
}

}  // namespace

Transition apply_command(const GameState& state, const Command& command) {
  raise(check_command(state, command));
  return apply_checked(state, command);
}

Transition apply_command(GameState&& state, const Command& command) {
  raise(check_command(state, command));
  return apply_checked(std::move(state), command);
}

GameState apply_event(GameState state, const GameEvent& event) {
  std::visit(
      overloaded{
          [&](const ev::GameStarted& e) {
            if (state.started) mismatch("game already started");
            validate_grid(e.grid);
            for (int i = 0; i < kSeatCount; ++i) {
              if (e.seats[i].id != i) throw RuleError(RuleCode::InvalidSeat, "seat at position " + std::to_string(i));
            }
            if (!e.shuffle_seed) mismatch("game start without its shuffle seed");
            state.started = true;
            state.grid = e.grid;
            state.seats = e.seats;
            state.shuffle_seed = *e.shuffle_seed;
            state.deck = shuffled_deck(*e.shuffle_seed);
            state.phase = phase::Open{};
          },
          [&](const ev::CardDealt& e) {
            if (!state.started) mismatch("card dealt before start");
            if (!valid_seat(e.seat)) throw RuleError(RuleCode::InvalidSeat, std::to_string(e.seat));
            if (!std::holds_alternative<phase::Open>(state.phase)) mismatch("card dealt outside Open");
            if (state.hands[e.seat]) mismatch("seat already holds a card");
            if (state.deck.empty()) mismatch("deck is empty");
            if (!e.card || *e.card != state.deck.front()) mismatch("dealt card is not the top of the deck");
            state.hands[e.seat] = state.deck.front();
            state.deck.erase(state.deck.begin());
          },
          [&](const ev::SpeakRequested& e) {
            raise(check_command(state, cmd::RequestSpeak{e.seat}));
            state.phase = phase::ClueEntry{e.seat};
          },
          [&](const ev::SpeakCancelled& e) {
            raise(check_command(state, cmd::CancelSpeak{e.seat}));
            state.phase = phase::Open{};
          },
          [&](const ev::ClueProposed& e) {
            raise(check_command(state, cmd::ProposeClue{e.seat, e.word}));
            if (validate_clue(state.grid, e.word) != e.word) mismatch("clue is not normalized");
            state.phase = phase::Guessing{e.seat, e.word};
            state.selections = {};
          },
          [&](const ev::CellSelected& e) {
            raise(check_command(state, cmd::SelectCell{e.seat, e.cell}));
            state.selections[e.seat] = e.cell;
          },
          [&](const ev::AgreementReached& e) {
            const auto agreed = check_agreement(state);
            if (!agreed || *agreed != e.cell) mismatch("guessers do not agree on " + e.cell.to_string());
            state.phase = phase::Resolution{*speaker_of(state.phase), e.cell};
            state.selections = {};
          },
          [&](const ev::ResolutionAnnounced& e) {
            raise(check_command(state, cmd::ConfirmResolution{e.seat}));
            const auto& resolution = std::get<phase::Resolution>(state.phase);
            if (*state.hands[e.seat] != e.target) mismatch("announced target is not the speaker's card");
            if (e.success != (resolution.agreed == e.target)) mismatch("announced verdict is wrong");
            state.hands[e.seat].reset();
            state.resolved.push_back(e.target);
            if (state.resolved_count() == kCellCount) {
              state.phase = phase::End{};
            } else {
              state.phase = phase::Open{};
            }
          },
          [&](const ev::CellCompleted& e) {
            const auto* last = state.history.empty() ? nullptr : std::get_if<ev::ResolutionAnnounced>(&state.history.back());
            if (!last || !last->success || last->target != e.cell) mismatch("completion without a matching success");
            state.completed.insert(e.cell);
          },
          [&](const ev::GameEnded& e) {
            if (!state.is_over()) mismatch("game end before 16 resolutions");
            if (!state.history.empty() && std::holds_alternative<ev::GameEnded>(state.history.back())) {
              mismatch("game already ended");
            }
            if (e.completed_count != state.completed.size()) mismatch("completed count differs");
          },
      },
      event);
  state.history.push_back(event);
  return state;
}

GameState fold_events(std::span<const GameEvent> events) {
  GameState state;
  for (const auto& event : events) state = apply_event(std::move(state), event);
  return state;
}

std::optional<Coordinate> check_agreement(const GameState& state) {
  const auto* guessing = std::get_if<phase::Guessing>(&state.phase);
  if (!guessing) throw RuleError(RuleCode::PhaseViolation, phase_detail(state, "agreement check"));
  std::optional<Coordinate> agreed;
  for (int seat = 0; seat < kSeatCount; ++seat) {
    if (seat == guessing->speaker) continue;
    const auto& pick = state.selections[seat];
    if (!pick) return std::nullopt;
    if (agreed && *agreed != *pick) return std::nullopt;
    agreed = pick;
  }
  return agreed;
}

std::vector<CommandKind> LegalCommands::kinds() const {
  std::vector<CommandKind> out;
  if (request_speak) out.push_back(CommandKind::RequestSpeak);
  if (cancel_speak) out.push_back(CommandKind::CancelSpeak);
  if (propose_clue) out.push_back(CommandKind::ProposeClue);
  if (!selectable.empty()) out.push_back(CommandKind::SelectCell);
  if (confirm_resolution) out.push_back(CommandKind::ConfirmResolution);
  return out;
}

bool LegalCommands::accepts(const Command& command, const Grid& grid) const {
  if (seat_of(command) != seat) return false;
  return std::visit(overloaded{
                        [&](const cmd::RequestSpeak&) { return request_speak; },
                        [&](const cmd::CancelSpeak&) { return cancel_speak; },
                        [&](const cmd::ProposeClue& c) {
                          if (!propose_clue) return false;
                          try {
                            validate_clue(grid, c.word);
                            return true;
                          } catch (const RuleError&) {
                            return false;
                          }
                        },
                        [&](const cmd::SelectCell& c) {
                          return std::find(selectable.begin(), selectable.end(), c.cell) != selectable.end();
                        },
                        [&](const cmd::ConfirmResolution&) { return confirm_resolution; },
                    },
                    command);
}

LegalCommands legal_commands(const GameState& state, int seat) {
  LegalCommands legal;
  legal.seat = seat;
  if (!valid_seat(seat) || !state.started) return legal;
  std::visit(overloaded{
                 [&](const phase::Open&) { legal.request_speak = state.hands[seat].has_value(); },
                 [&](const phase::ClueEntry& p) {
                   legal.cancel_speak = legal.propose_clue = p.speaker == seat;
                 },
                 [&](const phase::Guessing& p) {
                   if (p.speaker == seat) return;
                   for (const auto& cell : all_coordinates()) {
                     if (!state.completed.contains(cell)) legal.selectable.push_back(cell);
                   }
                 },
                 [&](const phase::Resolution& p) { legal.confirm_resolution = p.speaker == seat; },
                 [](const phase::End&) {},
             },
             state.phase);
  return legal;
}

std::string state_digest(const GameState& state) {
  const std::string canonical = state_to_json(state).dump();
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : canonical) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace motmalin::game
