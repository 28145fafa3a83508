#include <doctest.h>

#include <set>

#include "motmalin/game/codec.hpp"
#include "motmalin/game/errors.hpp"
#include "motmalin/game/rules.hpp"
#include "support/fixtures.hpp"

using namespace motmalin;
using namespace motmalin::game;
using motmalin::testing::default_seats;
using motmalin::testing::fixture_game;
using motmalin::testing::fixture_grid;
using motmalin::testing::game_with_card;

namespace {

RuleCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const RuleError& e) {
    return e.code();
  }
  FAIL("no RuleError thrown");
  return RuleCode::EventMismatch;
}

Coordinate C(std::string_view s) { return parse_coordinate(s); }

GameState step(const GameState& state, const Command& command) { return apply_command(state, command).state; }

// Seat 3 speaks "coach" and the three guessers pick `agreed`.
GameState to_resolution(GameState state, Coordinate agreed) {
  state = step(state, cmd::RequestSpeak{3});
  state = step(state, cmd::ProposeClue{3, "coach"});
  for (int s = 0; s < 3; ++s) state = step(state, cmd::SelectCell{s, agreed});
  return state;
}

}  // namespace

TEST_CASE("coordinates parse case-insensitively and reject out-of-range cells") {
  CHECK(C("B4") == Coordinate{Column::B, 4});
  CHECK(C("a1") == Coordinate{Column::A, 1});
  CHECK(C("  d3 ") == Coordinate{Column::D, 3});
  for (auto bad : {"E5", "A0", "A5", "", "B", "44", "BB", "B4x", "b 4"}) {
    CHECK_MESSAGE(code_of([&] { parse_coordinate(bad); }) == RuleCode::BadCoordinate, bad);
  }
  std::set<std::string> names;
  for (const auto& c : all_coordinates()) {
    names.insert(c.to_string());
    CHECK(C(c.to_string()) == c);
    CHECK(Coordinate::from_index(c.index()) == c);
  }
  CHECK(names.size() == 16);
  CHECK(all_coordinates()[0].to_string() == "A1");
  CHECK(all_coordinates()[1].to_string() == "B1");
  CHECK(all_coordinates()[15].to_string() == "D4");
}

TEST_CASE("grid words are normalized and must be eight distinct single tokens") {
  const auto grid = make_grid({"Dog", " TEACHER ", "water", "music"}, {"house", "fire", "tree", "ball"});
  CHECK(grid.column_words[1] == "teacher");
  CHECK(grid.contains("dog"));
  CHECK(code_of([] { make_grid({"dog", "teacher", "water", "ball"}, {"house", "fire", "tree", "ball"}); }) ==
        RuleCode::DuplicateGridWord);
  CHECK(code_of([] { make_grid({"dog", "teacher", "water", "music"}, {"house", "fire", "tree", "Dog"}); }) ==
        RuleCode::DuplicateGridWord);
  CHECK(code_of([] { make_grid({"dog", "ice cream", "water", "music"}, {"house", "fire", "tree", "ball"}); }) ==
        RuleCode::InvalidGridWord);
  CHECK(code_of([] { make_grid({"dog", "", "water", "music"}, {"house", "fire", "tree", "ball"}); }) ==
        RuleCode::InvalidGridWord);
}

TEST_CASE("normalization lowercases, composes and trims Unicode text") {
  CHECK(normalize_word(" Coach ") == "coach");
  CHECK(normalize_word("ÉTÉ") == "été");
  CHECK(normalize_word("été") == "été");  // decomposed input
  CHECK(normalize_word(" ballon　") == "ballon");
  CHECK(is_single_token("ballon"));
  CHECK_FALSE(is_single_token("head coach"));
  CHECK_FALSE(is_single_token("head coach"));
  CHECK(common_prefix_length("teach", "teacher") == 5);
  CHECK(common_prefix_length("été", "était") == 2);
}

TEST_CASE("validate_clue") {
  const auto grid = fixture_grid();
  CHECK(validate_clue(grid, " Coach ") == "coach");
  CHECK(code_of([&] { validate_clue(grid, "teacher"); }) == RuleCode::GridWordClue);
  CHECK(code_of([&] { validate_clue(grid, " BALL"); }) == RuleCode::GridWordClue);
  CHECK(code_of([&] { validate_clue(grid, "head coach"); }) == RuleCode::MultiToken);
  CHECK(code_of([&] { validate_clue(grid, "   "); }) == RuleCode::EmptyClue);
}

TEST_CASE("new_game on the fixture grid deals four cards from a seeded deck") {
  const auto state = fixture_game(7);
  CHECK(std::holds_alternative<phase::Open>(state.phase));
  for (const auto& hand : state.hands) CHECK(hand.has_value());
  CHECK(state.deck.size() == 12);
  REQUIRE(state.history.size() == 5);
  CHECK(std::holds_alternative<ev::GameStarted>(state.history[0]));
  for (int i = 1; i < 5; ++i) CHECK(std::get<ev::CardDealt>(state.history[i]).seat == i - 1);

  CHECK(fixture_game(7) == state);
  CHECK(fixture_game(8).deck != state.deck);

  const auto deck = shuffled_deck(7);
  std::set<int> seen;
  for (const auto& c : deck) seen.insert(c.index());
  CHECK(seen.size() == 16);
  for (int i = 0; i < 4; ++i) CHECK(state.hands[i] == deck[i]);
}

TEST_CASE("new_game rejects bad seat lists and duplicate grids") {
  const auto seats = default_seats();
  CHECK(code_of([&] { new_game(fixture_grid(), std::span(seats).first(3), 1); }) == RuleCode::BadSeatCount);
  auto shuffled = seats;
  std::swap(shuffled[0], shuffled[1]);
  CHECK(code_of([&] { new_game(fixture_grid(), shuffled, 1); }) == RuleCode::InvalidSeat);
  Grid dup = fixture_grid();
  dup.column_words[0] = "ball";
  CHECK(code_of([&] { new_game(dup, seats, 1); }) == RuleCode::DuplicateGridWord);
}

TEST_CASE("seat colors follow seat position") {
  CHECK(to_string(color_of_seat(0)) == "red");
  CHECK(to_string(color_of_seat(1)) == "blue");
  CHECK(to_string(color_of_seat(2)) == "green");
  CHECK(to_string(color_of_seat(3)) == "yellow");
}

TEST_CASE("request to speak moves Open to ClueEntry") {
  const auto state = fixture_game();
  const auto t = apply_command(state, cmd::RequestSpeak{3});
  CHECK(t.state.phase == GamePhase{phase::ClueEntry{3}});
  REQUIRE(t.events.size() == 1);
  CHECK(t.events[0] == GameEvent{ev::SpeakRequested{3}});
  CHECK(t.state.history.size() == state.history.size() + 1);

  CHECK(code_of([&] { apply_command(t.state, cmd::RequestSpeak{1}); }) == RuleCode::PhaseViolation);
  const auto back = apply_command(t.state, cmd::CancelSpeak{3});
  CHECK(back.state.phase == GamePhase{phase::Open{}});
  CHECK(back.events == std::vector<GameEvent>{ev::SpeakCancelled{3}});
  CHECK(code_of([&] { apply_command(t.state, cmd::CancelSpeak{2}); }) == RuleCode::NotSpeaker);
}

TEST_CASE("clue entry validates the clue and moves to Guessing") {
  auto state = step(fixture_game(), cmd::RequestSpeak{3});
  CHECK(code_of([&] { apply_command(state, cmd::ProposeClue{3, "teacher"}); }) == RuleCode::GridWordClue);
  CHECK(code_of([&] { apply_command(state, cmd::ProposeClue{3, "head coach"}); }) == RuleCode::MultiToken);
  CHECK(code_of([&] { apply_command(state, cmd::ProposeClue{1, "coach"}); }) == RuleCode::NotSpeaker);
  const auto t = apply_command(state, cmd::ProposeClue{3, " Coach "});
  CHECK(t.events == std::vector<GameEvent>{ev::ClueProposed{3, "coach"}});
  CHECK(t.state.phase == GamePhase{phase::Guessing{3, "coach"}});
}

TEST_CASE("guessing: speaker cannot select, agreement moves to Resolution") {
  auto state = step(step(fixture_game(), cmd::RequestSpeak{3}), cmd::ProposeClue{3, "coach"});
  CHECK(code_of([&] { apply_command(state, cmd::SelectCell{3, C("B4")}); }) == RuleCode::NotAGuesser);
  CHECK(code_of([&] { apply_command(state, cmd::RequestSpeak{0}); }) == RuleCode::PhaseViolation);
  state = step(state, cmd::SelectCell{0, C("B4")});
  state = step(state, cmd::SelectCell{1, C("A1")});
  CHECK(check_agreement(state) == std::nullopt);
  state = step(state, cmd::SelectCell{1, C("B4")});
  const auto t = apply_command(state, cmd::SelectCell{2, C("B4")});
  CHECK(t.events == std::vector<GameEvent>{ev::CellSelected{2, C("B4")}, ev::AgreementReached{C("B4")}});
  CHECK(t.state.phase == GamePhase{phase::Resolution{3, C("B4")}});
  for (const auto& s : t.state.selections) CHECK_FALSE(s.has_value());
}

TEST_CASE("check_agreement needs all three guessers on one cell") {
  auto state = step(step(fixture_game(), cmd::RequestSpeak{3}), cmd::ProposeClue{3, "coach"});
  CHECK(code_of([&] { check_agreement(fixture_game()); }) == RuleCode::PhaseViolation);
  auto with = [&](std::optional<Coordinate> a, std::optional<Coordinate> b, std::optional<Coordinate> c) {
    auto s = state;
    s.selections = {a, b, c, std::nullopt};
    return check_agreement(s);
  };
  CHECK(with(C("B4"), C("B4"), C("B4")) == C("B4"));
  CHECK(with(C("B4"), C("A1"), C("B4")) == std::nullopt);
  CHECK(with(C("B4"), C("B4"), std::nullopt) == std::nullopt);
}

TEST_CASE("successful resolution completes the cell and deals a new card") {
  auto state = to_resolution(game_with_card(3, C("B4")), C("B4"));
  REQUIRE(state.phase == GamePhase{phase::Resolution{3, C("B4")}});
  CHECK(code_of([&] { apply_command(state, cmd::ConfirmResolution{0}); }) == RuleCode::NotSpeaker);
  const Coordinate next = state.deck.front();
  const auto t = apply_command(state, cmd::ConfirmResolution{3});
  CHECK(t.events == std::vector<GameEvent>{ev::ResolutionAnnounced{3, true, C("B4")}, ev::CellCompleted{C("B4")},
                                           ev::CardDealt{3, next}});
  CHECK(t.state.phase == GamePhase{phase::Open{}});
  CHECK(t.state.completed.contains(C("B4")));
  CHECK(t.state.hands[3] == next);
  CHECK(t.state.resolved_count() == 1);
  CHECK(t.state.deck.size() == 11);
}

TEST_CASE("failed resolution still discards the card and deals a new one") {
  auto state = to_resolution(game_with_card(3, C("B4")), C("A1"));
  const auto t = apply_command(state, cmd::ConfirmResolution{3});
  REQUIRE(t.events.size() == 2);
  CHECK(t.events[0] == GameEvent{ev::ResolutionAnnounced{3, false, C("B4")}});
  CHECK(std::holds_alternative<ev::CardDealt>(t.events[1]));
  CHECK(t.state.completed.empty());
  CHECK(t.state.resolved == std::vector<Coordinate>{C("B4")});
  CHECK(t.state.phase == GamePhase{phase::Open{}});
}

TEST_CASE("completed cells cannot be selected") {
  auto state = step(to_resolution(game_with_card(3, C("B4")), C("B4")), cmd::ConfirmResolution{3});
  int speaker = -1;
  for (int s = 0; s < 4 && speaker < 0; ++s) {
    if (state.hands[s]) speaker = s;
  }
  state = step(state, cmd::RequestSpeak{speaker});
  state = step(state, cmd::ProposeClue{speaker, "coach"});
  const int guesser = (speaker + 1) % 4;
  CHECK(code_of([&] { apply_command(state, cmd::SelectCell{guesser, C("B4")}); }) == RuleCode::CompletedCell);
  const auto legal = legal_commands(state, guesser);
  CHECK(legal.selectable.size() == 15);
  CHECK(std::find(legal.selectable.begin(), legal.selectable.end(), C("B4")) == legal.selectable.end());
}

TEST_CASE("legal_commands per phase") {
  const auto open = fixture_game();
  auto legal = legal_commands(open, 2);
  CHECK(legal.kinds() == std::vector<CommandKind>{CommandKind::RequestSpeak});

  auto guessing = step(step(open, cmd::RequestSpeak{3}), cmd::ProposeClue{3, "coach"});
  legal = legal_commands(guessing, 0);
  CHECK(legal.kinds() == std::vector<CommandKind>{CommandKind::SelectCell});
  CHECK(legal.selectable.size() == 16);
  CHECK(legal_commands(guessing, 3).empty());

  auto clue = step(open, cmd::RequestSpeak{1});
  CHECK(legal_commands(clue, 1).kinds() == std::vector<CommandKind>{CommandKind::CancelSpeak, CommandKind::ProposeClue});
  CHECK(legal_commands(clue, 0).empty());
  CHECK(legal_commands(clue, 1).accepts(cmd::ProposeClue{1, "coach"}, open.grid));
  CHECK_FALSE(legal_commands(clue, 1).accepts(cmd::ProposeClue{1, "dog"}, open.grid));

  GameState ended = open;
  ended.phase = phase::End{};
  for (int s = 0; s < 4; ++s) CHECK(legal_commands(ended, s).empty());
}

TEST_CASE("a scripted full game ends after sixteen resolutions") {
  auto state = fixture_game(3);
  int rounds = 0;
  while (!state.is_over()) {
    int speaker = 0;
    while (!state.hands[speaker]) ++speaker;
    state = step(state, cmd::RequestSpeak{speaker});
    state = step(state, cmd::ProposeClue{speaker, "coach"});
    const Coordinate pick = rounds % 2 == 0 ? *state.hands[speaker] : all_coordinates()[0];
    Coordinate target = pick;
    if (state.completed.contains(target)) {
      for (const auto& c : all_coordinates()) {
        if (!state.completed.contains(c)) {
          target = c;
          break;
        }
      }
    }
    for (int s = 0; s < 4; ++s) {
      if (s != speaker) state = step(state, cmd::SelectCell{s, target});
    }
    state = step(state, cmd::ConfirmResolution{speaker});
    ++rounds;
  }
  CHECK(rounds == 16);
  CHECK(state.resolved_count() == 16);
  CHECK(std::holds_alternative<ev::GameEnded>(state.history.back()));
  CHECK(std::get<ev::GameEnded>(state.history.back()).completed_count == state.completed.size());
  CHECK(state.completed.size() >= 8);
  for (int s = 0; s < 4; ++s) {
    CHECK(legal_commands(state, s).empty());
    CHECK(check_command(state, cmd::RequestSpeak{s}).has_value());
  }
  CHECK(fold_events(state.history) == state);
}

TEST_CASE("apply_event rejects events that cannot follow the state") {
  const auto state = fixture_game(7);
  CHECK(code_of([&] { apply_event(state, ev::CardDealt{0, state.deck.front()}); }) == RuleCode::EventMismatch);
  CHECK(code_of([&] { apply_event(state, ev::CellCompleted{C("A1")}); }) == RuleCode::EventMismatch);
  CHECK(code_of([&] { apply_event(state, ev::GameEnded{0}); }) == RuleCode::EventMismatch);
  CHECK(code_of([&] { apply_event(state, state.history.front()); }) == RuleCode::EventMismatch);
  auto speaking = step(state, cmd::RequestSpeak{0});
  CHECK_THROWS_AS(apply_event(speaking, ev::ClueProposed{1, "coach"}), RuleError);
}

TEST_CASE("public projection hides private fields") {
  const auto state = fixture_game(7);
  const auto started = public_projection(state.history[0]);
  CHECK_FALSE(std::get<ev::GameStarted>(started).shuffle_seed.has_value());
  const auto dealt = public_projection(state.history[1]);
  CHECK_FALSE(std::get<ev::CardDealt>(dealt).card.has_value());
  CHECK(public_projection(GameEvent{ev::ClueProposed{1, "coach"}}) == GameEvent{ev::ClueProposed{1, "coach"}});
}

TEST_CASE("views expose only the viewer's own card") {
  const auto state = fixture_game(7);
  for (int s = 0; s < 4; ++s) {
    const auto view = view_for(state, s);
    CHECK(view.own_card == state.hands[s]);
    CHECK(view.deck_size == 12);
    const auto j = game::view_to_json(view);
    CHECK(j.at("own_card") == state.hands[s]->to_string());
    CHECK_FALSE(j.contains("deck"));
    CHECK_FALSE(j.contains("hands"));
  }
}

TEST_CASE("codec round-trips commands and events") {
  const auto state = to_resolution(game_with_card(3, C("B4")), C("B4"));
  const auto done = step(state, cmd::ConfirmResolution{3});
  for (const auto& event : done.history) CHECK(event_from_json(event_to_json(event)) == event);
  const std::vector<Command> commands{cmd::RequestSpeak{2}, cmd::CancelSpeak{2}, cmd::ProposeClue{2, "coach"},
                                      cmd::SelectCell{2, C("C3")}, cmd::ConfirmResolution{2}};
  for (const auto& c : commands) CHECK(command_from_json(2, command_body_to_json(c)) == c);
  CHECK(command_body_to_json(cmd::ProposeClue{3, "coach"}) == nlohmann::json{{"type", "ProposeClue"}, {"word", "coach"}});
  CHECK(event_to_json(ev::ClueProposed{3, "coach"}) ==
        nlohmann::json{{"type", "ClueProposed"}, {"seat", 3}, {"word", "coach"}});
  CHECK_THROWS_AS(command_from_json(1, {{"type", "SelectCell"}}), std::invalid_argument);
  CHECK_THROWS_AS(command_from_json(1, {{"type", "Dance"}}), std::invalid_argument);
  CHECK_THROWS_AS(command_from_json(1, {{"type", "SelectCell"}, {"cell", "Z9"}}), std::invalid_argument);
  CHECK(grid_from_json(grid_to_json(fixture_grid())) == fixture_grid());
}

TEST_CASE("state digest is stable and sensitive to hidden state") {
  const auto a = fixture_game(7);
  CHECK(state_digest(a) == state_digest(fixture_game(7)));
  CHECK(state_digest(a).size() == 16);
  CHECK(state_digest(a) != state_digest(fixture_game(8)));
}

TEST_CASE("the moving apply_command leaves a rejected state intact") {
  GameState state = game_with_card(2, parse_coordinate("B4"));
  const auto digest = state_digest(state);
  CHECK_THROWS_AS(apply_command(std::move(state), cmd::SelectCell{1, parse_coordinate("A1")}), RuleError);
  CHECK(state_digest(state) == digest);
  const auto copied = apply_command(state, cmd::RequestSpeak{2});
  const auto moved = apply_command(std::move(state), cmd::RequestSpeak{2});
  CHECK(moved.events == copied.events);
  CHECK(moved.state == copied.state);
}
