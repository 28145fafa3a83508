#include "motmalin/game/codec.hpp"

#include <stdexcept>

#include "motmalin/game/errors.hpp"

namespace motmalin::game {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int seat_field(const json& j, const char* key = "seat") {
  const json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("field '") + key + "' must be an integer");
  const int seat = v.get<int>();
  if (seat < 0 || seat >= kSeatCount) malformed("seat out of range");
  return seat;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Coordinate cell_field(const json& j, const char* key) {
  try {
    return parse_coordinate(string_field(j, key));
  } catch (const RuleError& e) {
    malformed(e.what());
  }
}

json optional_cell(const std::optional<Coordinate>& c) { return c ? json(c->to_string()) : json(nullptr); }

json cells_to_json(const std::vector<Coordinate>& cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back(c.to_string());
  return out;
}

}  // namespace

json grid_to_json(const Grid& grid) {
  return json{{"columns", grid.column_words}, {"rows", grid.row_words}};
}

Grid grid_from_json(const json& j) {
  const json& cols = field(j, "columns");
  const json& rows = field(j, "rows");
  if (!cols.is_array() || cols.size() != kBoardSide || !rows.is_array() || rows.size() != kBoardSide) {
    malformed("grid needs 4 columns and 4 rows");
  }
  std::array<std::string, kBoardSide> c;
  std::array<std::string, kBoardSide> r;
  for (int i = 0; i < kBoardSide; ++i) {
    if (!cols[i].is_string() || !rows[i].is_string()) malformed("grid words must be strings");
    c[i] = cols[i].get<std::string>();
    r[i] = rows[i].get<std::string>();
  }
  return make_grid(c, r);
}

json seats_to_json(const Seats& seats) {
  json out = json::array();
  for (const auto& seat : seats) {
    json s{{"id", seat.id},
           {"color", to_string(seat.color())},
           {"occupant", seat.occupant == Occupant::Human ? "human" : "agent"}};
    if (!seat.profile.empty()) s["profile"] = seat.profile;
    out.push_back(std::move(s));
  }
  return out;
}

Seats seats_from_json(const json& j) {
  if (!j.is_array() || j.size() != kSeatCount) malformed("expected 4 seats");
  Seats seats;
  for (int i = 0; i < kSeatCount; ++i) {
    seats[i].id = seat_field(j[i], "id");
    const std::string occupant = string_field(j[i], "occupant");
    if (occupant == "human") {
      seats[i].occupant = Occupant::Human;
    } else if (occupant == "agent") {
      seats[i].occupant = Occupant::Agent;
    } else {
      malformed("unknown occupant '" + occupant + "'");
    }
    if (j[i].contains("profile")) seats[i].profile = string_field(j[i], "profile");
  }
  return seats;
}

json phase_to_json(const GamePhase& phase) {
  json out{{"name", phase_name(phase)}};
  std::visit(overloaded{
                 [&](const phase::ClueEntry& p) { out["speaker"] = p.speaker; },
                 [&](const phase::Guessing& p) {
                   out["speaker"] = p.speaker;
                   out["clue"] = p.clue;
                 },
                 [&](const phase::Resolution& p) {
                   out["speaker"] = p.speaker;
                   out["agreed"] = p.agreed.to_string();
                 },
                 [](const auto&) {},
             },
             phase);
  return out;
}

json command_body_to_json(const Command& command) {
  json out{{"type", to_string(kind_of(command))}};
  std::visit(overloaded{
                 [&](const cmd::ProposeClue& c) { out["word"] = c.word; },
                 [&](const cmd::SelectCell& c) { out["cell"] = c.cell.to_string(); },
                 [](const auto&) {},
             },
             command);
  return out;
}

Command command_from_json(int seat, const json& body) {
  const std::string type = string_field(body, "type");
  if (type == "RequestSpeak") return cmd::RequestSpeak{seat};
  if (type == "CancelSpeak") return cmd::CancelSpeak{seat};
  if (type == "ProposeClue") return cmd::ProposeClue{seat, string_field(body, "word")};
  if (type == "SelectCell") return cmd::SelectCell{seat, cell_field(body, "cell")};
  if (type == "ConfirmResolution") return cmd::ConfirmResolution{seat};
  malformed("unknown command type '" + type + "'");
}

json event_to_json(const GameEvent& event) {
  json out{{"type", event_name(event)}};
  std::visit(overloaded{
                 [&](const ev::GameStarted& e) {
                   out["grid"] = grid_to_json(e.grid);
                   out["seats"] = seats_to_json(e.seats);
                   if (e.shuffle_seed) out["shuffle_seed"] = *e.shuffle_seed;
                 },
                 [&](const ev::CardDealt& e) {
                   out["seat"] = e.seat;
                   if (e.card) out["card"] = e.card->to_string();
                 },
                 [&](const ev::SpeakRequested& e) { out["seat"] = e.seat; },
                 [&](const ev::SpeakCancelled& e) { out["seat"] = e.seat; },
                 [&](const ev::ClueProposed& e) {
                   out["seat"] = e.seat;
                   out["word"] = e.word;
                 },
                 [&](const ev::CellSelected& e) {
                   out["seat"] = e.seat;
                   out["cell"] = e.cell.to_string();
                 },
                 [&](const ev::AgreementReached& e) { out["cell"] = e.cell.to_string(); },
                 [&](const ev::ResolutionAnnounced& e) {
                   out["seat"] = e.seat;
                   out["success"] = e.success;
                   out["target"] = e.target.to_string();
                 },
                 [&](const ev::CellCompleted& e) { out["cell"] = e.cell.to_string(); },
                 [&](const ev::GameEnded& e) { out["completed_count"] = e.completed_count; },
             },
             event);
  return out;
}

GameEvent event_from_json(const json& j) {
  const std::string type = string_field(j, "type");
  if (type == "GameStarted") {
    ev::GameStarted e;
    try {
      e.grid = grid_from_json(field(j, "grid"));
    } catch (const RuleError& err) {
      malformed(err.what());
    }
    e.seats = seats_from_json(field(j, "seats"));
    if (j.contains("shuffle_seed")) {
      const json& seed = j.at("shuffle_seed");
      if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
        malformed("shuffle_seed must be a non-negative integer");
      }
      e.shuffle_seed = seed.get<std::uint64_t>();
    }
    return e;
  }
  if (type == "CardDealt") {
    ev::CardDealt e{seat_field(j), std::nullopt};
    if (j.contains("card")) e.card = cell_field(j, "card");
    return e;
  }
  if (type == "SpeakRequested") return ev::SpeakRequested{seat_field(j)};
  if (type == "SpeakCancelled") return ev::SpeakCancelled{seat_field(j)};
  if (type == "ClueProposed") return ev::ClueProposed{seat_field(j), string_field(j, "word")};
  if (type == "CellSelected") return ev::CellSelected{seat_field(j), cell_field(j, "cell")};
  if (type == "AgreementReached") return ev::AgreementReached{cell_field(j, "cell")};
  if (type == "ResolutionAnnounced") {
    const json& success = field(j, "success");
    if (!success.is_boolean()) malformed("field 'success' must be a boolean");
    return ev::ResolutionAnnounced{seat_field(j), success.get<bool>(), cell_field(j, "target")};
  }
  if (type == "CellCompleted") return ev::CellCompleted{cell_field(j, "cell")};
  if (type == "GameEnded") {
    const json& count = field(j, "completed_count");
    if (!count.is_number_integer()) malformed("field 'completed_count' must be an integer");
    return ev::GameEnded{count.get<int>()};
  }
  malformed("unknown event type '" + type + "'");
}

json state_to_json(const GameState& state) {
  json hands = json::array();
  json selections = json::array();
  for (int i = 0; i < kSeatCount; ++i) {
    hands.push_back(optional_cell(state.hands[i]));
    selections.push_back(optional_cell(state.selections[i]));
  }
  json history = json::array();
  for (const auto& event : state.history) history.push_back(event_to_json(event));
  return json{
      {"started", state.started},
      {"grid", grid_to_json(state.grid)},
      {"seats", seats_to_json(state.seats)},
      {"shuffle_seed", state.shuffle_seed},
      {"deck", cells_to_json(state.deck)},
      {"hands", std::move(hands)},
      {"resolved", cells_to_json(state.resolved)},
      {"completed", cells_to_json(state.completed.to_vector())},
      {"phase", phase_to_json(state.phase)},
      {"selections", std::move(selections)},
      {"resolved_count", state.resolved_count()},
      {"history", std::move(history)},
  };
}

json view_to_json(const PlayerView& view) {
  json selections = json::array();
  for (int i = 0; i < kSeatCount; ++i) selections.push_back(optional_cell(view.selections[i]));
  return json{
      {"seat", view.seat},
      {"color", to_string(color_of_seat(view.seat))},
      {"grid", grid_to_json(view.grid)},
      {"seats", seats_to_json(view.seats)},
      {"phase", phase_to_json(view.phase)},
      {"completed", cells_to_json(view.completed.to_vector())},
      {"selections", std::move(selections)},
      {"resolved_count", view.resolved_count},
      {"deck_size", view.deck_size},
      {"own_card", optional_cell(view.own_card)},
      {"clues", view.clues},
      {"history_length", view.history_length},
  };
}

}  // namespace motmalin::game
