#pragma once

#include <json.hpp>

#include "motmalin/game/state.hpp"

namespace motmalin::game {

// JSON shapes shared by the wire protocol and the session log.
// Parsers throw std::invalid_argument on malformed input.

nlohmann::json grid_to_json(const Grid& grid);
Grid grid_from_json(const nlohmann::json& j);

nlohmann::json seats_to_json(const Seats& seats);
Seats seats_from_json(const nlohmann::json& j);

nlohmann::json phase_to_json(const GamePhase& phase);

// {"type":"ProposeClue","word":"coach"}; the seat travels beside the body.
nlohmann::json command_body_to_json(const Command& command);
Command command_from_json(int seat, const nlohmann::json& body);

// {"type":"ClueProposed","seat":3,"word":"coach"}. Private fields are kept;
// apply public_projection() first for anything leaving the server.
nlohmann::json event_to_json(const GameEvent& event);
GameEvent event_from_json(const nlohmann::json& j);

// Full state including hidden cards; used for digests.
nlohmann::json state_to_json(const GameState& state);

nlohmann::json view_to_json(const PlayerView& view);

}  // namespace motmalin::game
