#pragma once

#include <string_view>
#include <vector>

#include "motmalin/agent/behavior.hpp"
#include "motmalin/agent/profile.hpp"
#include "motmalin/assoc/embedding_store.hpp"
#include "motmalin/game/state.hpp"

namespace motmalin::agent {

// One decision tick. Dispatches on the game phase seen from the agent's seat;
// an empty result means "do nothing now". Pure given the profile seed and view.
std::vector<BehaviorAction> decide(const AgentProfile& profile, const EmbodimentProfile& embodiment,
                                   const game::PlayerView& view, const assoc::EmbeddingStore& store);

// Guesser behavior for the current clue: pick the top-ranked cell, or follow
// the group's plurality once all guessers have picked and disagree.
std::vector<BehaviorAction> plan_guess(const AgentProfile& profile, const game::PlayerView& view,
                                       const assoc::EmbeddingStore& store, std::string_view clue);

// Social reaction to a verdict.
std::vector<BehaviorAction> react(const AgentProfile& profile, const game::ev::ResolutionAnnounced& outcome,
                                  const game::PlayerView& view);

}  // namespace motmalin::agent
