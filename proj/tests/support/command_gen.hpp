#pragma once

#include <optional>
#include <vector>

#include "motmalin/game/rules.hpp"
#include "support/fixtures.hpp"

namespace motmalin::testing {

inline const char* const kWords[] = {"coach", "Lesson", "teacher", "head coach", "", "  ", "ÉCOLE", "ball", "zzz"};

inline game::Command random_command(Gen& g) {
  const int seat = g.range(0, 3);
  switch (g.range(0, 4)) {
    case 0: return game::cmd::RequestSpeak{seat};
    case 1: return game::cmd::CancelSpeak{seat};
    case 2: return game::cmd::ProposeClue{seat, kWords[g.range(0, 8)]};
    case 3: return game::cmd::SelectCell{seat, game::Coordinate::from_index(g.range(0, 15))};
    default: return game::cmd::ConfirmResolution{seat};
  }
}

// A legal command for some seat, biased towards finishing rounds.
inline std::optional<game::Command> legal_command(const game::GameState& state, Gen& g) {
  std::vector<game::Command> options;
  for (int s = 0; s < game::kSeatCount; ++s) {
    const auto legal = game::legal_commands(state, s);
    if (legal.request_speak) options.push_back(game::cmd::RequestSpeak{s});
    if (legal.cancel_speak && g.chance(0.1)) options.push_back(game::cmd::CancelSpeak{s});
    if (legal.propose_clue) options.push_back(game::cmd::ProposeClue{s, "coach"});
    if (legal.confirm_resolution) options.push_back(game::cmd::ConfirmResolution{s});
    if (!legal.selectable.empty()) {
      // Guessers drift towards the first guesser's pick so rounds end.
      std::optional<game::Coordinate> anchor;
      for (int o = 0; o < game::kSeatCount && !anchor; ++o) {
        if (state.selections[o]) anchor = state.selections[o];
      }
      const auto pick = anchor && g.chance(0.8) ? *anchor : legal.selectable[g.range(0, int(legal.selectable.size()) - 1)];
      if (state.selections[s] != pick) options.push_back(game::cmd::SelectCell{s, pick});
    }
  }
  if (options.empty()) return std::nullopt;
  return options[g.range(0, int(options.size()) - 1)];
}

}  // namespace motmalin::testing
