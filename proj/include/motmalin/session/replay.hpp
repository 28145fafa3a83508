#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motmalin/game/state.hpp"
#include "motmalin/session/log.hpp"

namespace motmalin::session {

struct DigestCheck {
  std::uint64_t seq = 0;
  std::string recorded;
  std::string replayed;
  bool matches() const { return recorded == replayed; }
};

struct ReplayResult {
  game::GameState state;
  std::size_t event_count = 0;
  std::vector<DigestCheck> digests;

  bool digests_match() const;
};

// Rebuilds the game from a session log. Every command-driven event is
// re-derived through the rules engine and the derived events that follow it
// must match the log exactly; a log may stop part-way through a group.
// Throws SessionError(SeqGap | CorruptRecord).
ReplayResult replay(std::span<const LogRecord> records);

}  // namespace motmalin::session
