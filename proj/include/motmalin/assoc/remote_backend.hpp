#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motmalin/assoc/clue_generator.hpp"

namespace motmalin::assoc {

struct RemoteConfig {
  std::string endpoint;  // e.g. "http://127.0.0.1:8081/associate"
  std::chrono::milliseconds timeout{5000};
  std::string template_id = "pair_association";
};

struct GeneratorBackend {
  // LexicalGraph is a reserved slot without an implementation.
  enum class Kind { Embedding, Remote, LexicalGraph };

  Kind kind = Kind::Embedding;
  std::optional<RemoteConfig> remote;
};

// Splits a plain-text response on newlines and commas, trimming each item.
std::vector<std::string> parse_word_list(std::string_view body);

// POSTs {"words": [column word, row word], "template": id} to the endpoint
// and returns the raw words of the reply. Callers must re-validate them.
// Throws AssocError(Disabled | Timeout | BadResponse).
std::vector<std::string> remote_candidates(const GeneratorBackend& backend, const game::Grid& grid,
                                           game::Coordinate target);

struct GeneratedClue {
  ClueCandidate candidate;
  bool from_remote = false;
};

// Remote words re-scored through the local pipeline; falls back to embedding
// generation when the backend is disabled, fails, or yields nothing usable.
std::optional<GeneratedClue> generate_clue_with_backend(const EmbeddingStore& store, const game::Grid& grid,
                                                        game::Coordinate target, const game::CellSet& completed,
                                                        const ClueParams& params, const GeneratorBackend& backend);

}  // namespace motmalin::assoc
