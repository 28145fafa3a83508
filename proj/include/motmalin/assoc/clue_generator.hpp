#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motmalin/assoc/embedding_store.hpp"
#include "motmalin/assoc/inference.hpp"
#include "motmalin/game/coordinate.hpp"
#include "motmalin/game/grid.hpp"

namespace motmalin::assoc {

// Candidates sharing a prefix of this many code points with a target word
// are treated as morphological variants and excluded.
inline constexpr std::size_t kVariantPrefix = 4;

struct ClueParams {
  std::size_t pool_size = 50;          // nearest neighbors taken per target word
  double distractor_weight = 0.5;      // lambda
  bool require_self_consistency = true;
  Combine combine = Combine::Min;
  double beta = kDefaultBeta;
};

struct ClueCandidate {
  std::string word;
  double pair_score = 0.0;        // combine() of the similarities to the two target words
  double distractor_score = 0.0;  // max similarity to the six other grid words
  double total = 0.0;             // pair_score - lambda * distractor_score
};

// True when `word` may be offered as a clue for `target`: a valid clue for the
// grid and not a prefix variant of either target word.
bool admissible_clue(const game::Grid& grid, game::Coordinate target, const std::string& word);

// Union of the k nearest neighbors of both target words, filtered through
// admissible_clue, in vocabulary order. Throws AssocError(TargetWordOOV).
std::vector<std::string> candidate_pool(const EmbeddingStore& store, const game::Grid& grid, game::Coordinate target,
                                        std::size_t pool_size);

// Scores in-vocabulary admissible words; best first, vocabulary order among
// ties. Inadmissible or unknown words are dropped. Throws TargetWordOOV.
std::vector<ClueCandidate> rank_candidates(const EmbeddingStore& store, const game::Grid& grid,
                                           game::Coordinate target, std::span<const std::string> words,
                                           const ClueParams& params);

// Best-ranked candidate whose own inference ranks the target first (when the
// gate is on). The gate is evaluated against `completed`.
std::optional<ClueCandidate> select_clue(const EmbeddingStore& store, const game::Grid& grid,
                                         game::Coordinate target, const game::CellSet& completed,
                                         std::span<const std::string> words, const ClueParams& params);

std::optional<ClueCandidate> generate_clue(const EmbeddingStore& store, const game::Grid& grid,
                                           game::Coordinate target, const game::CellSet& completed = {},
                                           const ClueParams& params = {});

}  // namespace motmalin::assoc
