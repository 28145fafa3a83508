#include "motmalin/assoc/clue_generator.hpp"

#include <algorithm>
#include <limits>

#include "motmalin/game/errors.hpp"

namespace motmalin::assoc {

namespace {

std::size_t require_word(const EmbeddingStore& store, const std::string& word) {
  const auto idx = store.index_of(word);
  if (!idx) throw AssocError(AssocCode::TargetWordOOV, word);
  return *idx;
}

}  // namespace

bool admissible_clue(const game::Grid& grid, game::Coordinate target, const std::string& word) {
  try {
    if (game::validate_clue(grid, word) != word) return false;
  } catch (const game::RuleError&) {
    return false;
  }
  const auto [column_word, row_word] = grid.words_at(target);
  return game::common_prefix_length(word, column_word) < kVariantPrefix &&
         game::common_prefix_length(word, row_word) < kVariantPrefix;
}

std::vector<std::string> candidate_pool(const EmbeddingStore& store, const game::Grid& grid, game::Coordinate target,
                                        std::size_t pool_size) {
  const auto [column_word, row_word] = grid.words_at(target);
  require_word(store, column_word);
  require_word(store, row_word);

  std::vector<std::size_t> indices;
  for (const auto& anchor : {column_word, row_word}) {
    for (const auto& n : neighbors(store, anchor, pool_size)) indices.push_back(*store.index_of(n.word));
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  std::vector<std::string> pool;
  for (std::size_t idx : indices) {
    if (admissible_clue(grid, target, store.word(idx))) pool.push_back(store.word(idx));
  }
  return pool;
}

std::vector<ClueCandidate> rank_candidates(const EmbeddingStore& store, const game::Grid& grid,
                                           game::Coordinate target, std::span<const std::string> words,
                                           const ClueParams& params) {
  const auto [column_word, row_word] = grid.words_at(target);
  const std::size_t column_idx = require_word(store, column_word);
  const std::size_t row_idx = require_word(store, row_word);

  std::vector<std::size_t> distractors;
  for (int i = 0; i < game::kBoardSide; ++i) {
    if (i != target.column_index()) {
      if (auto idx = store.index_of(grid.column_words[i])) distractors.push_back(*idx);
    }
    if (i != target.row_index()) {
      if (auto idx = store.index_of(grid.row_words[i])) distractors.push_back(*idx);
    }
  }

  std::vector<std::pair<std::size_t, ClueCandidate>> scored;
  std::vector<std::size_t> seen;
  for (const auto& raw : words) {
    const std::string word = game::normalize_word(raw);
    const auto idx = store.index_of(word);
    if (!idx || !admissible_clue(grid, target, word)) continue;
    if (std::find(seen.begin(), seen.end(), *idx) != seen.end()) continue;
    seen.push_back(*idx);

    ClueCandidate cand;
    cand.word = word;
    cand.pair_score =
        combine_scores(params.combine, store.similarity(*idx, column_idx), store.similarity(*idx, row_idx));
    cand.distractor_score = distractors.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
    for (std::size_t d : distractors) cand.distractor_score = std::max(cand.distractor_score, store.similarity(*idx, d));
    cand.total = cand.pair_score - params.distractor_weight * cand.distractor_score;
    scored.emplace_back(*idx, std::move(cand));
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.second.total > b.second.total || (a.second.total == b.second.total && a.first < b.first);
  });

  std::vector<ClueCandidate> out;
  out.reserve(scored.size());
  for (auto& [idx, cand] : scored) out.push_back(std::move(cand));
  return out;
}

std::optional<ClueCandidate> select_clue(const EmbeddingStore& store, const game::Grid& grid,
                                         game::Coordinate target, const game::CellSet& completed,
                                         std::span<const std::string> words, const ClueParams& params) {
  for (auto& cand : rank_candidates(store, grid, target, words, params)) {
    if (!params.require_self_consistency) return cand;
    const auto inference = infer_coordinates(store, cand.word, grid, completed, params.combine, params.beta);
    if (!inference.cells.empty() && inference.top().cell == target) return cand;
  }
  return std::nullopt;
}

std::optional<ClueCandidate> generate_clue(const EmbeddingStore& store, const game::Grid& grid,
                                           game::Coordinate target, const game::CellSet& completed,
                                           const ClueParams& params) {
  const auto pool = candidate_pool(store, grid, target, params.pool_size);
  return select_clue(store, grid, target, completed, pool, params);
}

}  // namespace motmalin::assoc
