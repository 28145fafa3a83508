#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motmalin/assoc/embedding_store.hpp"
#include "motmalin/game/coordinate.hpp"
#include "motmalin/game/grid.hpp"

namespace motmalin::assoc {

// How the two per-axis similarities of a cell fold into one score.
enum class Combine { Min, Mean };

std::string_view to_string(Combine combine);
Combine combine_from_string(std::string_view name);  // throws std::invalid_argument

inline double combine_scores(Combine combine, double column_sim, double row_sim) {
  return combine == Combine::Min ? (column_sim < row_sim ? column_sim : row_sim) : 0.5 * (column_sim + row_sim);
}

struct CellScore {
  game::Coordinate cell;
  double score = 0.0;
  double probability = 0.0;
};

struct Inference {
  std::vector<CellScore> cells;  // descending score, row-major among ties
  bool oov = false;              // clue unknown: uniform probabilities, zero scores

  const CellScore& top() const { return cells.front(); }
};

// Similarity of a clue to each grid word. Grid words missing from the store
// score 0. nullopt when the clue itself is out of vocabulary.
struct AxisSimilarities {
  std::array<double, game::kBoardSide> columns{};
  std::array<double, game::kBoardSide> rows{};
};
std::optional<AxisSimilarities> axis_similarities(const EmbeddingStore& store, std::string_view clue,
                                                  const game::Grid& grid);

inline constexpr double kDefaultBeta = 10.0;

// Scores every non-completed cell against the clue and turns the scores into
// a softmax distribution with inverse temperature beta.
Inference infer_coordinates(const EmbeddingStore& store, std::string_view clue, const game::Grid& grid,
                            const game::CellSet& completed, Combine combine = Combine::Min,
                            double beta = kDefaultBeta);

}  // namespace motmalin::assoc
