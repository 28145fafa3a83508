#include "motmalin/assoc/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace motmalin::assoc {

std::string_view to_string(Combine combine) { return combine == Combine::Min ? "min" : "mean"; }

Combine combine_from_string(std::string_view name) {
  if (name == "min") return Combine::Min;
  if (name == "mean") return Combine::Mean;
  throw std::invalid_argument("unknown combine function '" + std::string(name) + "'");
}

std::optional<AxisSimilarities> axis_similarities(const EmbeddingStore& store, std::string_view clue,
                                                  const game::Grid& grid) {
  const auto clue_index = store.index_of(game::normalize_word(clue));
  if (!clue_index) return std::nullopt;
  auto sim = [&](const std::string& word) {
    const auto idx = store.index_of(word);
    return idx ? store.similarity(*clue_index, *idx) : 0.0;
  };
  AxisSimilarities out;
  for (int i = 0; i < game::kBoardSide; ++i) {
    out.columns[i] = sim(grid.column_words[i]);
    out.rows[i] = sim(grid.row_words[i]);
  }
  return out;
}

Inference infer_coordinates(const EmbeddingStore& store, std::string_view clue, const game::Grid& grid,
                            const game::CellSet& completed, Combine combine, double beta) {
  Inference result;
  const auto open_cells = [&] {
    std::vector<game::Coordinate> cells;
    for (const auto& c : game::all_coordinates()) {
      if (!completed.contains(c)) cells.push_back(c);
    }
    return cells;
  }();
  if (open_cells.empty()) return result;

  const auto axes = axis_similarities(store, clue, grid);
  if (!axes) {
    result.oov = true;
    const double p = 1.0 / static_cast<double>(open_cells.size());
    for (const auto& c : open_cells) result.cells.push_back({c, 0.0, p});
    return result;
  }

  result.cells.reserve(open_cells.size());
  for (const auto& c : open_cells) {
    result.cells.push_back({c, combine_scores(combine, axes->columns[c.column_index()], axes->rows[c.row_index()]), 0.0});
  }
  // open_cells is row-major, so a stable sort keeps row-major order among ties.
  std::stable_sort(result.cells.begin(), result.cells.end(),
                   [](const CellScore& a, const CellScore& b) { return a.score > b.score; });

  const double top = result.cells.front().score;
  double total = 0.0;
  for (auto& cs : result.cells) {
    cs.probability = std::exp(beta * (cs.score - top));
    total += cs.probability;
  }
  for (auto& cs : result.cells) cs.probability /= total;
  return result;
}

}  // namespace motmalin::assoc
