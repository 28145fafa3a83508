#pragma once

#include <string>
#include <vector>

#include "motmalin/assoc/embedding_store.hpp"
#include "motmalin/game/grid.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace motmalin::testing {

struct ToyLexicon {
  int dim = 0;
  std::vector<oracle::Word> words;
  std::vector<std::string> columns;
  std::vector<std::string> rows;

  assoc::EmbeddingStore store() const {
    std::vector<assoc::EmbeddingStore::Entry> entries;
    for (const auto& w : words) entries.push_back({w.text, w.v});
    return assoc::EmbeddingStore::from_entries(dim, std::move(entries));
  }
  game::Grid grid() const {
    return game::make_grid({columns[0], columns[1], columns[2], columns[3]}, {rows[0], rows[1], rows[2], rows[3]});
  }
};

// dim 3-10, 12-50 words; the grid takes 8 of them at random.
inline ToyLexicon random_lexicon(Gen& g) {
  ToyLexicon lex;
  lex.dim = g.range(3, 10);
  const int size = g.range(12, 50);
  for (int i = 0; i < size; ++i) lex.words.push_back({"w" + std::to_string(i), g.vec(lex.dim)});
  std::vector<int> order(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = size - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(g.range(0, i))]);
  for (int i = 0; i < 4; ++i) lex.columns.push_back(lex.words[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].text);
  for (int i = 4; i < 8; ++i) lex.rows.push_back(lex.words[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].text);
  return lex;
}

}  // namespace motmalin::testing
