#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "motmalin/game/coordinate.hpp"

namespace motmalin::game {

// Lowercase (root locale), NFC-normalize, and trim Unicode whitespace.
std::string normalize_word(std::string_view raw);

// True when the text contains no Unicode whitespace.
bool is_single_token(std::string_view word);

// Length, in code points, of the common prefix of two UTF-8 strings.
std::size_t common_prefix_length(std::string_view a, std::string_view b);

struct Grid {
  std::array<std::string, kBoardSide> column_words;
  std::array<std::string, kBoardSide> row_words;

  const std::string& column_word(Coordinate c) const { return column_words[c.column_index()]; }
  const std::string& row_word(Coordinate c) const { return row_words[c.row_index()]; }
  std::pair<const std::string&, const std::string&> words_at(Coordinate c) const {
    return {column_word(c), row_word(c)};
  }

  std::array<std::string, 2 * kBoardSide> all_words() const;
  bool contains(std::string_view normalized_word) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

// Normalizes the eight words and checks they are distinct single tokens.
// Throws RuleError(DuplicateGridWord | InvalidGridWord).
Grid make_grid(const std::array<std::string, kBoardSide>& columns,
               const std::array<std::string, kBoardSide>& rows);

void validate_grid(const Grid& grid);

// Normalizes a clue and checks it is one token that is not on the grid.
// Throws RuleError(EmptyClue | MultiToken | GridWordClue).
std::string validate_clue(const Grid& grid, std::string_view raw);

}  // namespace motmalin::game
