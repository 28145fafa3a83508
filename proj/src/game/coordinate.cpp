#include "motmalin/game/coordinate.hpp"

#include <cctype>

#include "motmalin/game/errors.hpp"

namespace motmalin::game {

std::string Coordinate::to_string() const {
  std::string s;
  s += static_cast<char>('A' + column_index());
  s += static_cast<char>('0' + row);
  return s;
}

Coordinate parse_coordinate(std::string_view text) {
  auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() != 2) throw RuleError(RuleCode::BadCoordinate, std::string(text));
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const char digit = text[1];
  if (letter < 'A' || letter > 'D' || digit < '1' || digit > '4') {
    throw RuleError(RuleCode::BadCoordinate, std::string(text));
  }
  return Coordinate{static_cast<Column>(letter - 'A'), digit - '0'};
}

std::vector<Coordinate> CellSet::to_vector() const {
  std::vector<Coordinate> out;
  out.reserve(bits_.count());
  for (int i = 0; i < kCellCount; ++i) {
    if (bits_.test(i)) out.push_back(Coordinate::from_index(i));
  }
  return out;
}

}  // namespace motmalin::game
