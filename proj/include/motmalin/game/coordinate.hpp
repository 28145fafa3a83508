#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace motmalin::game {

inline constexpr int kBoardSide = 4;
inline constexpr int kCellCount = kBoardSide * kBoardSide;

enum class Column : std::uint8_t { A, B, C, D };

// A cell of the 4x4 board: column letter A-D, row number 1-4.
// Ordering is row-major (A1, B1, C1, D1, A2, ...), which is also the
// tie-break order used everywhere cells are ranked.
struct Coordinate {
  Column column = Column::A;
  int row = 1;

  constexpr int column_index() const noexcept { return static_cast<int>(column); }
  constexpr int row_index() const noexcept { return row - 1; }
  constexpr int index() const noexcept { return row_index() * kBoardSide + column_index(); }

  static constexpr Coordinate from_index(int index) noexcept {
    return Coordinate{static_cast<Column>(index % kBoardSide), index / kBoardSide + 1};
  }

  std::string to_string() const;

  friend constexpr bool operator==(const Coordinate&, const Coordinate&) = default;
  friend constexpr std::strong_ordering operator<=>(const Coordinate& a, const Coordinate& b) {
    return a.index() <=> b.index();
  }
};

constexpr std::array<Coordinate, kCellCount> all_coordinates() {
  std::array<Coordinate, kCellCount> cells{};
  for (int i = 0; i < kCellCount; ++i) cells[i] = Coordinate::from_index(i);
  return cells;
}

// Case-insensitive "B4"-style parse with optional surrounding whitespace.
// Throws RuleError(BadCoordinate).
Coordinate parse_coordinate(std::string_view text);

// Fixed-size set of cells, iterated in row-major order.
class CellSet {
 public:
  CellSet() = default;

  bool contains(Coordinate c) const { return bits_.test(c.index()); }
  void insert(Coordinate c) { bits_.set(c.index()); }
  void erase(Coordinate c) { bits_.reset(c.index()); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  bool is_subset_of(const CellSet& other) const { return (bits_ & ~other.bits_).none(); }

  std::vector<Coordinate> to_vector() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::bitset<kCellCount> bits_;
};

}  // namespace motmalin::game
