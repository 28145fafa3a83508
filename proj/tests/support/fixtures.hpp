#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "motmalin/assoc/embedding_store.hpp"
#include "motmalin/game/grid.hpp"
#include "motmalin/game/rules.hpp"

namespace motmalin::testing {

inline std::string data_path(const std::string& name) { return std::string(MOTMALIN_TEST_DATA) + "/" + name; }

inline game::Grid fixture_grid() {
  return game::make_grid({"dog", "teacher", "water", "music"}, {"house", "fire", "tree", "ball"});
}

// teacher, ball and coach with the remaining grid words orthogonal to coach.
inline std::vector<assoc::EmbeddingStore::Entry> fixture_entries() {
  return {
      {"teacher", {1, 0, 0}},        {"coach", {0.7, 0.7, 0}},     {"ball", {0, 1, 0}},
      {"dog", {0, 0, 1}},            {"water", {0.1, -0.1, 1}},    {"music", {-0.1, 0.1, 1}},
      {"house", {0, 0, -1}},         {"fire", {0.2, -0.2, -1}},    {"tree", {-0.2, 0.2, 1}},
  };
}

inline assoc::EmbeddingStore fixture_store() { return assoc::EmbeddingStore::from_entries(3, fixture_entries()); }

inline game::Seats default_seats() {
  game::Seats seats;
  for (int i = 0; i < game::kSeatCount; ++i) seats[i] = game::Seat{i, game::Occupant::Human, {}};
  return seats;
}

inline game::GameState fixture_game(std::uint64_t seed = 7) {
  const auto seats = default_seats();
  return game::new_game(fixture_grid(), seats, seed);
}

// First seed whose deal gives `seat` the card `cell`.
inline game::GameState game_with_card(int seat, game::Coordinate cell) {
  for (std::uint64_t seed = 0;; ++seed) {
    auto state = fixture_game(seed);
    if (state.hands[seat] == cell) return state;
  }
}

// Small deterministic generator for property tests, separate from the
// library's own RNG.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double real(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return real(0, 1) < p; }

  std::vector<double> vec(int dim) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    do {
      for (auto& x : v) x = real(-1, 1);
    } while (std::all_of(v.begin(), v.end(), [](double x) { return std::abs(x) < 1e-3; }));
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace motmalin::testing
