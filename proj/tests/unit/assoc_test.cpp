#include <doctest.h>

#include <cmath>
#include <sstream>

#include "motmalin/assoc/clue_generator.hpp"
#include "motmalin/assoc/errors.hpp"
#include "motmalin/assoc/inference.hpp"
#include "motmalin/game/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/random_lexicon.hpp"

using namespace motmalin;
using namespace motmalin::assoc;
using motmalin::testing::fixture_entries;
using motmalin::testing::fixture_grid;
using motmalin::testing::fixture_store;
using motmalin::testing::Gen;

namespace {

const double kHalfRoot2 = std::sqrt(2.0) / 2;

AssocCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AssocError& e) {
    return e.code();
  }
  FAIL("no AssocError thrown");
  return AssocCode::Disabled;
}

EmbeddingStore parse(const std::string& text) {
  std::istringstream in(text);
  return load_embeddings(in);
}

std::vector<oracle::Word> oracle_words(const std::vector<EmbeddingStore::Entry>& entries) {
  std::vector<oracle::Word> out;
  for (const auto& e : entries) out.push_back({e.word, e.vector});
  return out;
}

game::Coordinate C(std::string_view s) { return game::parse_coordinate(s); }

}  // namespace

TEST_CASE("load_embeddings reads the header and one word per line") {
  const auto store = parse("4 3\ncoach 0.7 0.7 0\nTeacher 1 0 0\nball 0 1 0\ndog 0 0 1\n");
  CHECK(store.size() == 4);
  CHECK(store.dim() == 3);
  CHECK(store.words() == std::vector<std::string>{"coach", "teacher", "ball", "dog"});
  CHECK(store.contains("teacher"));
  CHECK(store.norm(0) == doctest::Approx(std::sqrt(0.98)));

  CHECK(code_of([] { parse("4 3\ncoach 0.7 0.7\n"); }) == AssocCode::DimMismatch);
  CHECK(code_of([] { parse("2 3\ncoach 1 0 0\nCoach 0 1 0\n"); }) == AssocCode::DuplicateWord);
  CHECK(code_of([] { parse("1 3\nnull 0 0 0\n"); }) == AssocCode::ZeroVector);
  CHECK(code_of([] { parse("three 3\n"); }) == AssocCode::BadHeader);
  CHECK(code_of([] { parse(""); }) == AssocCode::BadHeader);
  CHECK(code_of([] { parse("3 3\ncoach 1 0 0\n"); }) == AssocCode::BadHeader);
  CHECK(code_of([] { parse("1 3\ncoach 1 x 0\n"); }) == AssocCode::BadValue);
  CHECK(code_of([] { load_embeddings_file("/nonexistent/lexicon.vec"); }) == AssocCode::MissingFile);
}

TEST_CASE("fixture lexicon file matches the in-code fixture") {
  const auto file = load_embeddings_file(testing::data_path("fixture.vec"));
  const auto mem = fixture_store();
  REQUIRE(file.size() == mem.size());
  for (std::size_t i = 0; i < mem.size(); ++i) {
    CHECK(file.word(i) == mem.word(i));
    for (int d = 0; d < 3; ++d) CHECK(file.vector(i)[d] == mem.vector(i)[d]);
  }
}

TEST_CASE("cosine examples") {
  const std::vector<double> x{1, 0, 0}, y{0, 1, 0}, c{0.7, 0.7, 0};
  CHECK(cosine(x, x) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine(x, y) == 0.0);
  CHECK(cosine(c, x) == doctest::Approx(kHalfRoot2).epsilon(1e-12));
  CHECK(code_of([&] { cosine(x, std::vector<double>{1, 0}); }) == AssocCode::DimMismatch);
  CHECK(code_of([&] { cosine(x, std::vector<double>{0, 0, 0}); }) == AssocCode::ZeroVector);
}

TEST_CASE("cosine properties on random vectors") {
  Gen g(17);
  for (int i = 0; i < 2000; ++i) {
    const int dim = g.range(1, 12);
    const auto u = g.vec(dim);
    const auto v = g.vec(dim);
    const double a = g.real(0.001, 1000);
    std::vector<double> au = u;
    for (auto& x : au) x *= a;
    CHECK(std::abs(cosine(u, v) - cosine(v, u)) <= 1e-9);
    CHECK(std::abs(cosine(u, u) - 1.0) <= 1e-6);
    CHECK(std::abs(cosine(u, v)) <= 1.0 + 1e-9);
    CHECK(std::abs(cosine(au, v) - cosine(u, v)) <= 1e-9);
    CHECK(std::abs(cosine(u, v) - oracle::cos(u, v)) <= 1e-12);
  }
}

TEST_CASE("neighbors rank by cosine with source-order ties") {
  const auto store = fixture_store();
  const auto top = neighbors(store, "teacher", 1);
  REQUIRE(top.size() == 1);
  CHECK(top[0].word == "coach");
  CHECK(top[0].similarity == doctest::Approx(kHalfRoot2).epsilon(1e-12));
  CHECK(neighbors(store, "teacher", 0).empty());
  CHECK(code_of([&] { neighbors(store, "zzz", 3); }) == AssocCode::WordOOV);
  CHECK(neighbors(store, "teacher", 100).size() == store.size() - 1);

  // teacher and ball tie against coach; teacher comes first in the file.
  const auto from_coach = neighbors(store, "coach", 2);
  CHECK(from_coach[0].word == "teacher");
  CHECK(from_coach[1].word == "ball");

  const auto vocab = oracle_words(fixture_entries());
  for (const auto& w : store.words()) {
    const auto expected = oracle::nearest(vocab, w, 5);
    const auto got = neighbors(store, w, 5);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].word == expected[i].first);
      CHECK(got[i].similarity == doctest::Approx(expected[i].second).epsilon(1e-12));
    }
  }
}

TEST_CASE("infer_coordinates on the fixture puts coach on B4") {
  const auto store = fixture_store();
  const auto result = infer_coordinates(store, "coach", fixture_grid(), {});
  CHECK_FALSE(result.oov);
  REQUIRE(result.cells.size() == 16);
  CHECK(result.top().cell == C("B4"));
  CHECK(result.top().score == doctest::Approx(kHalfRoot2).epsilon(1e-12));
  // Remaining cells tie at 0 and follow row-major order.
  CHECK(result.cells[1].cell == C("A1"));
  CHECK(result.cells[2].cell == C("B1"));
  // softmax(10 * score): e^{10 s} / (e^{10 s} + 15)
  const double expected = std::exp(10 * kHalfRoot2) / (std::exp(10 * kHalfRoot2) + 15);
  CHECK(result.top().probability == doctest::Approx(expected).epsilon(1e-12));

  const auto capital = infer_coordinates(store, " COACH", fixture_grid(), {});
  CHECK(capital.top().cell == C("B4"));

  const auto mean = infer_coordinates(store, "coach", fixture_grid(), {}, Combine::Mean);
  CHECK(mean.top().cell == C("B4"));
  CHECK(mean.cells[1].score == doctest::Approx(kHalfRoot2 / 2));
}

TEST_CASE("out-of-vocabulary clues give a flagged uniform ranking") {
  const auto result = infer_coordinates(fixture_store(), "zzz", fixture_grid(), {});
  CHECK(result.oov);
  REQUIRE(result.cells.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(result.cells[i].cell == game::Coordinate::from_index(static_cast<int>(i)));
    CHECK(result.cells[i].probability == doctest::Approx(1.0 / 16));
    CHECK(result.cells[i].score == 0.0);
  }
  game::CellSet completed;
  completed.insert(C("A1"));
  const auto fewer = infer_coordinates(fixture_store(), "zzz", fixture_grid(), completed);
  CHECK(fewer.cells.size() == 15);
  CHECK(fewer.cells[0].probability == doctest::Approx(1.0 / 15));
}

TEST_CASE("completed cells are left out of the ranking") {
  game::CellSet completed;
  completed.insert(C("B4"));
  const auto result = infer_coordinates(fixture_store(), "coach", fixture_grid(), completed);
  CHECK(result.cells.size() == 15);
  for (const auto& c : result.cells) CHECK(c.cell != C("B4"));
}

TEST_CASE("infer_coordinates matches the brute-force oracle on random lexicons") {
  Gen g(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lex = testing::random_lexicon(g);
    const auto store = lex.store();
    const auto grid = lex.grid();
    std::vector<int> completed_idx;
    game::CellSet completed;
    for (int i = 0; i < 16; ++i) {
      if (g.chance(0.2) && completed_idx.size() < 15) {
        completed_idx.push_back(i);
        completed.insert(game::Coordinate::from_index(i));
      }
    }
    const bool use_min = g.chance(0.7);
    const auto& clue = lex.words[static_cast<std::size_t>(g.range(0, int(lex.words.size()) - 1))];
    const auto expected = oracle::rank_cells(lex.words, clue.v, lex.columns, lex.rows, completed_idx, use_min);
    const auto got = infer_coordinates(store, clue.text, grid, completed, use_min ? Combine::Min : Combine::Mean, 10);
    REQUIRE(got.cells.size() == expected.size());
    double total = 0;
    long double z = 0;
    for (const auto& e : expected) z += std::exp(10.0L * (e.score - expected.front().score));
    for (std::size_t i = 0; i < got.cells.size(); ++i) {
      CHECK(got.cells[i].cell.index() == expected[i].index);
      CHECK(got.cells[i].score == doctest::Approx(expected[i].score).epsilon(1e-12));
      const double p = static_cast<double>(std::exp(10.0L * (expected[i].score - expected.front().score)) / z);
      CHECK(std::abs(got.cells[i].probability - p) <= 1e-9);
      if (i > 0) CHECK(got.cells[i].score <= got.cells[i - 1].score);
      total += got.cells[i].probability;
    }
    CHECK(std::abs(total - 1.0) <= 1e-9);
  }
}

TEST_CASE("scaling the store leaves rankings unchanged") {
  Gen g(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto lex = testing::random_lexicon(g);
    const auto store = lex.store();
    auto scaled = lex;
    const double a = g.real(0.01, 100);
    for (auto& w : scaled.words) {
      for (auto& x : w.v) x *= a;
    }
    const auto scaled_store = scaled.store();
    for (const auto& w : lex.words) {
      const auto r1 = infer_coordinates(store, w.text, lex.grid(), {});
      const auto r2 = infer_coordinates(scaled_store, w.text, lex.grid(), {});
      for (std::size_t i = 0; i < r1.cells.size(); ++i) CHECK(r1.cells[i].cell == r2.cells[i].cell);
    }
  }
}

TEST_CASE("generate_clue finds coach for B4 on the fixture") {
  const auto store = fixture_store();
  const auto clue = generate_clue(store, fixture_grid(), C("B4"));
  REQUIRE(clue.has_value());
  CHECK(clue->word == "coach");
  CHECK(clue->pair_score == doctest::Approx(kHalfRoot2).epsilon(1e-12));
  CHECK(clue->distractor_score == doctest::Approx(0.0));
  CHECK(clue->total == doctest::Approx(kHalfRoot2).epsilon(1e-12));

  // Exhaustive scan: coach has the best total of every admissible word.
  const auto vocab = oracle_words(fixture_entries());
  const auto* teacher = oracle::find(vocab, "teacher");
  const auto* ball = oracle::find(vocab, "ball");
  double best = -10;
  std::string best_word;
  for (const auto& w : vocab) {
    if (fixture_grid().contains(w.text)) continue;
    double distractor = -1;
    for (const auto& g : fixture_grid().all_words()) {
      if (g != "teacher" && g != "ball") distractor = std::max(distractor, oracle::cos(w.v, oracle::find(vocab, g)->v));
    }
    const double total = std::min(oracle::cos(w.v, teacher->v), oracle::cos(w.v, ball->v)) - 0.5 * distractor;
    if (total > best) {
      best = total;
      best_word = w.text;
    }
  }
  CHECK(best_word == "coach");
}

TEST_CASE("generate_clue returns none when a distractor cell dominates every candidate") {
  // dog (column A) and house (row 1) sit right next to coach and lesson, so
  // A1 beats B4 for every clue the vocabulary offers.
  std::vector<EmbeddingStore::Entry> entries{
      {"teacher", {1, 0, 0}},      {"coach", {0.7, 0.7, 0}},      {"lesson", {0.9, 0.1, 0}},
      {"ball", {0, 1, 0}},         {"dog", {0.7, 0.7, 0.1}},      {"house", {0.7, 0.7, -0.1}},
      {"water", {0.1, -0.1, 1}},   {"music", {-0.1, 0.1, 1}},     {"fire", {0.2, -0.2, -1}},
      {"tree", {-0.2, 0.2, 1}},
  };
  const auto store = EmbeddingStore::from_entries(3, entries);
  const auto grid = fixture_grid();
  // Oracle: no non-grid word ranks B4 first.
  const auto vocab = oracle_words(entries);
  const auto cols = std::vector<std::string>(grid.column_words.begin(), grid.column_words.end());
  const auto rows = std::vector<std::string>(grid.row_words.begin(), grid.row_words.end());
  for (const auto& w : vocab) {
    if (grid.contains(w.text)) continue;
    CHECK(oracle::rank_cells(vocab, w.v, cols, rows, {}).front().index != C("B4").index());
  }
  CHECK_FALSE(generate_clue(store, grid, C("B4")).has_value());

  ClueParams ungated;
  ungated.require_self_consistency = false;
  const auto raw = generate_clue(store, grid, C("B4"), {}, ungated);
  REQUIRE(raw.has_value());
}

TEST_CASE("grid words and prefix variants never enter the pool") {
  std::vector<EmbeddingStore::Entry> entries = fixture_entries();
  entries.push_back({"teach", {1, 0.9, 0}});
  entries.push_back({"balls", {0.9, 1, 0}});
  entries.push_back({"trainer", {0.6, 0.6, 0.01}});
  const auto store = EmbeddingStore::from_entries(3, entries);
  const auto pool = candidate_pool(store, fixture_grid(), C("B4"), 50);
  for (const auto& w : pool) {
    CHECK_FALSE(fixture_grid().contains(w));
    CHECK(w != "teach");
    CHECK(w != "balls");
  }
  CHECK(std::find(pool.begin(), pool.end(), "coach") != pool.end());
  CHECK(std::find(pool.begin(), pool.end(), "trainer") != pool.end());
  CHECK_FALSE(admissible_clue(fixture_grid(), C("B4"), "water"));
  CHECK_FALSE(admissible_clue(fixture_grid(), C("B4"), "teach"));
  CHECK(admissible_clue(fixture_grid(), C("C3"), "teach"));
  CHECK(generate_clue(store, fixture_grid(), C("B4"))->word == "coach");
}

TEST_CASE("generate_clue needs both target words in the lexicon") {
  std::vector<EmbeddingStore::Entry> entries = fixture_entries();
  entries.erase(entries.begin() + 2);  // ball
  const auto store = EmbeddingStore::from_entries(3, entries);
  CHECK(code_of([&] { generate_clue(store, fixture_grid(), C("B4")); }) == AssocCode::TargetWordOOV);
}

TEST_CASE("generated clues are valid and self-consistent on random lexicons") {
  Gen g(77);
  int produced = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto lex = testing::random_lexicon(g);
    const auto store = lex.store();
    const auto grid = lex.grid();
    for (const auto& cell : game::all_coordinates()) {
      const auto clue = generate_clue(store, grid, cell);
      if (!clue) continue;
      ++produced;
      CHECK(game::validate_clue(grid, clue->word) == clue->word);
      CHECK(infer_coordinates(store, clue->word, grid, {}).top().cell == cell);
      CHECK(clue->total == doctest::Approx(clue->pair_score - 0.5 * clue->distractor_score));
    }
  }
  CHECK(produced > 100);
}
