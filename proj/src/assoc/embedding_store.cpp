#include "motmalin/assoc/embedding_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "motmalin/game/grid.hpp"

namespace motmalin::assoc {

namespace {

double dot(std::span<const double> u, std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw AssocError(AssocCode::DimMismatch, std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  }
  const double nu = std::sqrt(dot(u, u));
  const double nv = std::sqrt(dot(v, v));
  if (nu == 0.0 || nv == 0.0) throw AssocError(AssocCode::ZeroVector, "");
  return clamp_unit(dot(u, v) / (nu * nv));
}

EmbeddingStore EmbeddingStore::from_entries(int dim, std::vector<Entry> entries) {
  if (dim <= 0) throw AssocError(AssocCode::BadHeader, "dimension must be positive");
  EmbeddingStore store;
  store.dim_ = dim;
  store.words_.reserve(entries.size());
  store.data_.reserve(entries.size() * static_cast<std::size_t>(dim));
  store.norms_.reserve(entries.size());
  for (auto& entry : entries) {
    std::string word = game::normalize_word(entry.word);
    if (word.empty()) throw AssocError(AssocCode::BadValue, "empty word");
    if (entry.vector.size() != static_cast<std::size_t>(dim)) {
      throw AssocError(AssocCode::DimMismatch, word + " has " + std::to_string(entry.vector.size()) + " components");
    }
    const double norm = std::sqrt(dot(entry.vector, entry.vector));
    if (norm == 0.0) throw AssocError(AssocCode::ZeroVector, word);
    if (!std::isfinite(norm)) throw AssocError(AssocCode::BadValue, word);
    if (!store.index_.emplace(word, store.words_.size()).second) throw AssocError(AssocCode::DuplicateWord, word);
    store.words_.push_back(std::move(word));
    store.data_.insert(store.data_.end(), entry.vector.begin(), entry.vector.end());
    store.norms_.push_back(norm);
  }
  return store;
}

std::optional<std::size_t> EmbeddingStore::index_of(std::string_view normalized_word) const {
  auto it = index_.find(std::string(normalized_word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double EmbeddingStore::similarity(std::size_t a, std::size_t b) const {
  return clamp_unit(dot(vector(a), vector(b)) / (norms_[a] * norms_[b]));
}

EmbeddingStore load_embeddings(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw AssocError(AssocCode::BadHeader, "empty input");
  const auto header = split_ws(line);
  long long count = 0;
  int dim = 0;
  if (header.size() != 2 || !parse_number(header[0], count) || !parse_number(header[1], dim) || count < 0 ||
      dim <= 0) {
    throw AssocError(AssocCode::BadHeader, "expected '<count> <dim>', got '" + line + "'");
  }

  std::vector<EmbeddingStore::Entry> entries;
  entries.reserve(static_cast<std::size_t>(count));
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (entries.size() == static_cast<std::size_t>(count)) {
      throw AssocError(AssocCode::BadHeader, "more than " + std::to_string(count) + " entries (line " +
                                                 std::to_string(line_no) + ")");
    }
    if (tokens.size() != static_cast<std::size_t>(dim) + 1) {
      throw AssocError(AssocCode::DimMismatch, "line " + std::to_string(line_no) + ": expected " +
                                                   std::to_string(dim) + " components, got " +
                                                   std::to_string(tokens.size() - 1));
    }
    EmbeddingStore::Entry entry{std::string(tokens[0]), std::vector<double>(static_cast<std::size_t>(dim))};
    for (int i = 0; i < dim; ++i) {
      if (!parse_number(tokens[static_cast<std::size_t>(i) + 1], entry.vector[static_cast<std::size_t>(i)])) {
        throw AssocError(AssocCode::BadValue, "line " + std::to_string(line_no) + ": '" +
                                                  std::string(tokens[static_cast<std::size_t>(i) + 1]) + "'");
      }
    }
    entries.push_back(std::move(entry));
  }
  if (entries.size() != static_cast<std::size_t>(count)) {
    throw AssocError(AssocCode::BadHeader, "header declares " + std::to_string(count) + " entries, found " +
                                               std::to_string(entries.size()));
  }
  return EmbeddingStore::from_entries(dim, std::move(entries));
}

EmbeddingStore load_embeddings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AssocError(AssocCode::MissingFile, path);
  return load_embeddings(in);
}

std::vector<Neighbor> neighbors(const EmbeddingStore& store, std::string_view word, std::size_t k) {
  const std::string key = game::normalize_word(word);
  const auto query = store.index_of(key);
  if (!query) throw AssocError(AssocCode::WordOOV, key);
  if (k == 0) return {};

  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(store.size());
  for (std::size_t i = 0; i < store.size(); ++i) {
    if (i != *query) scored.emplace_back(store.similarity(*query, i), i);
  }
  const std::size_t take = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take), scored.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
  std::vector<Neighbor> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back({store.word(scored[i].second), scored[i].first});
  return out;
}

}  // namespace motmalin::assoc
