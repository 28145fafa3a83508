#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "motmalin/assoc/errors.hpp"

namespace motmalin::assoc {

// u.v / (|u||v|), clamped to [-1, 1].
// Throws AssocError(DimMismatch | ZeroVector).
double cosine(std::span<const double> u, std::span<const double> v);

// Immutable word -> vector table. Words are normalized; entries keep the
// order of the source, which is the tie-break order for neighbor queries.
class EmbeddingStore {
 public:
  struct Entry {
    std::string word;
    std::vector<double> vector;
  };

  // Validates and normalizes. Throws AssocError(BadHeader | DimMismatch |
  // DuplicateWord | ZeroVector).
  static EmbeddingStore from_entries(int dim, std::vector<Entry> entries);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }

  const std::string& word(std::size_t index) const { return words_[index]; }
  const std::vector<std::string>& words() const noexcept { return words_; }
  std::span<const double> vector(std::size_t index) const {
    return {data_.data() + index * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  double norm(std::size_t index) const { return norms_[index]; }

  std::optional<std::size_t> index_of(std::string_view normalized_word) const;
  bool contains(std::string_view normalized_word) const { return index_of(normalized_word).has_value(); }

  // Cosine between two stored entries, using the cached norms.
  double similarity(std::size_t a, std::size_t b) const;

 private:
  EmbeddingStore() = default;

  int dim_ = 0;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Text format: "<count> <dim>" header, then "<word> <v1> ... <vdim>" per line.
EmbeddingStore load_embeddings(std::istream& in);
EmbeddingStore load_embeddings_file(const std::string& path);

struct Neighbor {
  std::string word;
  double similarity = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// k most similar vocabulary words, excluding the query; ties keep source order.
// Throws AssocError(WordOOV).
std::vector<Neighbor> neighbors(const EmbeddingStore& store, std::string_view word, std::size_t k);

}  // namespace motmalin::assoc
