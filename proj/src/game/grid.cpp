#include "motmalin/game/grid.hpp"

#include <algorithm>

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "motmalin/game/errors.hpp"

namespace motmalin::game {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) throw std::runtime_error("ICU NFC normalizer unavailable");
  return *n;
}

}  // namespace

std::string normalize_word(std::string_view raw) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  text.toLower(icu::Locale::getRoot());
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc().normalize(text, status);
  if (U_FAILURE(status)) normalized = text;

  int32_t begin = 0;
  int32_t end = normalized.length();
  while (begin < end && u_isUWhiteSpace(normalized.char32At(begin))) begin = normalized.moveIndex32(begin, 1);
  while (end > begin) {
    const int32_t prev = normalized.moveIndex32(end, -1);
    if (!u_isUWhiteSpace(normalized.char32At(prev))) break;
    end = prev;
  }
  std::string out;
  normalized.tempSubStringBetween(begin, end).toUTF8String(out);
  return out;
}

bool is_single_token(std::string_view word) {
  int32_t i = 0;
  const auto* bytes = reinterpret_cast<const uint8_t*>(word.data());
  const auto length = static_cast<int32_t>(word.size());
  while (i < length) {
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    if (cp < 0 || u_isUWhiteSpace(cp)) return false;
  }
  return true;
}

std::size_t common_prefix_length(std::string_view a, std::string_view b) {
  const auto* pa = reinterpret_cast<const uint8_t*>(a.data());
  const auto* pb = reinterpret_cast<const uint8_t*>(b.data());
  const auto la = static_cast<int32_t>(a.size());
  const auto lb = static_cast<int32_t>(b.size());
  int32_t ia = 0;
  int32_t ib = 0;
  std::size_t count = 0;
  while (ia < la && ib < lb) {
    UChar32 ca;
    UChar32 cb;
    U8_NEXT(pa, ia, la, ca);
    U8_NEXT(pb, ib, lb, cb);
    if (ca != cb || ca < 0) break;
    ++count;
  }
  return count;
}

std::array<std::string, 2 * kBoardSide> Grid::all_words() const {
  std::array<std::string, 2 * kBoardSide> words;
  std::copy(column_words.begin(), column_words.end(), words.begin());
  std::copy(row_words.begin(), row_words.end(), words.begin() + kBoardSide);
  return words;
}

bool Grid::contains(std::string_view normalized_word) const {
  auto eq = [&](const std::string& w) { return w == normalized_word; };
  return std::any_of(column_words.begin(), column_words.end(), eq) ||
         std::any_of(row_words.begin(), row_words.end(), eq);
}

void validate_grid(const Grid& grid) {
  const auto words = grid.all_words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty() || !is_single_token(words[i]) || words[i] != normalize_word(words[i])) {
      throw RuleError(RuleCode::InvalidGridWord, "'" + words[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (words[i] == words[j]) throw RuleError(RuleCode::DuplicateGridWord, words[i]);
    }
  }
}

Grid make_grid(const std::array<std::string, kBoardSide>& columns,
               const std::array<std::string, kBoardSide>& rows) {
  Grid grid;
  for (int i = 0; i < kBoardSide; ++i) {
    grid.column_words[i] = normalize_word(columns[i]);
    grid.row_words[i] = normalize_word(rows[i]);
  }
  validate_grid(grid);
  return grid;
}

std::string validate_clue(const Grid& grid, std::string_view raw) {
  std::string word = normalize_word(raw);
  if (word.empty()) throw RuleError(RuleCode::EmptyClue, "");
  if (!is_single_token(word)) throw RuleError(RuleCode::MultiToken, word);
  if (grid.contains(word)) throw RuleError(RuleCode::GridWordClue, word);
  return word;
}

}  // namespace motmalin::game
