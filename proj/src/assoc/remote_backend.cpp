#include "motmalin/assoc/remote_backend.hpp"

#include <httplib.h>

#include <json.hpp>

#include "motmalin/game/grid.hpp"

namespace motmalin::assoc {

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  const auto scheme = url.find("://");
  const auto host_start = scheme == std::string::npos ? 0 : scheme + 3;
  const auto slash = url.find('/', host_start);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

}  // namespace

std::vector<std::string> parse_word_list(std::string_view body) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto end = body.find_first_of(",\n", start);
    const auto item = body.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::string word = game::normalize_word(item);
    if (!word.empty()) words.push_back(std::move(word));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return words;
}

std::vector<std::string> remote_candidates(const GeneratorBackend& backend, const game::Grid& grid,
                                           game::Coordinate target) {
  if (backend.kind == GeneratorBackend::Kind::LexicalGraph) {
    throw AssocError(AssocCode::Disabled, "lexical-graph backend is not available");
  }
  if (backend.kind != GeneratorBackend::Kind::Remote || !backend.remote || backend.remote->endpoint.empty()) {
    throw AssocError(AssocCode::Disabled, "no remote generator configured");
  }
  const auto& config = *backend.remote;
  const auto [origin, path] = split_endpoint(config.endpoint);

  httplib::Client client(origin);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(config.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const auto [column_word, row_word] = grid.words_at(target);
  const nlohmann::json request{{"words", {column_word, row_word}}, {"template", config.template_id}};
  auto response = client.Post(path, request.dump(), "application/json");
  if (!response) {
    const auto err = response.error();
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read || err == httplib::Error::Write) {
      throw AssocError(AssocCode::Timeout, config.endpoint + " (" + httplib::to_string(err) + ")");
    }
    throw AssocError(AssocCode::BadResponse, config.endpoint + " (" + httplib::to_string(err) + ")");
  }
  if (response->status < 200 || response->status >= 300) {
    throw AssocError(AssocCode::BadResponse, "HTTP status " + std::to_string(response->status));
  }
  auto words = parse_word_list(response->body);
  if (words.empty()) throw AssocError(AssocCode::BadResponse, "empty word list");
  return words;
}

std::optional<GeneratedClue> generate_clue_with_backend(const EmbeddingStore& store, const game::Grid& grid,
                                                        game::Coordinate target, const game::CellSet& completed,
                                                        const ClueParams& params, const GeneratorBackend& backend) {
  if (backend.kind != GeneratorBackend::Kind::Embedding) {
    try {
      const auto words = remote_candidates(backend, grid, target);
      if (auto cand = select_clue(store, grid, target, completed, words, params)) {
        return GeneratedClue{std::move(*cand), true};
      }
    } catch (const AssocError& e) {
      if (e.code() == AssocCode::TargetWordOOV) throw;
    }
  }
  if (auto cand = generate_clue(store, grid, target, completed, params)) return GeneratedClue{std::move(*cand), false};
  return std::nullopt;
}

}  // namespace motmalin::assoc
