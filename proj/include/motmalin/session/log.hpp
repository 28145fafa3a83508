#pragma once

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "motmalin/game/state.hpp"

namespace motmalin::session {

// Record types that are not game events.
inline constexpr const char* kCommandRejected = "CommandRejected";
inline constexpr const char* kAgentInstruction = "AgentInstruction";
inline constexpr const char* kStateDigest = "StateDigest";

struct LogRecord {
  std::uint64_t seq = 0;
  std::int64_t ts = 0;  // ms since session start
  std::string session;
  std::optional<int> actor;  // nullopt: "server"
  std::string type;
  nlohmann::json payload = nlohmann::json::object();
  std::size_t line = 0;  // source line when read from a file; not serialized

  friend bool operator==(const LogRecord& a, const LogRecord& b) {
    return a.seq == b.seq && a.ts == b.ts && a.session == b.session && a.actor == b.actor && a.type == b.type &&
           a.payload == b.payload;
  }
};

nlohmann::json record_to_json(const LogRecord& record);
std::string format_record(const LogRecord& record);  // one JSON line, no newline
LogRecord record_from_json(const nlohmann::json& j);  // throws std::invalid_argument

// Event as a log record: the acting seat moves out of the payload into
// `actor`; private fields stay.
LogRecord record_for_event(const game::GameEvent& event);
game::GameEvent event_from_record(const LogRecord& record);  // throws std::invalid_argument

// Reads JSON Lines; blank lines are skipped. Throws SessionError(CorruptRecord).
std::vector<LogRecord> read_log(std::istream& in);
std::vector<LogRecord> read_log_file(const std::string& path);  // also MissingFile

class LogSink {
 public:
  virtual ~LogSink() = default;
  virtual void append(const LogRecord& record) = 0;
};

class MemoryLog final : public LogSink {
 public:
  void append(const LogRecord& record) override { records_.push_back(record); }
  const std::vector<LogRecord>& records() const noexcept { return records_; }
  std::string text() const;

 private:
  std::vector<LogRecord> records_;
};

// Append-only JSONL file, flushed per record.
class FileLog final : public LogSink {
 public:
  explicit FileLog(const std::string& path);
  void append(const LogRecord& record) override;

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

class NullLog final : public LogSink {
 public:
  void append(const LogRecord&) override {}
};

}  // namespace motmalin::session
