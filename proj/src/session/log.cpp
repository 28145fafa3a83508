#include "motmalin/session/log.hpp"

#include <istream>
#include <sstream>

#include "motmalin/game/codec.hpp"
#include "motmalin/session/errors.hpp"

namespace motmalin::session {

using nlohmann::json;

nlohmann::json record_to_json(const LogRecord& record) {
  json j;
  j["seq"] = record.seq;
  j["ts"] = record.ts;
  j["session"] = record.session;
  j["actor"] = record.actor ? json(*record.actor) : json("server");
  j["type"] = record.type;
  j["payload"] = record.payload;
  return j;
}

std::string format_record(const LogRecord& record) {
  // Field order kept stable for people reading the files.
  nlohmann::ordered_json j;
  j["seq"] = record.seq;
  j["ts"] = record.ts;
  j["session"] = record.session;
  if (record.actor) {
    j["actor"] = *record.actor;
  } else {
    j["actor"] = "server";
  }
  j["type"] = record.type;
  j["payload"] = nlohmann::ordered_json::parse(record.payload.dump());
  return j.dump();
}

LogRecord record_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("record is not an object");
  for (const char* key : {"seq", "ts", "session", "actor", "type", "payload"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing '") + key + "'");
  }
  LogRecord record;
  const json& seq = j.at("seq");
  if (!seq.is_number_unsigned() && !(seq.is_number_integer() && seq.get<std::int64_t>() >= 0)) {
    throw std::invalid_argument("bad 'seq'");
  }
  record.seq = seq.get<std::uint64_t>();
  if (!j.at("ts").is_number_integer()) throw std::invalid_argument("bad 'ts'");
  record.ts = j.at("ts").get<std::int64_t>();
  if (!j.at("session").is_string()) throw std::invalid_argument("bad 'session'");
  record.session = j.at("session").get<std::string>();
  const json& actor = j.at("actor");
  if (actor.is_number_integer()) {
    const int seat = actor.get<int>();
    if (seat < 0 || seat >= game::kSeatCount) throw std::invalid_argument("bad 'actor'");
    record.actor = seat;
  } else if (!(actor.is_string() && actor.get<std::string>() == "server")) {
    throw std::invalid_argument("bad 'actor'");
  }
  if (!j.at("type").is_string()) throw std::invalid_argument("bad 'type'");
  record.type = j.at("type").get<std::string>();
  if (!j.at("payload").is_object()) throw std::invalid_argument("bad 'payload'");
  record.payload = j.at("payload");
  return record;
}

LogRecord record_for_event(const game::GameEvent& event) {
  LogRecord record;
  json body = game::event_to_json(event);
  record.type = body.at("type").get<std::string>();
  body.erase("type");
  record.actor = game::actor_of(event);
  if (record.actor) body.erase("seat");
  record.payload = std::move(body);
  return record;
}

game::GameEvent event_from_record(const LogRecord& record) {
  json body = record.payload;
  body["type"] = record.type;
  if (record.actor) body["seat"] = *record.actor;
  game::GameEvent event = game::event_from_json(body);
  if (game::actor_of(event) != record.actor) throw std::invalid_argument("actor does not match event");
  return event;
}

std::vector<LogRecord> read_log(std::istream& in) {
  std::vector<LogRecord> records;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      LogRecord record = record_from_json(json::parse(text));
      record.line = line;
      records.push_back(std::move(record));
    } catch (const std::exception& e) {
      throw SessionError(SessionCode::CorruptRecord, "line " + std::to_string(line) + ": " + e.what());
    }
  }
  return records;
}

std::vector<LogRecord> read_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError(SessionCode::MissingFile, path);
  return read_log(in);
}

std::string MemoryLog::text() const {
  std::string out;
  for (const auto& record : records_) {
    out += format_record(record);
    out += '\n';
  }
  return out;
}

FileLog::FileLog(const std::string& path) : out_(path, std::ios::app) {
  if (!out_) throw SessionError(SessionCode::MissingFile, "cannot open log " + path);
}

void FileLog::append(const LogRecord& record) {
  std::lock_guard lock(mutex_);
  out_ << format_record(record) << '\n';
  out_.flush();
}

}  // namespace motmalin::session
