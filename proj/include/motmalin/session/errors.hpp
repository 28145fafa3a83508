#pragma once

#include <string_view>

#include "motmalin/error.hpp"

namespace motmalin::session {

enum class SessionCode {
  BadConfig,
  MissingFile,
  Malformed,
  NotYourSeat,
  NotJoined,
  SeatUnavailable,
  UnknownSession,
  SeqGap,
  CorruptRecord,
};

constexpr std::string_view to_string(SessionCode code) {
  switch (code) {
    case SessionCode::BadConfig: return "BadConfig";
    case SessionCode::MissingFile: return "MissingFile";
    case SessionCode::Malformed: return "Malformed";
    case SessionCode::NotYourSeat: return "NotYourSeat";
    case SessionCode::NotJoined: return "NotJoined";
    case SessionCode::SeatUnavailable: return "SeatUnavailable";
    case SessionCode::UnknownSession: return "UnknownSession";
    case SessionCode::SeqGap: return "SeqGap";
    case SessionCode::CorruptRecord: return "CorruptRecord";
  }
  return "Unknown";
}

using SessionError = CodedError<SessionCode>;

}  // namespace motmalin::session
