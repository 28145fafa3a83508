#pragma once

#include <string_view>

#include "motmalin/error.hpp"

namespace motmalin::game {

enum class RuleCode {
  BadCoordinate,
  DuplicateGridWord,
  InvalidGridWord,
  BadSeatCount,
  InvalidSeat,
  EmptyClue,
  MultiToken,
  GridWordClue,
  PhaseViolation,
  NotAGuesser,
  NotSpeaker,
  CompletedCell,
  // An event does not follow from the state it is applied to (replay only).
  EventMismatch,
};

constexpr std::string_view to_string(RuleCode code) {
  switch (code) {
    case RuleCode::BadCoordinate: return "BadCoordinate";
    case RuleCode::DuplicateGridWord: return "DuplicateGridWord";
    case RuleCode::InvalidGridWord: return "InvalidGridWord";
    case RuleCode::BadSeatCount: return "BadSeatCount";
    case RuleCode::InvalidSeat: return "InvalidSeat";
    case RuleCode::EmptyClue: return "EmptyClue";
    case RuleCode::MultiToken: return "MultiToken";
    case RuleCode::GridWordClue: return "GridWordClue";
    case RuleCode::PhaseViolation: return "PhaseViolation";
    case RuleCode::NotAGuesser: return "NotAGuesser";
    case RuleCode::NotSpeaker: return "NotSpeaker";
    case RuleCode::CompletedCell: return "CompletedCell";
    case RuleCode::EventMismatch: return "EventMismatch";
  }
  return "Unknown";
}

using RuleError = CodedError<RuleCode>;

}  // namespace motmalin::game
