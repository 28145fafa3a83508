#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "motmalin/game/state.hpp"

namespace motmalin::agent {

// ---- embodiment -------------------------------------------------------------

enum class Capability : std::uint8_t { FacialExpression, HeadMovement, Gaze, Speech, UpperBodyGesture };

std::string_view to_string(Capability capability);

class CapabilitySet {
 public:
  constexpr CapabilitySet() = default;
  constexpr CapabilitySet(std::initializer_list<Capability> caps) {
    for (auto c : caps) bits_ |= bit(c);
  }
  constexpr bool contains(Capability c) const { return (bits_ & bit(c)) != 0; }
  constexpr int size() const {
    int n = 0;
    for (unsigned b = bits_; b; b &= b - 1) ++n;
    return n;
  }
  friend constexpr bool operator==(CapabilitySet, CapabilitySet) = default;

 private:
  static constexpr unsigned bit(Capability c) { return 1u << static_cast<unsigned>(c); }
  unsigned bits_ = 0;
};

enum class EmbodimentKind : std::uint8_t { Robot, Eca };

std::string_view to_string(EmbodimentKind kind);
EmbodimentKind embodiment_kind_from_string(std::string_view name);  // throws std::invalid_argument

// A robot head realizes face, head, gaze and speech; an on-screen agent adds
// upper-body gestures.
constexpr CapabilitySet capabilities_of(EmbodimentKind kind) {
  CapabilitySet robot{Capability::FacialExpression, Capability::HeadMovement, Capability::Gaze, Capability::Speech};
  if (kind == EmbodimentKind::Robot) return robot;
  return CapabilitySet{Capability::FacialExpression, Capability::HeadMovement, Capability::Gaze, Capability::Speech,
                       Capability::UpperBodyGesture};
}

struct EmbodimentProfile {
  EmbodimentKind kind = EmbodimentKind::Eca;
  std::string face_id;
  std::string voice_id;

  CapabilitySet capabilities() const { return capabilities_of(kind); }

  friend bool operator==(const EmbodimentProfile&, const EmbodimentProfile&) = default;
};

// ---- high-level behavior ------------------------------------------------------

using Slots = std::map<std::string, std::string>;

namespace act {
struct GameAct {
  game::Command command;
  friend bool operator==(const GameAct&, const GameAct&) = default;
};
struct Say {
  std::string key;
  Slots slots;
  friend bool operator==(const Say&, const Say&) = default;
};
struct ExpressJoy {
  friend bool operator==(const ExpressJoy&, const ExpressJoy&) = default;
};
struct ExpressDisappointment {
  friend bool operator==(const ExpressDisappointment&, const ExpressDisappointment&) = default;
};
struct Smile {
  friend bool operator==(const Smile&, const Smile&) = default;
};
struct HeadNod {
  friend bool operator==(const HeadNod&, const HeadNod&) = default;
};
struct GazeAt {
  int seat = 0;
  friend bool operator==(const GazeAt&, const GazeAt&) = default;
};
struct OpenHandGesture {
  friend bool operator==(const OpenHandGesture&, const OpenHandGesture&) = default;
};
struct VulnerabilityDisclosure {
  std::string key;
  friend bool operator==(const VulnerabilityDisclosure&, const VulnerabilityDisclosure&) = default;
};
struct ReferencePreviousWord {
  std::string word;
  friend bool operator==(const ReferencePreviousWord&, const ReferencePreviousWord&) = default;
};
}  // namespace act

using BehaviorAction =
    std::variant<act::GameAct, act::Say, act::ExpressJoy, act::ExpressDisappointment, act::Smile, act::HeadNod,
                 act::GazeAt, act::OpenHandGesture, act::VulnerabilityDisclosure, act::ReferencePreviousWord>;

std::string_view action_name(const BehaviorAction& action);

// Parameterless actions by name, the vocabulary of the substitution table.
std::optional<BehaviorAction> simple_action_from_name(std::string_view name);

// ---- low-level instructions ---------------------------------------------------

namespace ins {
struct SetFace {
  std::string expression;
  friend bool operator==(const SetFace&, const SetFace&) = default;
};
struct MoveHead {
  std::string motion;
  friend bool operator==(const MoveHead&, const MoveHead&) = default;
};
struct LookAt {
  int seat = 0;
  friend bool operator==(const LookAt&, const LookAt&) = default;
};
struct Speak {
  std::string text;
  friend bool operator==(const Speak&, const Speak&) = default;
};
struct PlayGesture {
  std::string gesture;
  friend bool operator==(const PlayGesture&, const PlayGesture&) = default;
};
}  // namespace ins

using InstructionBody = std::variant<ins::SetFace, ins::MoveHead, ins::LookAt, ins::Speak, ins::PlayGesture>;

struct Instruction {
  InstructionBody body;
  int onset_ms = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

Capability required_capability(const InstructionBody& body);
std::string_view instruction_name(const InstructionBody& body);

nlohmann::json instruction_to_json(const Instruction& instruction);
nlohmann::json action_to_json(const BehaviorAction& action);

}  // namespace motmalin::agent
