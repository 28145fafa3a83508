#include "motmalin/agent/behavior.hpp"

#include <stdexcept>

#include "motmalin/game/codec.hpp"

namespace motmalin::agent {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::string_view to_string(Capability capability) {
  switch (capability) {
    case Capability::FacialExpression: return "FacialExpression";
    case Capability::HeadMovement: return "HeadMovement";
    case Capability::Gaze: return "Gaze";
    case Capability::Speech: return "Speech";
    case Capability::UpperBodyGesture: return "UpperBodyGesture";
  }
  return "?";
}

std::string_view to_string(EmbodimentKind kind) { return kind == EmbodimentKind::Robot ? "robot" : "eca"; }

EmbodimentKind embodiment_kind_from_string(std::string_view name) {
  if (name == "robot") return EmbodimentKind::Robot;
  if (name == "eca") return EmbodimentKind::Eca;
  throw std::invalid_argument("unknown embodiment '" + std::string(name) + "'");
}

std::string_view action_name(const BehaviorAction& action) {
  static constexpr std::string_view names[] = {
      "GameAct",   "Say",    "ExpressJoy",      "ExpressDisappointment",   "Smile",
      "HeadNod",   "GazeAt", "OpenHandGesture", "VulnerabilityDisclosure", "ReferencePreviousWord",
  };
  return names[action.index()];
}

std::optional<BehaviorAction> simple_action_from_name(std::string_view name) {
  if (name == "ExpressJoy") return act::ExpressJoy{};
  if (name == "ExpressDisappointment") return act::ExpressDisappointment{};
  if (name == "Smile") return act::Smile{};
  if (name == "HeadNod") return act::HeadNod{};
  if (name == "OpenHandGesture") return act::OpenHandGesture{};
  return std::nullopt;
}

Capability required_capability(const InstructionBody& body) {
  return std::visit(overloaded{
                        [](const ins::SetFace&) { return Capability::FacialExpression; },
                        [](const ins::MoveHead&) { return Capability::HeadMovement; },
                        [](const ins::LookAt&) { return Capability::Gaze; },
                        [](const ins::Speak&) { return Capability::Speech; },
                        [](const ins::PlayGesture&) { return Capability::UpperBodyGesture; },
                    },
                    body);
}

std::string_view instruction_name(const InstructionBody& body) {
  static constexpr std::string_view names[] = {"SetFace", "MoveHead", "LookAt", "Speak", "PlayGesture"};
  return names[body.index()];
}

nlohmann::json instruction_to_json(const Instruction& instruction) {
  nlohmann::json out{{"type", instruction_name(instruction.body)}, {"onset", instruction.onset_ms}};
  std::visit(overloaded{
                 [&](const ins::SetFace& i) { out["expression"] = i.expression; },
                 [&](const ins::MoveHead& i) { out["motion"] = i.motion; },
                 [&](const ins::LookAt& i) { out["seat"] = i.seat; },
                 [&](const ins::Speak& i) { out["text"] = i.text; },
                 [&](const ins::PlayGesture& i) { out["gesture"] = i.gesture; },
             },
             instruction.body);
  return out;
}

nlohmann::json action_to_json(const BehaviorAction& action) {
  nlohmann::json out{{"type", action_name(action)}};
  std::visit(overloaded{
                 [&](const act::GameAct& a) {
                   out["seat"] = game::seat_of(a.command);
                   out["command"] = game::command_body_to_json(a.command);
                 },
                 [&](const act::Say& a) {
                   out["key"] = a.key;
                   out["slots"] = a.slots;
                 },
                 [&](const act::GazeAt& a) { out["seat"] = a.seat; },
                 [&](const act::VulnerabilityDisclosure& a) { out["key"] = a.key; },
                 [&](const act::ReferencePreviousWord& a) { out["word"] = a.word; },
                 [](const auto&) {},
             },
             action);
  return out;
}

}  // namespace motmalin::agent
