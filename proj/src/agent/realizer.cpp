#include "motmalin/agent/realizer.hpp"

#include <algorithm>

namespace motmalin::agent {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Step {
  InstructionBody body;
  int duration_ms;
};

int speech_duration(const std::string& text) {
  const auto words = std::count(text.begin(), text.end(), ' ') + 1;
  return 250 + 70 * static_cast<int>(words);
}

Step speak(std::string text) {
  const int duration = speech_duration(text);
  return {ins::Speak{std::move(text)}, duration};
}

// Fixed mapping from a high-level act to its low-level form.
std::vector<Step> translate(const BehaviorAction& action, const TemplateSet& templates) {
  return std::visit(overloaded{
                        [](const act::GameAct&) { return std::vector<Step>{}; },
                        [&](const act::Say& a) { return std::vector<Step>{speak(templates.render(a.key, a.slots))}; },
                        [](const act::ExpressJoy&) { return std::vector<Step>{{ins::SetFace{"joy"}, 300}}; },
                        [](const act::ExpressDisappointment&) { return std::vector<Step>{{ins::SetFace{"sad"}, 300}}; },
                        [](const act::Smile&) { return std::vector<Step>{{ins::SetFace{"smile"}, 300}}; },
                        [](const act::HeadNod&) { return std::vector<Step>{{ins::MoveHead{"nod"}, 600}}; },
                        [](const act::GazeAt& a) { return std::vector<Step>{{ins::LookAt{a.seat}, 150}}; },
                        [](const act::OpenHandGesture&) { return std::vector<Step>{{ins::PlayGesture{"open_hand"}, 900}}; },
                        [&](const act::VulnerabilityDisclosure& a) {
                          return std::vector<Step>{speak(templates.render(a.key))};
                        },
                        [&](const act::ReferencePreviousWord& a) {
                          return std::vector<Step>{speak(templates.render("reference_previous", {{"word", a.word}}))};
                        },
                    },
                    action);
}

bool realizable(const std::vector<Step>& steps, CapabilitySet caps) {
  return std::all_of(steps.begin(), steps.end(),
                     [&](const Step& s) { return caps.contains(required_capability(s.body)); });
}

}  // namespace

std::vector<Instruction> Realizer::realize(std::span<const BehaviorAction> actions,
                                           const EmbodimentProfile& body) const {
  const CapabilitySet caps = body.capabilities();
  std::vector<Instruction> out;
  int cursor = 0;
  for (const auto& original : actions) {
    BehaviorAction action = original;
    auto steps = translate(action, *templates_);
    // Walk the substitution table until something fits; the bound guards cycles.
    for (std::size_t hops = 0; !realizable(steps, caps) && hops <= substitutions_.size(); ++hops) {
      const auto it = substitutions_.find(action_name(action));
      const auto next = it == substitutions_.end() ? std::nullopt : simple_action_from_name(it->second);
      if (!next) {
        steps.clear();
        break;
      }
      action = *next;
      steps = translate(action, *templates_);
    }
    if (!realizable(steps, caps)) continue;
    for (auto& step : steps) {
      out.push_back(Instruction{std::move(step.body), cursor});
      cursor += step.duration_ms;
    }
  }
  return out;
}

}  // namespace motmalin::agent
