#include "motmalin/agent/mind.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "motmalin/assoc/clue_generator.hpp"
#include "motmalin/assoc/inference.hpp"
#include "motmalin/game/random.hpp"

namespace motmalin::agent {

namespace {

enum class Salt : std::uint64_t { Decide = 0x11, React = 0x22 };

game::Rng rng_for(const AgentProfile& profile, const game::PlayerView& view, Salt salt) {
  return game::Rng(game::mix_seed({profile.rng_seed, static_cast<std::uint64_t>(view.seat), view.history_length,
                                   view.tick, static_cast<std::uint64_t>(salt)}));
}

std::optional<assoc::ClueCandidate> best_clue(const AgentProfile& profile, const game::PlayerView& view,
                                              const assoc::EmbeddingStore& store) {
  if (!view.own_card) return std::nullopt;
  try {
    return assoc::generate_clue(store, view.grid, *view.own_card, view.completed, profile.clue);
  } catch (const assoc::AssocError&) {
    // The card's words are unknown to this agent's lexicon: it cannot clue.
    return std::nullopt;
  }
}

enum class Moment { RequestSpeak, ProposeClue, SelectCell, Confirm };

// Intimacy decorations: smiles, eye contact with the listeners, an open
// gesture, and callbacks to clues used earlier in the round.
void decorate(std::vector<BehaviorAction>& out, const AgentProfile& profile, const EmbodimentProfile& body,
              const game::PlayerView& view, game::Rng& rng, Moment moment) {
  if (!(rng.uniform() < profile.intimacy_level)) return;
  auto gaze_listeners = [&] {
    for (int seat = 0; seat < game::kSeatCount; ++seat) {
      if (seat != view.seat) out.push_back(act::GazeAt{seat});
    }
  };
  switch (moment) {
    case Moment::RequestSpeak:
      out.push_back(act::Smile{});
      gaze_listeners();
      break;
    case Moment::ProposeClue:
      gaze_listeners();
      if (body.capabilities().contains(Capability::UpperBodyGesture)) {
        out.push_back(act::OpenHandGesture{});
      } else {
        out.push_back(act::HeadNod{});
      }
      if (!view.clues.empty()) {
        out.push_back(act::ReferencePreviousWord{view.clues[static_cast<std::size_t>(rng.below(view.clues.size()))]});
      }
      break;
    case Moment::SelectCell:
      out.push_back(act::Smile{});
      break;
    case Moment::Confirm:
      out.push_back(act::Smile{});
      gaze_listeners();
      break;
  }
}

bool has_game_act(const std::vector<BehaviorAction>& actions) {
  return std::any_of(actions.begin(), actions.end(),
                     [](const BehaviorAction& a) { return std::holds_alternative<act::GameAct>(a); });
}

// Cell the group leans to: most picks, ties going to the pick of the
// lowest-numbered guesser. nullopt until every guesser has picked or when
// they already agree.
std::optional<game::Coordinate> plurality_pick(const game::PlayerView& view, int speaker) {
  std::array<int, game::kCellCount> counts{};
  std::vector<game::Coordinate> picks;
  for (int seat = 0; seat < game::kSeatCount; ++seat) {
    if (seat == speaker) continue;
    if (!view.selections[seat]) return std::nullopt;
    picks.push_back(*view.selections[seat]);
    ++counts[view.selections[seat]->index()];
  }
  if (std::all_of(picks.begin(), picks.end(), [&](const auto& c) { return c == picks.front(); })) return std::nullopt;
  const int best = *std::max_element(counts.begin(), counts.end());
  for (const auto& pick : picks) {
    if (counts[pick.index()] == best) return pick;
  }
  return std::nullopt;
}

}  // namespace

std::vector<BehaviorAction> plan_guess(const AgentProfile& profile, const game::PlayerView& view,
                                       const assoc::EmbeddingStore& store, std::string_view clue) {
  const auto* guessing = std::get_if<game::phase::Guessing>(&view.phase);
  if (!guessing || guessing->speaker == view.seat) return {};
  const int speaker = guessing->speaker;

  if (const auto& mine = view.selections[view.seat]) {
    const auto lean = plurality_pick(view, speaker);
    if (!lean || *lean == *mine) return {};
    return {act::GameAct{game::cmd::SelectCell{view.seat, *lean}}, act::GazeAt{speaker}};
  }

  const auto inference =
      assoc::infer_coordinates(store, clue, view.grid, view.completed, profile.clue.combine, profile.clue.beta);
  if (inference.cells.empty()) return {};

  std::vector<BehaviorAction> out;
  if (profile.hint_style == HintStyle::PartialHint && !inference.oov) {
    const auto axes = assoc::axis_similarities(store, clue, view.grid);
    const auto column_best = std::max_element(axes->columns.begin(), axes->columns.end());
    const auto row_best = std::max_element(axes->rows.begin(), axes->rows.end());
    const bool column_sure = *column_best >= profile.confidence_threshold;
    const bool row_sure = *row_best >= profile.confidence_threshold;
    if (column_sure != row_sure) {
      const std::string& sure_word =
          column_sure ? view.grid.column_words[static_cast<std::size_t>(column_best - axes->columns.begin())]
                      : view.grid.row_words[static_cast<std::size_t>(row_best - axes->rows.begin())];
      out.push_back(act::Say{"partial_hint",
                             {{"clue", std::string(clue)},
                              {"sure_word", sure_word},
                              {"unsure_axis", profile.templates->render(column_sure ? "axis_row" : "axis_column")}}});
    }
  }
  out.push_back(act::GameAct{game::cmd::SelectCell{view.seat, inference.top().cell}});
  out.push_back(act::GazeAt{speaker});
  return out;
}

std::vector<BehaviorAction> decide(const AgentProfile& profile, const EmbodimentProfile& embodiment,
                                   const game::PlayerView& view, const assoc::EmbeddingStore& store) {
  auto rng = rng_for(profile, view, Salt::Decide);
  const auto speaker = game::speaker_of(view.phase);
  std::vector<BehaviorAction> out;

  if (std::holds_alternative<game::phase::Open>(view.phase)) {
    const auto clue = best_clue(profile, view, store);
    if (!clue || clue->total < profile.confidence_threshold) return {};
    if (!(rng.uniform() < profile.proactivity)) return {};
    out.push_back(act::GameAct{game::cmd::RequestSpeak{view.seat}});
    decorate(out, profile, embodiment, view, rng, Moment::RequestSpeak);
  } else if (std::holds_alternative<game::phase::ClueEntry>(view.phase) && speaker == view.seat) {
    if (const auto clue = best_clue(profile, view, store)) {
      out.push_back(act::GameAct{game::cmd::ProposeClue{view.seat, clue->word}});
      decorate(out, profile, embodiment, view, rng, Moment::ProposeClue);
    } else {
      out.push_back(act::GameAct{game::cmd::CancelSpeak{view.seat}});
    }
  } else if (const auto* guessing = std::get_if<game::phase::Guessing>(&view.phase)) {
    out = plan_guess(profile, view, store, guessing->clue);
    if (has_game_act(out)) decorate(out, profile, embodiment, view, rng, Moment::SelectCell);
  } else if (std::holds_alternative<game::phase::Resolution>(view.phase) && speaker == view.seat) {
    out.push_back(act::GameAct{game::cmd::ConfirmResolution{view.seat}});
    decorate(out, profile, embodiment, view, rng, Moment::Confirm);
  }
  return out;
}

std::vector<BehaviorAction> react(const AgentProfile& profile, const game::ev::ResolutionAnnounced& outcome,
                                  const game::PlayerView& view) {
  if (outcome.success) return {act::ExpressJoy{}, act::Smile{}, act::Say{"celebrate", {}}};
  std::vector<BehaviorAction> out{act::ExpressDisappointment{}};
  auto rng = rng_for(profile, view, Salt::React);
  if (rng.uniform() < profile.intimacy_level) out.push_back(act::VulnerabilityDisclosure{"disclose_weakness"});
  return out;
}

}  // namespace motmalin::agent
