#pragma once

#include <map>
#include <string>
#include <utility>

#include "boxcommit/engine.hpp"
#include "boxcommit/rational.hpp"

namespace boxcommit::testing {

// Plays a fixed action per step index and skips everything else.
inline PartyStrategy scripted(std::string name, std::map<int, Action> actions) {
  return PartyStrategy{
      std::move(name),
      [actions = std::move(actions)](const View&, std::span<const Bit>, const StepSpec& step) {
        auto it = actions.find(step.index);
        return it == actions.end() ? Action::skip() : it->second;
      }};
}

inline Rat total_probability(const std::vector<WeightedTranscript>& dist) {
  Rat sum(0);
  for (const auto& wt : dist) sum += wt.probability;
  return sum;
}

}  // namespace boxcommit::testing
