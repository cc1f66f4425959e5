#include "boxcommit/security.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace boxcommit {

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

int position_of(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

// The slice of a ProtocolSpec that strategies capture by value.
struct SpecCtx {
  ProtocolFamily family;
  int k;
  std::vector<int> mask_coin_steps;
  int commit_choice_step;
  std::vector<int> box_steps;
  int commit_message_step;
  std::vector<int> reveal_box_steps;
  int reveal_message_step;

  explicit SpecCtx(const ProtocolSpec& spec)
      : family(spec.family),
        k(spec.box_count()),
        mask_coin_steps(spec.alice_mask_coin_steps),
        commit_choice_step(spec.alice_commit_choice_step),
        box_steps(spec.alice_box_steps),
        commit_message_step(spec.commit_message_step),
        reveal_box_steps(spec.reveal_box_steps),
        reveal_message_step(spec.reveal_message_step) {}

  Bit mask(const View& view, int i) const { return view.value_at(mask_coin_steps[i]).value(); }
};

}  // namespace

PartyStrategy with_target(const CommitmentStrategy& strategy, std::optional<Bit> target) {
  std::string name = strategy.name;
  if (target) name += target->value() ? "->1" : "->0";
  return PartyStrategy{std::move(name),
                       [decide = strategy.decide, target](const View& view,
                                                          std::span<const Bit> tape,
                                                          const StepSpec& step) {
                         return decide(view, tape, step, target);
                       }};
}

PartyStrategy honest_bob(const ProtocolSpec& spec) {
  struct Ctx {
    std::vector<int> choice_steps;
    std::vector<int> box_steps;
    int decide_step;
    std::function<Action(const View&)> rule;
  };
  Ctx ctx{spec.bob_choice_coin_steps, spec.bob_box_steps, spec.decide_step, spec.acceptance_rule};
  return PartyStrategy{
      "honest-bob", [ctx](const View& view, std::span<const Bit>, const StepSpec& step) {
        if (step.kind == StepKind::SampleCoin) return Action::sample_coin();
        if (step.kind == StepKind::InputBox && contains(ctx.box_steps, step.index)) {
          int i = position_of(ctx.box_steps, step.index);
          return Action::input_box(view.value_at(ctx.choice_steps[i]).value());
        }
        if (step.index == ctx.decide_step) return ctx.rule(view);
        return Action::skip();
      }};
}

namespace {

CommitmentStrategy make_honest_alice(const ProtocolSpec& spec, std::optional<Bit> pinned,
                                     std::string name) {
  SpecCtx ctx(spec);
  auto committed_of = [ctx, pinned](const View& view) -> Bit {
    return pinned ? *pinned : view.value_at(ctx.commit_choice_step).value();
  };
  return CommitmentStrategy{
      std::move(name),
      [ctx, pinned, committed_of](const View& view, std::span<const Bit>, const StepSpec& step,
                                  std::optional<Bit> target) -> Action {
        if (step.kind == StepKind::SampleCoin) {
          if (step.index == ctx.commit_choice_step && pinned) return Action::skip();
          return Action::sample_coin();
        }
        if (contains(ctx.box_steps, step.index)) {
          int i = position_of(ctx.box_steps, step.index);
          Bit committed = committed_of(view);
          switch (ctx.family) {
            case ProtocolFamily::OtCommit: {
              Bit mask = ctx.mask(view, i);
              return Action::input_box(Bits{mask, mask ^ committed});
            }
            case ProtocolFamily::PrCommit:
              return Action::input_box(committed);
            case ProtocolFamily::OtSimPrCommit: {
              // The simulation's input for the OT load (x0, x1) = (mask, mask ^ committed).
              Bit x0 = ctx.mask(view, i);
              Bit x1 = x0 ^ committed;
              return Action::input_box(x0 ^ x1);
            }
          }
        }
        if (step.index == ctx.commit_message_step) {
          if (ctx.family == ProtocolFamily::OtCommit) return Action::send_message({});
          Bits payload;
          for (int i = 0; i < ctx.k; ++i) {
            Bit a = view.value_at(ctx.box_steps[i]).value();
            payload.push_back(ctx.mask(view, i) ^ a);
          }
          return Action::send_message(std::move(payload));
        }
        if (contains(ctx.reveal_box_steps, step.index)) return Action::skip();
        if (step.index == ctx.reveal_message_step) {
          Bit claimed = target ? *target : committed_of(view);
          Bits payload{claimed};
          for (int i = 0; i < ctx.k; ++i) payload.push_back(ctx.mask(view, i));
          return Action::send_message(std::move(payload));
        }
        return Action::skip();
      }};
}

}  // namespace

CommitmentStrategy honest_alice(const ProtocolSpec& spec) {
  return make_honest_alice(spec, std::nullopt, "honest-alice");
}

CommitmentStrategy honest_alice_pinned(const ProtocolSpec& spec, Bit committed) {
  return make_honest_alice(spec, committed,
                           committed.value() ? "honest-alice[1]" : "honest-alice[0]");
}

CommitmentStrategy delayed_alice(const ProtocolSpec& spec) {
  if (!is_pr_family(spec)) {
    throw InapplicableStrategy(
        "the delayed-input cheat needs boxes that still answer during REVEAL; against " +
        spec.name + " the box would report Pending during COMMIT");
  }
  SpecCtx ctx(spec);
  return CommitmentStrategy{
      "delayed-alice",
      [ctx](const View& view, std::span<const Bit>, const StepSpec& step,
            std::optional<Bit> target) -> Action {
        const Bit goal = target.value_or(Bit(0));
        if (step.kind == StepKind::SampleCoin) {
          // No committed bit exists; the mask slots become the random message bits.
          if (step.index == ctx.commit_choice_step) return Action::skip();
          return Action::sample_coin();
        }
        if (contains(ctx.box_steps, step.index)) return Action::skip();
        if (step.index == ctx.commit_message_step) {
          Bits payload;
          for (int i = 0; i < ctx.k; ++i) payload.push_back(ctx.mask(view, i));
          return Action::send_message(std::move(payload));
        }
        if (contains(ctx.reveal_box_steps, step.index)) return Action::input_box(goal);
        if (step.index == ctx.reveal_message_step) {
          Bits payload{goal};
          for (int i = 0; i < ctx.k; ++i) {
            Bit a = view.value_at(ctx.reveal_box_steps[i]).value();
            payload.push_back(a ^ ctx.mask(view, i));
          }
          return Action::send_message(std::move(payload));
        }
        return Action::skip();
      }};
}

CommitmentStrategy no_input_alice(const ProtocolSpec& spec) {
  SpecCtx ctx(spec);
  return CommitmentStrategy{
      "no-input-alice",
      [ctx](const View& view, std::span<const Bit>, const StepSpec& step,
            std::optional<Bit> target) -> Action {
        if (step.kind == StepKind::SampleCoin) return Action::sample_coin();
        if (step.kind == StepKind::InputBox) return Action::skip();
        if (step.index == ctx.commit_message_step) {
          if (ctx.family == ProtocolFamily::OtCommit) return Action::send_message({});
          Bits payload;
          for (int i = 0; i < ctx.k; ++i) payload.push_back(ctx.mask(view, i));
          return Action::send_message(std::move(payload));
        }
        if (step.index == ctx.reveal_message_step) {
          Bit committed = view.value_at(ctx.commit_choice_step).value();
          Bit claimed = target ? *target : committed;
          Bits payload{claimed};
          for (int i = 0; i < ctx.k; ++i) payload.push_back(ctx.mask(view, i));
          return Action::send_message(std::move(payload));
        }
        return Action::skip();
      }};
}

Rat eval_correctness(const ProtocolSpec& spec) {
  auto dist =
      enumerate_runs(spec.scenario, with_target(honest_alice(spec), std::nullopt), honest_bob(spec));
  Rat good(0);
  for (const WeightedTranscript& wt : dist) {
    CommitmentOutcome outcome = outcome_of(wt.transcript, spec);
    if (!outcome.accepted) continue;
    const Event* committed = wt.transcript.view_for(Party::Alice).find(spec.alice_commit_choice_step);
    if (committed && committed->result.has_value() &&
        outcome.revealed == committed->result.value) {
      good += wt.probability;
    }
  }
  return good;
}

Rat eval_privacy(const ProtocolSpec& spec) {
  auto bob = honest_bob(spec);
  auto dist0 = enumerate_runs(spec.scenario,
                              with_target(honest_alice_pinned(spec, Bit(0)), std::nullopt), bob);
  auto dist1 = enumerate_runs(spec.scenario,
                              with_target(honest_alice_pinned(spec, Bit(1)), std::nullopt), bob);
  auto views0 = view_distribution(spec.scenario, dist0, Party::Bob, "commit_end");
  auto views1 = view_distribution(spec.scenario, dist1, Party::Bob, "commit_end");
  return statistical_distance(views0, views1);
}

namespace {

struct LeafTally {
  Rat mass{0};
  Rat accept{0};
};

// Group a distribution by Alice's post-commit view and tally the runs where
// Bob accepted exactly the target bit.
std::map<std::string, LeafTally> tally_leaves(const ProtocolSpec& spec,
                                              const std::vector<WeightedTranscript>& dist,
                                              Bit target) {
  const int commit_end = spec.scenario.phase_mark("commit_end");
  std::map<std::string, LeafTally> leaves;
  for (const WeightedTranscript& wt : dist) {
    LeafTally& leaf = leaves[wt.transcript.view_for(Party::Alice, commit_end).encode()];
    leaf.mass += wt.probability;
    CommitmentOutcome outcome = outcome_of(wt.transcript, spec);
    if (outcome.accepted && outcome.revealed == target) leaf.accept += wt.probability;
  }
  return leaves;
}

BindingReport finish_binding(const ProtocolSpec& spec,
                             const std::map<std::string, std::pair<LeafTally, LeafTally>>& table) {
  BindingReport report;
  report.threshold = spec.cfg.binding_threshold();
  report.violation = Rat(0);
  for (const auto& [key, tallies] : table) {
    const auto& [t0, t1] = tallies;
    BindingLeaf leaf;
    leaf.commit_view_key = key;
    leaf.weight = t0.mass;
    leaf.p_accept_0 = t0.accept / t0.mass;
    leaf.p_accept_1 = t1.accept / t1.mass;
    if (leaf.min_accept() > report.violation) report.violation = leaf.min_accept();
    report.leaves.push_back(std::move(leaf));
  }
  return report;
}

}  // namespace

BindingReport eval_binding(const ProtocolSpec& spec, const CommitmentStrategy& alice) {
  auto bob = honest_bob(spec);
  std::map<std::string, std::pair<LeafTally, LeafTally>> table;
  for (int t = 0; t < 2; ++t) {
    auto dist = enumerate_runs(spec.scenario, with_target(alice, Bit(t)), bob);
    for (auto& [key, tally] : tally_leaves(spec, dist, Bit(t))) {
      (t == 0 ? table[key].first : table[key].second) = tally;
    }
  }
  for (const auto& [key, tallies] : table) {
    if (tallies.first.mass != tallies.second.mass || tallies.first.mass == Rat(0)) {
      throw ValidationError("commit behavior of " + alice.name +
                            " depends on the reveal target");
    }
  }
  return finish_binding(spec, table);
}

// ---------------------------------------------------------------------------
// Exhaustive search over deterministic Alice behaviors.
//
// A behavior is a decision tree: an action for every (step, observations)
// pair she can reach, where observations are the box output bits she has
// seen. Coins are never sampled (a mixture cannot beat its best component),
// and the opening message is only ever sent with the claimed bit equal to
// the current target; other claims score zero for that target.

namespace {

using TreeKey = std::pair<int, std::string>;
using DecisionTree = std::map<TreeKey, Action>;

struct ActionOption {
  Action action;
  unsigned loaded_after = 0;
  int observed_bits = 0;  // view branches this action opens up (0 or 1)
};

struct SearchCtx {
  const ProtocolSpec& spec;
  int commit_end;
  std::vector<unsigned> step_box_bit;  // 1 << box for Alice input steps, else 0

  explicit SearchCtx(const ProtocolSpec& s)
      : spec(s), commit_end(s.scenario.phase_mark("commit_end")) {
    for (const StepSpec& step : s.scenario.steps) {
      unsigned bit = 0;
      if (step.actor == Party::Alice && step.kind == StepKind::InputBox) bit = 1u << step.box;
      step_box_bit.push_back(bit);
    }
  }

  std::vector<ActionOption> options(const StepSpec& step, unsigned loaded,
                                    std::optional<Bit> target) const {
    std::vector<ActionOption> out;
    out.push_back(ActionOption{Action::skip(), loaded, 0});
    if (step.kind == StepKind::SampleCoin || step.kind == StepKind::Decide) return out;

    if (step.kind == StepKind::InputBox) {
      if (loaded & (1u << step.box)) return out;  // one-shot port already used
      const bool yields_bit = std::holds_alternative<PrBox>(spec.scenario.boxes[step.box]);
      for (unsigned v = 0; v < (1u << step.width); ++v) {
        Bits payload;
        for (int j = 0; j < step.width; ++j) payload.push_back(Bit(static_cast<int>((v >> j) & 1)));
        out.push_back(ActionOption{Action::input_box(std::move(payload)),
                                   loaded | (1u << step.box), yields_bit ? 1 : 0});
      }
      return out;
    }

    // SendMessage. The opening message claims the target bit; everything else
    // ranges over all payloads.
    const bool opening = step.index == spec.reveal_message_step;
    const int free_bits = opening ? step.width - 1 : step.width;
    for (unsigned v = 0; v < (1u << free_bits); ++v) {
      Bits payload;
      if (opening) payload.push_back(*target);
      for (int j = 0; j < free_bits; ++j) payload.push_back(Bit(static_cast<int>((v >> j) & 1)));
      out.push_back(ActionOption{Action::send_message(std::move(payload)), loaded, 0});
    }
    return out;
  }
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Number of deterministic behaviors: commit trees times, per commit leaf, one
// reveal tree per target. mode 0 walks the commit phase and forks; 1 and 2
// walk the reveal phase for the two targets.
std::uint64_t count_behaviors(const SearchCtx& ctx, int pos, unsigned loaded, int mode,
                              std::map<std::tuple<int, unsigned, int>, std::uint64_t>& memo) {
  const auto& steps = ctx.spec.scenario.steps;
  if (mode == 0 && pos == ctx.commit_end) {
    return sat_mul(count_behaviors(ctx, pos, loaded, 1, memo),
                   count_behaviors(ctx, pos, loaded, 2, memo));
  }
  if (pos == static_cast<int>(steps.size())) return 1;

  auto key = std::make_tuple(pos, loaded, mode);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const StepSpec& step = steps[pos];
  std::uint64_t total = 0;
  if (step.actor == Party::Bob) {
    total = count_behaviors(ctx, pos + 1, loaded, mode, memo);
  } else {
    std::optional<Bit> target;
    if (mode != 0) target = Bit(mode - 1);
    for (const ActionOption& option : ctx.options(step, loaded, target)) {
      std::uint64_t sub = count_behaviors(ctx, pos + 1, option.loaded_after, mode, memo);
      if (option.observed_bits == 1) sub = sat_mul(sub, sub);
      total = sat_add(total, sub);
    }
  }
  memo[key] = total;
  return total;
}

struct CommitLeafState {
  unsigned loaded = 0;
  std::string obs;
};

struct CommitTree {
  DecisionTree decisions;
  std::vector<CommitLeafState> leaves;
};

void merge_tree(DecisionTree& into, const DecisionTree& from) {
  for (const auto& [key, action] : from) into.emplace(key, action);
}

std::vector<CommitTree> enum_commit_trees(const SearchCtx& ctx, int pos, unsigned loaded,
                                          const std::string& obs) {
  const auto& steps = ctx.spec.scenario.steps;
  if (pos == ctx.commit_end) {
    return {CommitTree{{}, {CommitLeafState{loaded, obs}}}};
  }
  const StepSpec& step = steps[pos];
  if (step.actor == Party::Bob) return enum_commit_trees(ctx, pos + 1, loaded, obs);

  std::vector<CommitTree> out;
  for (const ActionOption& option : ctx.options(step, loaded, std::nullopt)) {
    if (option.observed_bits == 0) {
      for (CommitTree sub : enum_commit_trees(ctx, pos + 1, option.loaded_after, obs)) {
        if (option.action.kind != Action::Kind::Skip) {
          sub.decisions.emplace(TreeKey{step.index, obs}, option.action);
        }
        out.push_back(std::move(sub));
      }
    } else {
      auto zeros = enum_commit_trees(ctx, pos + 1, option.loaded_after, obs + '0');
      auto ones = enum_commit_trees(ctx, pos + 1, option.loaded_after, obs + '1');
      for (const CommitTree& z : zeros) {
        for (const CommitTree& o : ones) {
          CommitTree combined;
          combined.decisions = z.decisions;
          merge_tree(combined.decisions, o.decisions);
          combined.decisions.emplace(TreeKey{step.index, obs}, option.action);
          combined.leaves = z.leaves;
          combined.leaves.insert(combined.leaves.end(), o.leaves.begin(), o.leaves.end());
          out.push_back(std::move(combined));
        }
      }
    }
  }
  return out;
}

std::vector<DecisionTree> enum_reveal_plans(const SearchCtx& ctx, int pos, unsigned loaded,
                                            const std::string& obs, Bit target) {
  const auto& steps = ctx.spec.scenario.steps;
  if (pos == static_cast<int>(steps.size())) return {DecisionTree{}};
  const StepSpec& step = steps[pos];
  if (step.actor == Party::Bob) return enum_reveal_plans(ctx, pos + 1, loaded, obs, target);

  std::vector<DecisionTree> out;
  for (const ActionOption& option : ctx.options(step, loaded, target)) {
    if (option.observed_bits == 0) {
      for (DecisionTree sub : enum_reveal_plans(ctx, pos + 1, option.loaded_after, obs, target)) {
        if (option.action.kind != Action::Kind::Skip) {
          sub.emplace(TreeKey{step.index, obs}, option.action);
        }
        out.push_back(std::move(sub));
      }
    } else {
      auto zeros = enum_reveal_plans(ctx, pos + 1, option.loaded_after, obs + '0', target);
      auto ones = enum_reveal_plans(ctx, pos + 1, option.loaded_after, obs + '1', target);
      for (const DecisionTree& z : zeros) {
        for (const DecisionTree& o : ones) {
          DecisionTree combined = z;
          merge_tree(combined, o);
          combined.emplace(TreeKey{step.index, obs}, option.action);
          out.push_back(std::move(combined));
        }
      }
    }
  }
  return out;
}

// Replays a decision tree: the action at each step is looked up under the
// box-output bits observed so far; anything unmapped is a skip.
PartyStrategy tree_alice(DecisionTree tree) {
  return PartyStrategy{
      "search-alice",
      [tree = std::move(tree)](const View& view, std::span<const Bit>, const StepSpec& step) {
        std::string obs;
        for (const Event& ev : view.events) {
          if (ev.actor == Party::Alice && ev.action.kind == Action::Kind::InputBox &&
              ev.result.has_value()) {
            obs.push_back(static_cast<char>('0' + ev.result.value.value()));
          }
        }
        auto it = tree.find(TreeKey{step.index, obs});
        return it == tree.end() ? Action::skip() : it->second;
      }};
}

}  // namespace

std::uint64_t cheat_family_size(const ProtocolSpec& spec) {
  SearchCtx ctx(spec);
  std::map<std::tuple<int, unsigned, int>, std::uint64_t> memo;
  return count_behaviors(ctx, 0, 0, 0, memo);
}

BindingReport search_optimal_cheat(const ProtocolSpec& spec, std::uint64_t guard) {
  for (const StepSpec& step : spec.scenario.steps) {
    if (step.actor == Party::Bob && step.kind == StepKind::SendMessage &&
        step.index < spec.decide_step) {
      throw ConfigError("search assumes Bob sends nothing before his decision");
    }
  }

  SearchCtx ctx(spec);
  const std::uint64_t family = cheat_family_size(spec);
  if (family > guard) {
    const bool saturated = family == std::numeric_limits<std::uint64_t>::max();
    throw GuardLimitError("deterministic strategy family has " +
                          std::string(saturated ? "at least " : "") + std::to_string(family) +
                          " members, above the guard of " + std::to_string(guard));
  }

  const PartyStrategy bob = honest_bob(spec);
  const int commit_end = ctx.commit_end;

  BindingReport best;
  best.threshold = spec.cfg.binding_threshold();
  best.violation = Rat(-1);

  for (const CommitTree& commit : enum_commit_trees(ctx, 0, 0, "")) {
    // leaf key -> (weight, best acceptance per target)
    std::map<std::string, std::pair<Rat, std::array<Rat, 2>>> leaf_best;
    for (int t = 0; t < 2; ++t) {
      std::vector<DecisionTree> plans;
      for (const CommitLeafState& leaf : commit.leaves) {
        auto leaf_plans = enum_reveal_plans(ctx, commit_end, leaf.loaded, leaf.obs, Bit(t));
        plans.insert(plans.end(), leaf_plans.begin(), leaf_plans.end());
      }
      for (const DecisionTree& plan : plans) {
        DecisionTree full = commit.decisions;
        merge_tree(full, plan);
        auto dist = enumerate_runs(spec.scenario, tree_alice(std::move(full)), bob);
        for (auto& [key, tally] : tally_leaves(spec, dist, Bit(t))) {
          auto& entry = leaf_best[key];
          entry.first = tally.mass;
          Rat p = tally.accept / tally.mass;
          if (p > entry.second[t]) entry.second[t] = p;
        }
      }
    }

    Rat violation(0);
    for (const auto& [key, entry] : leaf_best) {
      Rat lo = std::min(entry.second[0], entry.second[1]);
      if (lo > violation) violation = lo;
    }
    if (violation > best.violation) {
      best.violation = violation;
      best.leaves.clear();
      for (const auto& [key, entry] : leaf_best) {
        best.leaves.push_back(
            BindingLeaf{key, entry.first, entry.second[0], entry.second[1]});
      }
    }
  }
  return best;
}

const char* adversary_name(Adversary adversary) {
  switch (adversary) {
    case Adversary::Honest: return "honest";
    case Adversary::Delayed: return "delayed";
    case Adversary::Search: return "search";
  }
  return "?";
}

Adversary parse_adversary(std::string_view name) {
  if (name == "honest") return Adversary::Honest;
  if (name == "delayed") return Adversary::Delayed;
  if (name == "search") return Adversary::Search;
  throw ConfigError("unknown adversary: " + std::string(name));
}

SecurityReport evaluate_security(const ProtocolSpec& spec, Adversary adversary,
                                 std::uint64_t search_guard) {
  SecurityReport report;
  report.correctness = eval_correctness(spec);
  report.privacy_distance = eval_privacy(spec);
  switch (adversary) {
    case Adversary::Honest:
      report.binding = eval_binding(spec, honest_alice(spec));
      break;
    case Adversary::Delayed:
      report.binding = eval_binding(spec, delayed_alice(spec));
      break;
    case Adversary::Search:
      report.binding = search_optimal_cheat(spec, search_guard);
      break;
  }
  return report;
}

SecurityReport sample_security(const ProtocolSpec& spec, Adversary adversary,
                               std::uint64_t samples, std::uint64_t seed) {
  if (adversary == Adversary::Search) {
    throw ConfigError("the exhaustive search has no sampling mode");
  }
  auto bob = honest_bob(spec);

  auto frequency = [&](const MonteCarloResult& mc, std::optional<Bit> must_reveal) {
    std::uint64_t hits = 0;
    for (const MonteCarloEntry& entry : mc.entries) {
      CommitmentOutcome outcome = outcome_of(entry.representative, spec);
      if (!outcome.accepted) continue;
      if (must_reveal && outcome.revealed != *must_reveal) continue;
      hits += entry.count;
    }
    return Rat(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(mc.samples));
  };

  SecurityReport report;

  // Correctness: honest pair, committed bit on the tape.
  {
    auto mc = monte_carlo(spec.scenario, with_target(honest_alice(spec), std::nullopt), bob,
                          samples, seed);
    Rat good(0);
    for (const MonteCarloEntry& entry : mc.entries) {
      CommitmentOutcome outcome = outcome_of(entry.representative, spec);
      const Event* committed =
          entry.representative.view_for(Party::Alice).find(spec.alice_commit_choice_step);
      if (outcome.accepted && committed && committed->result.has_value() &&
          outcome.revealed == committed->result.value) {
        good += Rat(static_cast<std::int64_t>(entry.count));
      }
    }
    report.correctness = good / Rat(static_cast<std::int64_t>(samples));
  }

  // Privacy: empirical view distributions for the two pinned committed bits.
  {
    const int cutoff = spec.scenario.phase_mark("commit_end");
    auto empirical = [&](Bit pinned, std::uint64_t sub_seed) {
      auto mc = monte_carlo(spec.scenario,
                            with_target(honest_alice_pinned(spec, pinned), std::nullopt), bob,
                            samples, sub_seed);
      std::map<std::string, Rat> views;
      for (const MonteCarloEntry& entry : mc.entries) {
        views[entry.representative.view_for(Party::Bob, cutoff).encode()] +=
            Rat(static_cast<std::int64_t>(entry.count), static_cast<std::int64_t>(samples));
      }
      return views;
    };
    report.privacy_distance = statistical_distance(empirical(Bit(0), seed + 1), empirical(Bit(1), seed + 2));
  }

  // Binding: acceptance frequency per reveal target, leaves aggregated.
  {
    CommitmentStrategy alice =
        adversary == Adversary::Delayed ? delayed_alice(spec) : honest_alice(spec);
    BindingLeaf aggregate;
    aggregate.commit_view_key = "sampled-aggregate";
    aggregate.weight = Rat(1);
    for (int t = 0; t < 2; ++t) {
      auto mc = monte_carlo(spec.scenario, with_target(alice, Bit(t)), bob, samples,
                            seed + 3 + static_cast<std::uint64_t>(t));
      (t == 0 ? aggregate.p_accept_0 : aggregate.p_accept_1) = frequency(mc, Bit(t));
    }
    report.binding.threshold = spec.cfg.binding_threshold();
    report.binding.violation = aggregate.min_accept();
    report.binding.leaves = {std::move(aggregate)};
  }
  return report;
}

namespace {

bool honest_distributions_match(const ProtocolSpec& lhs, const ProtocolSpec& rhs) {
  auto lhs_dist = enumerate_runs(lhs.scenario, with_target(honest_alice(lhs), std::nullopt),
                                 honest_bob(lhs));
  auto rhs_dist = enumerate_runs(rhs.scenario, with_target(honest_alice(rhs), std::nullopt),
                                 honest_bob(rhs));
  if (lhs_dist.size() != rhs_dist.size()) return false;
  for (std::size_t i = 0; i < lhs_dist.size(); ++i) {
    if (lhs_dist[i].transcript.encode() != rhs_dist[i].transcript.encode()) return false;
    if (lhs_dist[i].probability != rhs_dist[i].probability) return false;
  }
  return true;
}

}  // namespace

ComposabilityDemo composability_demo(int n_epsilon) {
  ProtocolSpec ot = build_protocol("ot-commit", n_epsilon);
  ProtocolSpec sim = build_protocol("ot-sim-pr-commit", n_epsilon);
  ProtocolSpec pr = build_protocol("pr-commit", n_epsilon);

  ComposabilityDemo demo;
  demo.ot_commit = evaluate_security(ot, Adversary::Search);
  demo.ot_sim_pr_commit = evaluate_security(sim, Adversary::Delayed);
  demo.sim_matches_pr_commit = schedule_signature(sim) == schedule_signature(pr) &&
                               honest_distributions_match(sim, pr);
  return demo;
}

}  // namespace boxcommit
