#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxcommit/security.hpp"
#include "test_support.hpp"

using namespace boxcommit;
using boxcommit::testing::total_probability;

namespace {

ProtocolSpec ot1() { return build_protocol("ot-commit", 1); }
ProtocolSpec pr1() { return build_protocol("pr-commit", 1); }

// Deterministic ot-commit Alice: fixed box load, fixed opening masks per target.
CommitmentStrategy fixed_ot_alice(const ProtocolSpec& spec, std::optional<std::pair<int, int>> load,
                                  int mask_for_0, int mask_for_1) {
  int box_step = spec.alice_box_steps[0];
  int turn_step = spec.commit_message_step;
  int open_step = spec.reveal_message_step;
  return CommitmentStrategy{
      "fixed-ot-alice",
      [box_step, turn_step, open_step, load, mask_for_0, mask_for_1](
          const View&, std::span<const Bit>, const StepSpec& step,
          std::optional<Bit> target) -> Action {
        if (step.index == box_step && load) {
          return Action::input_box(Bits{Bit(load->first), Bit(load->second)});
        }
        if (step.index == turn_step) return Action::send_message({});
        if (step.index == open_step) {
          Bit claimed = target.value_or(Bit(0));
          Bit mask = Bit(claimed.value() ? mask_for_1 : mask_for_0);
          return Action::send_message(Bits{claimed, mask});
        }
        return Action::skip();
      }};
}

}  // namespace

TEST_CASE("acceptance identities, checked directly against the box formulas") {
  // ot-commit: the box hands Bob mask ^ committed & choice on every tape.
  for (int mask = 0; mask < 2; ++mask) {
    for (int committed = 0; committed < 2; ++committed) {
      for (int choice = 0; choice < 2; ++choice) {
        Bit chosen = ot_response(Bit(mask), Bit(mask) ^ Bit(committed), Bit(choice));
        CHECK(chosen == (Bit(mask) ^ (Bit(committed) & Bit(choice))));
      }
    }
  }
  // pr-commit: output ^ message reduces to the same check bit.
  for (int mask = 0; mask < 2; ++mask) {
    for (int committed = 0; committed < 2; ++committed) {
      for (int choice = 0; choice < 2; ++choice) {
        for (int shared = 0; shared < 2; ++shared) {
          auto [a, b] = pr_response(Bit(committed), Bit(choice), Bit(shared));
          Bit message = Bit(mask) ^ a;
          CHECK((b ^ message) == (Bit(mask) ^ (Bit(committed) & Bit(choice))));
        }
      }
    }
  }
}

TEST_CASE("honest parties: correctness is exactly 1") {
  CHECK(eval_correctness(ot1()) == Rat(1));
  CHECK(eval_correctness(pr1()) == Rat(1));
  CHECK(eval_correctness(build_protocol("ot-sim-pr-commit", 1)) == Rat(1));
  CHECK(eval_correctness(build_protocol("ot-commit", 2)) == Rat(1));
  CHECK(eval_correctness(build_protocol("pr-commit", 2)) == Rat(1));
}

TEST_CASE("ot-commit worked trace: mask 0, committed 1, choice 1") {
  ProtocolSpec spec = ot1();
  // Tape layout alice|bob: mask=0, committed=1, choice=1.
  Transcript t = run(spec.scenario, with_target(honest_alice(spec), std::nullopt),
                     honest_bob(spec), spec.scenario.tape_from_index(0b110));
  CHECK(t.view_for(Party::Bob).value_at(spec.bob_box_steps[0]) == Bit(1));  // x_c = 0 ^ 1&1
  CommitmentOutcome outcome = outcome_of(t, spec);
  CHECK(outcome.accepted);
  CHECK(outcome.revealed == Bit(1));
  CHECK_FALSE(outcome.cheat_flag);
}

TEST_CASE("an always-reject rule drives correctness to 0") {
  ProtocolSpec spec = ot1();
  spec.acceptance_rule = [](const View&) { return Action::decide(false, std::nullopt); };
  CHECK(eval_correctness(spec) == Rat(0));
}

TEST_CASE("views stay well formed across full protocol runs") {
  for (const char* name : {"ot-commit", "pr-commit", "ot-sim-pr-commit"}) {
    ProtocolSpec spec = build_protocol(name, 1);
    auto dist = enumerate_runs(spec.scenario, with_target(honest_alice(spec), std::nullopt),
                               honest_bob(spec));
    for (const auto& wt : dist) {
      CHECK(views_well_formed(wt.transcript));
    }
  }
}

TEST_CASE("honest pr-commit with committed bit 0 leaves the check bit equal to the mask") {
  ProtocolSpec spec = pr1();
  auto dist = enumerate_runs(spec.scenario,
                             with_target(honest_alice_pinned(spec, Bit(0)), std::nullopt),
                             honest_bob(spec));
  CHECK(total_probability(dist) == Rat(1));
  for (const auto& wt : dist) {
    const Transcript& t = wt.transcript;
    Bit mask = t.view_for(Party::Alice).value_at(spec.alice_mask_coin_steps[0]).value();
    Bit b = t.view_for(Party::Bob).value_at(spec.bob_box_steps[0]).value();
    Bit m = (*t.view_for(Party::Bob).payload_at(spec.commit_message_step))[0];
    CHECK((b ^ m) == mask);
    CHECK(outcome_of(t, spec).accepted);
  }
}

TEST_CASE("privacy") {
  CHECK(eval_privacy(ot1()) == Rat(0));
  CHECK(eval_privacy(pr1()) == Rat(0));
  CHECK(eval_privacy(build_protocol("ot-sim-pr-commit", 1)) == Rat(0));
  CHECK(eval_privacy(build_protocol("ot-commit", 2)) == Rat(0));
  CHECK(eval_privacy(build_protocol("pr-commit", 2)) == Rat(0));
}

TEST_CASE("a protocol that sends the committed bit in the open has privacy distance 1") {
  Scenario sc;
  sc.name = "leaky";
  sc.alice_tape_len = 1;
  sc.steps = {StepSpec{0, Party::Alice, StepKind::SendMessage, -1, -1, 1, "leak"}};
  sc.phase_marks["commit_end"] = 1;

  auto leaky = [](Bit committed) {
    return PartyStrategy{"leaky-alice",
                         [committed](const View&, std::span<const Bit>, const StepSpec&) {
                           return Action::send_message(Bits{committed});
                         }};
  };
  auto bob = boxcommit::testing::scripted("bob", {});
  auto views0 = view_distribution(sc, enumerate_runs(sc, leaky(Bit(0)), bob), Party::Bob, "commit_end");
  auto views1 = view_distribution(sc, enumerate_runs(sc, leaky(Bit(1)), bob), Party::Bob, "commit_end");
  CHECK(statistical_distance(views0, views1) == Rat(1));
}

TEST_CASE("honest Bob rejects when the box never answers") {
  ProtocolSpec spec = ot1();
  for (int t = 0; t < 2; ++t) {
    auto dist =
        enumerate_runs(spec.scenario, with_target(no_input_alice(spec), Bit(t)), honest_bob(spec));
    CHECK(total_probability(dist) == Rat(1));
    for (const auto& wt : dist) {
      CommitmentOutcome outcome = outcome_of(wt.transcript, spec);
      CHECK(outcome.cheat_flag);
      CHECK_FALSE(outcome.accepted);
    }
  }
}

TEST_CASE("binding under honest alice: the flipped opening only guesses the choice bit") {
  BindingReport report = eval_binding(ot1(), honest_alice(ot1()));
  REQUIRE(report.leaves.size() == 4);  // mask and committed bit both on the tape
  for (const BindingLeaf& leaf : report.leaves) {
    CHECK(leaf.weight == Rat(1, 4));
    CHECK(leaf.min_accept() == Rat(1, 2));
    CHECK(std::max(leaf.p_accept_0, leaf.p_accept_1) == Rat(1));
  }
  CHECK(report.violation == Rat(1, 2));
  CHECK(report.threshold == Rat(1, 2));
  CHECK(report.secure());
}

TEST_CASE("binding under honest-commit-then-flip alice") {
  ProtocolSpec spec = ot1();
  BindingReport report = eval_binding(spec, honest_alice_pinned(spec, Bit(0)));
  REQUIRE(report.leaves.size() == 2);  // the mask bit
  for (const BindingLeaf& leaf : report.leaves) {
    CHECK(leaf.p_accept_0 == Rat(1));
    CHECK(leaf.p_accept_1 == Rat(1, 2));
  }
  CHECK(report.violation == Rat(1, 2));
  CHECK(report.secure());
}

TEST_CASE("delayed alice") {
  SUBCASE("does not apply to the gated boxes") {
    CHECK_THROWS_AS(delayed_alice(ot1()), InapplicableStrategy);
  }

  SUBCASE("wins both targets with certainty on one box") {
    ProtocolSpec spec = pr1();
    BindingReport report = eval_binding(spec, delayed_alice(spec));
    REQUIRE(report.leaves.size() == 2);  // her random message bit
    for (const BindingLeaf& leaf : report.leaves) {
      CHECK(leaf.p_accept_0 == Rat(1));
      CHECK(leaf.p_accept_1 == Rat(1));
    }
    CHECK(report.violation == Rat(1));
    CHECK_FALSE(report.secure());
  }

  SUBCASE("the same trick wins on every parallel copy") {
    ProtocolSpec spec = build_protocol("pr-commit", 2);  // 3 boxes
    BindingReport report = eval_binding(spec, delayed_alice(spec));
    CHECK(report.violation == Rat(1));
    CHECK(report.threshold == Rat(1, 4));
    CHECK_FALSE(report.secure());
  }

  SUBCASE("also against the simulated boxes") {
    ProtocolSpec spec = build_protocol("ot-sim-pr-commit", 1);
    BindingReport report = eval_binding(spec, delayed_alice(spec));
    CHECK(report.violation == Rat(1));
    CHECK_FALSE(report.secure());
  }
}

TEST_CASE("no alice behavior ever produces a Pending event against pr boxes") {
  for (const char* name : {"pr-commit", "ot-sim-pr-commit"}) {
    ProtocolSpec spec = build_protocol(name, 1);
    auto bob = honest_bob(spec);
    std::vector<CommitmentStrategy> alices = {honest_alice(spec), delayed_alice(spec),
                                              no_input_alice(spec)};
    for (const auto& alice : alices) {
      for (int t = 0; t < 2; ++t) {
        for (const auto& wt : enumerate_runs(spec.scenario, with_target(alice, Bit(t)), bob)) {
          for (const Event& ev : wt.transcript.events) {
            CHECK_FALSE(ev.result.is_pending());
          }
        }
      }
    }
  }
}

TEST_CASE("exhaustive search") {
  SUBCASE("ot-commit with one box caps every cheat at 1/2") {
    BindingReport report = search_optimal_cheat(ot1());
    CHECK(report.violation == Rat(1, 2));
    CHECK(report.threshold == Rat(1, 2));
    CHECK(report.secure());
  }

  SUBCASE("three parallel boxes cap every cheat at 1/4") {
    BindingReport report = search_optimal_cheat(build_protocol("ot-commit", 2));
    CHECK(report.violation == Rat(1, 4));
    CHECK(report.threshold == Rat(1, 4));
    CHECK(report.secure());
  }

  SUBCASE("the search rediscovers the delayed-input cheat on pr boxes") {
    BindingReport report = search_optimal_cheat(pr1());
    CHECK(report.violation == Rat(1));
    CHECK_FALSE(report.secure());
  }

  SUBCASE("family guard refusal") {
    CHECK_THROWS_AS(search_optimal_cheat(build_protocol("pr-commit", 2)), GuardLimitError);
    CHECK_THROWS_AS(search_optimal_cheat(ot1(), 3), GuardLimitError);
  }
}

TEST_CASE("strategy family sizes match hand counts") {
  // ot-commit(1): commit = (4 loads + skip) * (turn sent or skipped) = 10;
  // reveal per target = 2 masks + skip = 3; total 10 * 3 * 3.
  CHECK(cheat_family_size(ot1()) == 90);
  // ot-commit(2): 5^3 loads * 2 turns * (2^3 masks + skip)^2.
  CHECK(cheat_family_size(build_protocol("ot-commit", 2)) == 20250);
  // pr-commit(1): committed-input trees branch on the observed output
  // (2 * (3 messages)^2 = 18 commit trees, reveal 3 per target and leaf),
  // the skip tree keeps the late input open (21 reveal plans per target):
  // 18 * (3*3)^2 + 3 * 21^2.
  CHECK(cheat_family_size(pr1()) == 2781);
  CHECK(cheat_family_size(pr1()) <= kDefaultSearchGuard);
}

TEST_CASE("no opening can rescue an alice who never loaded the gated box") {
  ProtocolSpec spec = ot1();
  for (int mask0 = 0; mask0 < 2; ++mask0) {
    for (int mask1 = 0; mask1 < 2; ++mask1) {
      BindingReport report =
          eval_binding(spec, fixed_ot_alice(spec, std::nullopt, mask0, mask1));
      CHECK(report.violation == Rat(0));
      for (const BindingLeaf& leaf : report.leaves) {
        CHECK(leaf.p_accept_0 == Rat(0));
        CHECK(leaf.p_accept_1 == Rat(0));
      }
    }
  }
}

TEST_CASE("a mixed strategy never beats its best component") {
  ProtocolSpec spec = ot1();

  auto mixture = [&spec](CommitmentStrategy a, CommitmentStrategy b) {
    int selector_step = spec.alice_mask_coin_steps[0];
    return CommitmentStrategy{
        "mixture",
        [selector_step, a = std::move(a), b = std::move(b)](
            const View& view, std::span<const Bit> tape, const StepSpec& step,
            std::optional<Bit> target) -> Action {
          if (step.index == selector_step) return Action::sample_coin();
          Bit coin = view.value_at(selector_step).value();
          const CommitmentStrategy& chosen = coin.value() ? b : a;
          return chosen.decide(view, tape, step, target);
        }};
  };

  std::vector<std::pair<CommitmentStrategy, CommitmentStrategy>> pairs;
  pairs.emplace_back(fixed_ot_alice(spec, {{0, 0}}, 0, 0), fixed_ot_alice(spec, {{0, 1}}, 0, 0));
  pairs.emplace_back(fixed_ot_alice(spec, {{0, 0}}, 0, 0), fixed_ot_alice(spec, std::nullopt, 0, 0));
  pairs.emplace_back(fixed_ot_alice(spec, {{1, 0}}, 1, 1), fixed_ot_alice(spec, {{1, 1}}, 1, 0));

  for (const auto& [a, b] : pairs) {
    Rat va = eval_binding(spec, a).violation;
    Rat vb = eval_binding(spec, b).violation;
    Rat vm = eval_binding(spec, mixture(a, b)).violation;
    CHECK(vm == std::max(va, vb));
  }
}

TEST_CASE("sampled runs reproduce the exact verdicts on certain events") {
  SUBCASE("honest ot-commit accepts every sample") {
    SecurityReport report = sample_security(ot1(), Adversary::Honest, 2000, 7);
    CHECK(report.correctness == Rat(1));
    CHECK(report.binding.leaves.size() == 1);
    CHECK(report.binding.leaves[0].p_accept_0 + report.binding.leaves[0].p_accept_1 >= Rat(1));
  }

  SUBCASE("delayed pr-commit accepts every sample for both targets") {
    SecurityReport report = sample_security(pr1(), Adversary::Delayed, 1000, 11);
    CHECK(report.binding.leaves.size() == 1);
    CHECK(report.binding.leaves[0].p_accept_0 == Rat(1));
    CHECK(report.binding.leaves[0].p_accept_1 == Rat(1));
    CHECK(report.binding.violation == Rat(1));
  }

  SUBCASE("fixed seed, identical report") {
    SecurityReport r1 = sample_security(pr1(), Adversary::Delayed, 500, 3);
    SecurityReport r2 = sample_security(pr1(), Adversary::Delayed, 500, 3);
    CHECK(r1.correctness == r2.correctness);
    CHECK(r1.privacy_distance == r2.privacy_distance);
    CHECK(r1.binding.violation == r2.binding.violation);
  }

  SUBCASE("search has no sampling mode") {
    CHECK_THROWS_AS(sample_security(ot1(), Adversary::Search, 10, 1), ConfigError);
  }
}

TEST_CASE("composability demo: same statistics, opposite verdicts") {
  ComposabilityDemo demo = composability_demo(1);
  CHECK(demo.ot_commit.binding.violation == Rat(1, 2));
  CHECK(demo.ot_commit.binding.secure());
  CHECK(demo.ot_sim_pr_commit.binding.violation == Rat(1));
  CHECK_FALSE(demo.ot_sim_pr_commit.binding.secure());
  CHECK(demo.ot_commit.correctness == Rat(1));
  CHECK(demo.ot_sim_pr_commit.correctness == Rat(1));
  CHECK(demo.ot_commit.privacy_distance == Rat(0));
  CHECK(demo.ot_sim_pr_commit.privacy_distance == Rat(0));
  CHECK(demo.sim_matches_pr_commit);
}
