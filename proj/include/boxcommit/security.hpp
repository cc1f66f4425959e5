#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxcommit/protocols.hpp"

namespace boxcommit {

// Alice-side strategy that also defines her behavior when, at REVEAL time,
// she is asked to get a specific target bit accepted. reveal_target is empty
// during honest runs (she then opens whatever she committed).
struct CommitmentStrategy {
  std::string name;
  std::function<Action(const View&, std::span<const Bit>, const StepSpec&, std::optional<Bit>)>
      decide;
};

PartyStrategy with_target(const CommitmentStrategy& strategy, std::optional<Bit> target);

PartyStrategy honest_bob(const ProtocolSpec& spec);

// Follows the commit schedule verbatim, committed bit drawn from the tape.
// Under a reveal target it claims the target but opens its true masks.
CommitmentStrategy honest_alice(const ProtocolSpec& spec);

// Honest play with the committed bit fixed instead of sampled (the coin step
// is skipped). Used to condition privacy and binding analyses.
CommitmentStrategy honest_alice_pinned(const ProtocolSpec& spec, Bit committed);

// The delayed-input cheat: commit to nothing, send fresh random mask bits,
// then during REVEAL feed the target into each box and open mask ^ output.
// Only PR-backed protocols leave the box available this late; applying it to
// ot-commit throws InapplicableStrategy.
CommitmentStrategy delayed_alice(const ProtocolSpec& spec);

// Plays honestly except that no box is ever loaded.
CommitmentStrategy no_input_alice(const ProtocolSpec& spec);

struct BindingLeaf {
  std::string commit_view_key;  // Alice's post-commit information state
  Rat weight{0};
  Rat p_accept_0{0};
  Rat p_accept_1{0};

  Rat min_accept() const { return p_accept_0 < p_accept_1 ? p_accept_0 : p_accept_1; }
};

// Secure binding holds iff no post-commit state lets both reveal targets
// pass with probability above the threshold; with the per-leaf minimum below
// (or at) the threshold, at most one target can exceed it.
struct BindingReport {
  std::vector<BindingLeaf> leaves;
  Rat violation{0};  // max over leaves of min(p_accept_0, p_accept_1)
  Rat threshold{0};  // 2^-n_epsilon

  bool secure() const { return violation <= threshold; }
};

struct SecurityReport {
  Rat correctness{0};
  Rat privacy_distance{0};
  BindingReport binding;
};

// P(Bob accepts and learns the committed bit) under honest parties, averaged
// over the uniform committed bit and all tapes.
Rat eval_correctness(const ProtocolSpec& spec);

// Statistical distance between Bob's pre-REVEAL view distributions for the
// two committed bits, honest Alice.
Rat eval_privacy(const ProtocolSpec& spec);

// Exact per-leaf acceptance pair for the given Alice against honest Bob.
BindingReport eval_binding(const ProtocolSpec& spec, const CommitmentStrategy& alice);

inline constexpr std::uint64_t kDefaultSearchGuard = std::uint64_t{1} << 20;

// Size of the deterministic Alice family the search walks: commit behaviors
// (box inputs and messages as functions of her observations) times one
// reveal behavior per target. Saturates at 2^64 - 1.
std::uint64_t cheat_family_size(const ProtocolSpec& spec);

// Exhaustive maximum of min(p_accept_0, p_accept_1) over all deterministic
// Alice behaviors: every choice of box inputs and message bits at her steps,
// as functions of what she has observed. Refuses families larger than the
// guard, reporting the computed size.
BindingReport search_optimal_cheat(const ProtocolSpec& spec,
                                   std::uint64_t guard = kDefaultSearchGuard);

enum class Adversary : std::uint8_t { Honest, Delayed, Search };

const char* adversary_name(Adversary adversary);
Adversary parse_adversary(std::string_view name);

// Correctness and privacy under honest parties plus binding under the chosen
// Alice.
SecurityReport evaluate_security(const ProtocolSpec& spec, Adversary adversary,
                                 std::uint64_t search_guard = kDefaultSearchGuard);

// Reproducible sampled counterpart of evaluate_security (honest or delayed
// adversaries). All reported numbers are exact frequencies count/samples.
SecurityReport sample_security(const ProtocolSpec& spec, Adversary adversary,
                               std::uint64_t samples, std::uint64_t seed);

// Side-by-side result for the substitution experiment: the OT-box scheme
// under its best cheat next to the same scheme run over simulated boxes
// under the delayed cheat, plus the structural identity with pr-commit.
struct ComposabilityDemo {
  SecurityReport ot_commit;
  SecurityReport ot_sim_pr_commit;
  bool sim_matches_pr_commit = false;
};

ComposabilityDemo composability_demo(int n_epsilon = 1);

}  // namespace boxcommit
