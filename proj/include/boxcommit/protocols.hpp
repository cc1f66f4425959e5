#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boxcommit/engine.hpp"

namespace boxcommit {

// k = 2n - 1 parallel copies give binding threshold 2^-n.
struct CompositionConfig {
  explicit CompositionConfig(int n) : n_epsilon(n) {
    if (n < 1) throw ValidationError("n_epsilon must be at least 1");
  }

  int n_epsilon;
  int box_count() const { return 2 * n_epsilon - 1; }
  Rat binding_threshold() const { return inverse_pow2(n_epsilon); }
};

enum class ProtocolFamily : std::uint8_t { OtCommit, PrCommit, OtSimPrCommit };

// A commitment protocol compiled to a concrete schedule. Alice commits to one
// bit across all boxes; Bob's decision is a pure function of his own view.
//
// Tape layout: Alice holds one mask slot per box plus the committed-bit slot;
// Bob holds one choice slot per box. The reveal message is [claimed bit,
// masks...]; PR-family commit messages carry one mask bit per box, the OT
// commit message is the empty "your turn" signal.
struct ProtocolSpec {
  std::string name;
  ProtocolFamily family = ProtocolFamily::OtCommit;
  CompositionConfig cfg{1};
  Scenario scenario;

  std::vector<int> alice_mask_coin_steps;   // one per box
  int alice_commit_choice_step = -1;
  std::vector<int> alice_box_steps;         // commit-phase inputs
  int commit_message_step = -1;
  std::vector<int> bob_choice_coin_steps;
  std::vector<int> bob_box_steps;
  std::vector<int> reveal_box_steps;        // PR families only: late inputs offered to Alice
  int reveal_message_step = -1;
  int decide_step = -1;

  std::vector<int> alice_mask_slots;
  int alice_commit_slot = -1;
  std::vector<int> bob_choice_slots;

  // Bob's decision from his view alone (the binding acceptance predicate).
  std::function<Action(const View&)> acceptance_rule;

  int box_count() const { return static_cast<int>(scenario.boxes.size()); }
};

// COMMIT over k OT boxes: Alice feeds (mask, mask ^ committed) into each box,
// Bob queries with a fresh choice bit and keeps the answer; REVEAL opens the
// committed bit and all masks, and Bob cross-checks every box.
ProtocolSpec build_commit_ot(const CompositionConfig& cfg);

// The same commitment run over PR boxes: Alice inputs her committed bit,
// masks her box output into a message, and Bob reconstructs the would-be OT
// output from his box output and that message.
ProtocolSpec build_commit_pr(const CompositionConfig& cfg);

// build_commit_ot with every OT box replaced by its PR-box simulation
// (PR input x0 ^ x1, message x0 ^ a riding on the turn message). Structurally
// identical to build_commit_pr, which the tests assert.
ProtocolSpec build_commit_ot_simulated(const CompositionConfig& cfg);

// "ot-commit" | "pr-commit" | "ot-sim-pr-commit"; throws ConfigError.
ProtocolSpec build_protocol(std::string_view name, int n_epsilon);

bool is_pr_family(const ProtocolSpec& spec);

struct CommitmentOutcome {
  bool accepted = false;
  std::optional<Bit> revealed;
  bool cheat_flag = false;  // Bob observed a Pending box
};

CommitmentOutcome outcome_of(const Transcript& transcript, const ProtocolSpec& spec);

// Label-free schedule encoding used for structural comparisons.
std::string schedule_signature(const ProtocolSpec& spec);

// Single-shot cross-simulations between the two box types, as pure
// functions of the tape.
//
// PR from OT: Alice draws a coin, feeds (coin, x ^ coin) into the OT box,
// Bob queries with y. Returns (a, b) = (coin, coin ^ x & y).
std::pair<Bit, Bit> sim_pr_from_ot(Bit x, Bit y, Bit alice_coin);

// OT from PR: Alice inputs x0 ^ x1 and announces mask = x0 ^ a; Bob inputs
// his choice and returns mask ^ b.
Bit sim_ot_from_pr(Bit x0, Bit x1, Bit choice, Bit shared);
Bit sim_ot_from_pr_message(Bit x0, Bit x1, Bit shared);

// The OT-backed PR simulation as a live scenario, to expose its timing: with
// bob_first the box is queried before Alice's input and dies Pending.
Scenario sim_pr_from_ot_scenario(Bit x, Bit y, bool bob_first);
PartyStrategy sim_pr_alice(Bit x);
PartyStrategy sim_pr_bob(Bit y);

}  // namespace boxcommit
