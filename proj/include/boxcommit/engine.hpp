#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxcommit/bits.hpp"
#include "boxcommit/corrbox.hpp"
#include "boxcommit/errors.hpp"
#include "boxcommit/rational.hpp"

namespace boxcommit {

enum class Party : std::uint8_t { Alice = 0, Bob = 1 };

constexpr Party peer_of(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }
constexpr char party_tag(Party p) { return p == Party::Alice ? 'A' : 'B'; }

enum class StepKind : std::uint8_t { SampleCoin, InputBox, SendMessage, Decide };

// One slot of the fixed alternation schedule. Time is logical: the step list
// is the total order of the run, there is no wall clock.
struct StepSpec {
  int index = 0;
  Party actor = Party::Alice;
  StepKind kind = StepKind::SampleCoin;
  int slot = -1;   // SampleCoin: the actor's tape slot
  int box = -1;    // InputBox: which box
  int width = 0;   // InputBox / SendMessage: payload bit count
  std::string label;  // documentation only, never part of canonical encodings
};

// All randomness of a run, fixed up front. Box bits hold one shared bit per
// PR box: the first party to query the box receives it as output.
struct RandomTape {
  Bits alice_bits;
  Bits bob_bits;
  Bits box_bits;

  std::span<const Bit> party_bits(Party p) const {
    return p == Party::Alice ? std::span<const Bit>(alice_bits) : std::span<const Bit>(bob_bits);
  }
};

struct Scenario {
  static constexpr int kDefaultEnumerationGuard = 24;

  std::string name;
  std::vector<BoxKind> boxes;
  int alice_tape_len = 0;
  int bob_tape_len = 0;
  std::vector<StepSpec> steps;
  // label -> step index; events with a smaller index lie before the mark.
  std::map<std::string, int> phase_marks;
  int enumeration_guard_bits = kDefaultEnumerationGuard;

  int box_tape_len() const;
  int pr_tape_slot(int box_index) const;  // -1 for boxes without a tape bit
  int total_tape_len() const;
  int phase_mark(const std::string& label) const;  // throws ConfigError
  RandomTape tape_from_index(std::uint64_t bits) const;
  void validate() const;
};

struct EventResult {
  enum class Kind : std::uint8_t { None, Value, Pending };
  Kind kind = Kind::None;
  Bit value{};

  static EventResult none() { return {}; }
  static EventResult of(Bit b) { return {Kind::Value, b}; }
  static EventResult pending() { return {Kind::Pending, Bit{}}; }

  bool has_value() const { return kind == Kind::Value; }
  bool is_pending() const { return kind == Kind::Pending; }

  friend bool operator==(const EventResult&, const EventResult&) = default;
};

struct Action {
  enum class Kind : std::uint8_t { SampleCoin, InputBox, SendMessage, Decide, Skip };

  Kind kind = Kind::Skip;
  Bits payload;                 // box inputs or message body
  bool accept = false;          // Decide
  std::optional<Bit> revealed;  // Decide

  static Action sample_coin() { return {Kind::SampleCoin, {}, false, {}}; }
  static Action input_box(Bits bits) { return {Kind::InputBox, std::move(bits), false, {}}; }
  static Action input_box(Bit bit) { return {Kind::InputBox, Bits{bit}, false, {}}; }
  static Action send_message(Bits bits) { return {Kind::SendMessage, std::move(bits), false, {}}; }
  static Action decide(bool accept, std::optional<Bit> revealed) {
    return {Kind::Decide, {}, accept, revealed};
  }
  static Action skip() { return {}; }

  friend bool operator==(const Action&, const Action&) = default;
};

struct Event {
  int step_index = 0;
  Party actor = Party::Alice;
  Action action;
  EventResult result;

  void encode_onto(std::string& out) const;
  friend bool operator==(const Event&, const Event&) = default;
};

// The events one party can see: its own steps with their results plus the
// messages it received. Never the peer's tape, box traffic, or coins.
struct View {
  Party party = Party::Alice;
  std::vector<Event> events;

  const Event* find(int step_index) const;
  std::optional<Bit> value_at(int step_index) const;
  std::optional<Bits> payload_at(int step_index) const;
  View truncated(int cutoff_step) const;
  std::string encode() const;
};

// Runtime state of one box. Ports are one-shot per party. PR and local boxes
// answer immediately; an OT box queried by Bob before Alice's input dies and
// reports Pending from then on.
struct BoxInstance {
  BoxKind kind;
  int box_index = 0;
  int pr_slot = -1;
  std::optional<Bits> alice_in;
  std::optional<Bit> bob_in;
  std::optional<Bit> alice_out;
  EventResult bob_out;
  bool dead = false;

  bool has_input(Party p) const { return p == Party::Alice ? alice_in.has_value() : bob_in.has_value(); }
  EventResult query(Party party, const Bits& inputs, const RandomTape& tape);
};

struct Transcript {
  std::vector<Event> events;
  RandomTape tape;

  std::string encode() const;  // canonical, label-free, tape excluded
  View view_for(Party p) const;
  View view_for(Party p, int cutoff_step) const;
};

struct PartyStrategy {
  std::string name;
  std::function<Action(const View&, std::span<const Bit>, const StepSpec&)> decide;
};

Transcript run(const Scenario& scenario, const PartyStrategy& alice, const PartyStrategy& bob,
               const RandomTape& tape);

struct WeightedTranscript {
  Transcript transcript;
  Rat probability;
};

// Exact distribution over transcripts: every tape at uniform weight, runs
// with identical event sequences merged. Tape slots that provably no run
// reads are not expanded (the merged weights are unchanged). Refuses
// scenarios whose declared tape exceeds the guard.
std::vector<WeightedTranscript> enumerate_runs(const Scenario& scenario,
                                               const PartyStrategy& alice,
                                               const PartyStrategy& bob);

// Exact distribution of one party's view truncated at a phase mark,
// keyed by the canonical view encoding.
std::map<std::string, Rat> view_distribution(const Scenario& scenario,
                                             const std::vector<WeightedTranscript>& dist,
                                             Party party, const std::string& cutoff_label);

// Half the L1 distance between two view distributions.
Rat statistical_distance(const std::map<std::string, Rat>& lhs,
                         const std::map<std::string, Rat>& rhs);

struct MonteCarloEntry {
  Transcript representative;
  std::uint64_t count = 0;
};

struct MonteCarloResult {
  std::uint64_t samples = 0;
  std::vector<MonteCarloEntry> entries;  // canonical transcript order
};

// Reproducible sampling of the same run semantics: the seed fixes the tape
// stream bit for bit.
MonteCarloResult monte_carlo(const Scenario& scenario, const PartyStrategy& alice,
                             const PartyStrategy& bob, std::uint64_t samples,
                             std::uint64_t seed);

// Structural no-peeking check: both parties' views contain exactly their own
// events plus received messages, verbatim from the transcript.
bool views_well_formed(const Transcript& transcript);

}  // namespace boxcommit
