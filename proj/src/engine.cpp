#include "boxcommit/engine.hpp"

#include <algorithm>
#include <random>

namespace boxcommit {

namespace {

// Which tape slots a set of runs actually consumed, in the global slot order
// alice | bob | box.
struct ReadTrace {
  std::vector<bool> alice, bob, box;

  explicit ReadTrace(const Scenario& sc)
      : alice(sc.alice_tape_len, false),
        bob(sc.bob_tape_len, false),
        box(sc.box_tape_len(), false) {}

  std::vector<bool>& of(Party p) { return p == Party::Alice ? alice : bob; }
};

int expected_input_width(const BoxKind& kind, Party actor) {
  if (std::holds_alternative<OtBox>(kind) && actor == Party::Alice) return 2;
  return 1;
}

void validate_action(const Action& action, const StepSpec& step) {
  if (step.kind == StepKind::Decide) {
    if (action.kind != Action::Kind::Decide) {
      throw ProtocolViolation("step " + std::to_string(step.index) + " requires a decision");
    }
    if (action.accept && !action.revealed.has_value()) {
      throw ProtocolViolation("accepting decision must carry the revealed bit");
    }
    return;
  }
  if (action.kind == Action::Kind::Skip) return;

  auto mismatch = [&] {
    throw ProtocolViolation("action not permitted at step " + std::to_string(step.index));
  };
  switch (step.kind) {
    case StepKind::SampleCoin:
      if (action.kind != Action::Kind::SampleCoin || !action.payload.empty()) mismatch();
      break;
    case StepKind::InputBox:
      if (action.kind != Action::Kind::InputBox) mismatch();
      if (static_cast<int>(action.payload.size()) != step.width) {
        throw ProtocolViolation("box input width mismatch at step " + std::to_string(step.index));
      }
      break;
    case StepKind::SendMessage:
      if (action.kind != Action::Kind::SendMessage) mismatch();
      if (static_cast<int>(action.payload.size()) != step.width) {
        throw ProtocolViolation("message width mismatch at step " + std::to_string(step.index));
      }
      break;
    case StepKind::Decide:
      break;
  }
}

Transcript run_impl(const Scenario& scenario, const PartyStrategy& alice,
                    const PartyStrategy& bob, const RandomTape& tape, ReadTrace* trace) {
  if (static_cast<int>(tape.alice_bits.size()) != scenario.alice_tape_len ||
      static_cast<int>(tape.bob_bits.size()) != scenario.bob_tape_len ||
      static_cast<int>(tape.box_bits.size()) != scenario.box_tape_len()) {
    throw ValidationError("tape lengths do not match the scenario declaration");
  }

  std::vector<BoxInstance> boxes;
  boxes.reserve(scenario.boxes.size());
  for (std::size_t i = 0; i < scenario.boxes.size(); ++i) {
    boxes.push_back(BoxInstance{scenario.boxes[i], static_cast<int>(i),
                                scenario.pr_tape_slot(static_cast<int>(i)),
                                {}, {}, {}, EventResult::none(), false});
  }

  Transcript transcript;
  transcript.tape = tape;
  View alice_view{Party::Alice, {}};
  View bob_view{Party::Bob, {}};

  for (const StepSpec& step : scenario.steps) {
    const bool is_alice = step.actor == Party::Alice;
    const PartyStrategy& strategy = is_alice ? alice : bob;
    View& own_view = is_alice ? alice_view : bob_view;
    View& peer_view = is_alice ? bob_view : alice_view;

    Action action = strategy.decide(own_view, tape.party_bits(step.actor), step);
    validate_action(action, step);

    EventResult result = EventResult::none();
    switch (action.kind) {
      case Action::Kind::SampleCoin: {
        result = EventResult::of(tape.party_bits(step.actor)[step.slot]);
        if (trace) trace->of(step.actor)[step.slot] = true;
        break;
      }
      case Action::Kind::InputBox: {
        BoxInstance& box = boxes[step.box];
        const bool consumes_tape_bit = std::holds_alternative<PrBox>(box.kind) &&
                                       !box.alice_out.has_value() && !box.bob_out.has_value();
        result = box.query(step.actor, action.payload, tape);
        if (trace && consumes_tape_bit) trace->box[box.pr_slot] = true;
        break;
      }
      case Action::Kind::SendMessage:
      case Action::Kind::Decide:
      case Action::Kind::Skip:
        break;
    }

    Event event{step.index, step.actor, std::move(action), result};
    transcript.events.push_back(event);
    own_view.events.push_back(event);
    if (event.action.kind == Action::Kind::SendMessage) peer_view.events.push_back(std::move(event));
  }
  return transcript;
}

}  // namespace

int Scenario::box_tape_len() const {
  int n = 0;
  for (const BoxKind& kind : boxes) {
    if (std::holds_alternative<PrBox>(kind)) ++n;
  }
  return n;
}

int Scenario::pr_tape_slot(int box_index) const {
  if (!std::holds_alternative<PrBox>(boxes.at(box_index))) return -1;
  int slot = 0;
  for (int i = 0; i < box_index; ++i) {
    if (std::holds_alternative<PrBox>(boxes[i])) ++slot;
  }
  return slot;
}

int Scenario::total_tape_len() const { return alice_tape_len + bob_tape_len + box_tape_len(); }

int Scenario::phase_mark(const std::string& label) const {
  auto it = phase_marks.find(label);
  if (it == phase_marks.end()) throw ConfigError("unknown phase mark: " + label);
  return it->second;
}

RandomTape Scenario::tape_from_index(std::uint64_t bits) const {
  RandomTape tape;
  tape.alice_bits.resize(alice_tape_len);
  tape.bob_bits.resize(bob_tape_len);
  tape.box_bits.resize(box_tape_len());
  int g = 0;
  for (Bit& b : tape.alice_bits) b = Bit(static_cast<int>((bits >> g++) & 1));
  for (Bit& b : tape.bob_bits) b = Bit(static_cast<int>((bits >> g++) & 1));
  for (Bit& b : tape.box_bits) b = Bit(static_cast<int>((bits >> g++) & 1));
  return tape;
}

void Scenario::validate() const {
  if (alice_tape_len < 0 || bob_tape_len < 0) throw ValidationError("negative tape length");
  if (enumeration_guard_bits < 0 || enumeration_guard_bits > 62) {
    throw ValidationError("enumeration guard must lie in [0, 62]");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const StepSpec& step = steps[i];
    if (step.index != static_cast<int>(i)) throw ValidationError("step indices must be contiguous");
    switch (step.kind) {
      case StepKind::SampleCoin: {
        int len = step.actor == Party::Alice ? alice_tape_len : bob_tape_len;
        if (step.slot < 0 || step.slot >= len) throw ValidationError("coin slot out of range");
        break;
      }
      case StepKind::InputBox: {
        if (step.box < 0 || step.box >= static_cast<int>(boxes.size())) {
          throw ValidationError("box index out of range");
        }
        if (step.width != expected_input_width(boxes[step.box], step.actor)) {
          throw ValidationError("declared input width does not match the box port");
        }
        break;
      }
      case StepKind::SendMessage:
        if (step.width < 0) throw ValidationError("negative message width");
        break;
      case StepKind::Decide:
        break;
    }
  }
  for (const auto& [label, mark] : phase_marks) {
    if (mark < 0 || mark > static_cast<int>(steps.size())) {
      throw ValidationError("phase mark out of range: " + label);
    }
  }
}

void Event::encode_onto(std::string& out) const {
  out += std::to_string(step_index);
  out += party_tag(actor);
  switch (action.kind) {
    case Action::Kind::SampleCoin: out += 'c'; break;
    case Action::Kind::InputBox: out += 'i'; break;
    case Action::Kind::SendMessage: out += 'm'; break;
    case Action::Kind::Skip: out += 's'; break;
    case Action::Kind::Decide:
      out += 'd';
      out += action.accept ? 'a' : 'r';
      if (action.revealed) out += static_cast<char>('0' + action.revealed->value());
      break;
  }
  if (!action.payload.empty()) out += to_string(action.payload);
  if (result.has_value()) {
    out += '=';
    out += static_cast<char>('0' + result.value.value());
  } else if (result.is_pending()) {
    out += "=P";
  }
  out += ';';
}

const Event* View::find(int step_index) const {
  for (const Event& ev : events) {
    if (ev.step_index == step_index) return &ev;
  }
  return nullptr;
}

std::optional<Bit> View::value_at(int step_index) const {
  const Event* ev = find(step_index);
  if (!ev || !ev->result.has_value()) return std::nullopt;
  return ev->result.value;
}

std::optional<Bits> View::payload_at(int step_index) const {
  const Event* ev = find(step_index);
  if (!ev) return std::nullopt;
  if (ev->action.kind != Action::Kind::SendMessage && ev->action.kind != Action::Kind::InputBox) {
    return std::nullopt;
  }
  return ev->action.payload;
}

View View::truncated(int cutoff_step) const {
  View out{party, {}};
  for (const Event& ev : events) {
    if (ev.step_index < cutoff_step) out.events.push_back(ev);
  }
  return out;
}

std::string View::encode() const {
  std::string out;
  out += party_tag(party);
  out += '|';
  for (const Event& ev : events) ev.encode_onto(out);
  return out;
}

EventResult BoxInstance::query(Party party, const Bits& inputs, const RandomTape& tape) {
  if (has_input(party)) {
    throw ProtocolViolation("double input on box " + std::to_string(box_index));
  }
  if (static_cast<int>(inputs.size()) != expected_input_width(kind, party)) {
    throw ProtocolViolation("box input width mismatch on box " + std::to_string(box_index));
  }

  if (std::holds_alternative<PrBox>(kind)) {
    const bool first_mover = !alice_out.has_value() && !bob_out.has_value();
    Bit out;
    if (first_mover) {
      out = tape.box_bits[pr_slot];
    } else {
      // Second mover's output is forced by a ^ b = x & y.
      Bit prior = party == Party::Alice ? bob_out.value : *alice_out;
      Bit x = party == Party::Alice ? inputs[0] : (*alice_in)[0];
      Bit y = party == Party::Bob ? inputs[0] : *bob_in;
      out = prior ^ (x & y);
    }
    if (party == Party::Alice) {
      alice_in = inputs;
      alice_out = out;
    } else {
      bob_in = inputs[0];
      bob_out = EventResult::of(out);
    }
    return EventResult::of(out);
  }

  if (std::holds_alternative<OtBox>(kind)) {
    if (party == Party::Alice) {
      alice_in = inputs;
      return EventResult::none();
    }
    bob_in = inputs[0];
    if (dead || !alice_in.has_value()) {
      dead = true;
      bob_out = EventResult::pending();
      return bob_out;
    }
    bob_out = EventResult::of(ot_response((*alice_in)[0], (*alice_in)[1], *bob_in));
    return bob_out;
  }

  if (const auto* local = std::get_if<LocalDeterministicBox>(&kind)) {
    Bit out = party == Party::Alice ? local->alice_fn(inputs[0]) : local->bob_fn(inputs[0]);
    if (party == Party::Alice) {
      alice_in = inputs;
      alice_out = out;
    } else {
      bob_in = inputs[0];
      bob_out = EventResult::of(out);
    }
    return EventResult::of(out);
  }

  throw ValidationError("general boxes are analysis-only and cannot be queried");
}

std::string Transcript::encode() const {
  std::string out;
  for (const Event& ev : events) ev.encode_onto(out);
  return out;
}

View Transcript::view_for(Party p) const {
  View view{p, {}};
  for (const Event& ev : events) {
    if (ev.actor == p || ev.action.kind == Action::Kind::SendMessage) view.events.push_back(ev);
  }
  return view;
}

View Transcript::view_for(Party p, int cutoff_step) const {
  return view_for(p).truncated(cutoff_step);
}

Transcript run(const Scenario& scenario, const PartyStrategy& alice, const PartyStrategy& bob,
               const RandomTape& tape) {
  scenario.validate();
  return run_impl(scenario, alice, bob, tape, nullptr);
}

std::vector<WeightedTranscript> enumerate_runs(const Scenario& scenario,
                                               const PartyStrategy& alice,
                                               const PartyStrategy& bob) {
  scenario.validate();
  const int total = scenario.total_tape_len();
  if (total > scenario.enumeration_guard_bits) {
    throw GuardLimitError("exact enumeration needs " + std::to_string(total) +
                          " tape bits, above the guard of " +
                          std::to_string(scenario.enumeration_guard_bits));
  }

  // Grow the set of tape slots some run actually reads until it is closed,
  // then enumerate assignments of exactly those slots. A slot no run reads
  // cannot influence any event, so the merged distribution is unchanged.
  std::vector<int> active;  // global slot ids
  ReadTrace read(scenario);
  std::vector<WeightedTranscript> result;
  while (true) {
    std::map<std::string, std::size_t> index;
    result.clear();
    bool grew = false;
    const int n = static_cast<int>(active.size());
    const Rat weight = inverse_pow2(n);
    for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << n); ++assignment) {
      std::uint64_t tape_bits = 0;
      for (int j = 0; j < n; ++j) {
        tape_bits |= ((assignment >> j) & 1) << active[j];
      }
      ReadTrace trace(scenario);
      Transcript t = run_impl(scenario, alice, bob, scenario.tape_from_index(tape_bits), &trace);

      auto absorb = [&](const std::vector<bool>& seen, std::vector<bool>& known, int base) {
        for (std::size_t i = 0; i < seen.size(); ++i) {
          if (seen[i] && !known[i]) {
            known[i] = true;
            active.push_back(base + static_cast<int>(i));
            grew = true;
          }
        }
      };
      absorb(trace.alice, read.alice, 0);
      absorb(trace.bob, read.bob, scenario.alice_tape_len);
      absorb(trace.box, read.box, scenario.alice_tape_len + scenario.bob_tape_len);
      if (grew) break;

      std::string key = t.encode();
      auto [it, inserted] = index.try_emplace(std::move(key), result.size());
      if (inserted) {
        result.push_back(WeightedTranscript{std::move(t), weight});
      } else {
        result[it->second].probability += weight;
      }
    }
    if (!grew) break;
    std::sort(active.begin(), active.end());
  }

  std::sort(result.begin(), result.end(),
            [](const WeightedTranscript& a, const WeightedTranscript& b) {
              return a.transcript.encode() < b.transcript.encode();
            });
  return result;
}

std::map<std::string, Rat> view_distribution(const Scenario& scenario,
                                             const std::vector<WeightedTranscript>& dist,
                                             Party party, const std::string& cutoff_label) {
  const int cutoff = scenario.phase_mark(cutoff_label);
  std::map<std::string, Rat> out;
  for (const WeightedTranscript& wt : dist) {
    std::string key = wt.transcript.view_for(party, cutoff).encode();
    auto [it, inserted] = out.try_emplace(std::move(key), wt.probability);
    if (!inserted) it->second += wt.probability;
  }
  return out;
}

Rat statistical_distance(const std::map<std::string, Rat>& lhs,
                         const std::map<std::string, Rat>& rhs) {
  Rat total(0);
  for (const auto& [key, p] : lhs) {
    auto it = rhs.find(key);
    total += rat_abs(p - (it == rhs.end() ? Rat(0) : it->second));
  }
  for (const auto& [key, q] : rhs) {
    if (!lhs.contains(key)) total += q;
  }
  return total * Rat(1, 2);
}

MonteCarloResult monte_carlo(const Scenario& scenario, const PartyStrategy& alice,
                             const PartyStrategy& bob, std::uint64_t samples,
                             std::uint64_t seed) {
  if (samples < 1) throw ValidationError("monte carlo needs at least one sample");
  scenario.validate();

  std::mt19937_64 rng(seed);
  std::map<std::string, std::size_t> index;
  std::vector<MonteCarloEntry> entries;
  const int total = scenario.total_tape_len();
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::uint64_t bits = 0;
    for (int j = 0; j < total; ++j) bits |= (rng() & 1) << j;
    Transcript t = run_impl(scenario, alice, bob, scenario.tape_from_index(bits), nullptr);
    std::string key = t.encode();
    auto [it, inserted] = index.try_emplace(std::move(key), entries.size());
    if (inserted) {
      entries.push_back(MonteCarloEntry{std::move(t), 1});
    } else {
      ++entries[it->second].count;
    }
  }
  std::sort(entries.begin(), entries.end(), [](const MonteCarloEntry& a, const MonteCarloEntry& b) {
    return a.representative.encode() < b.representative.encode();
  });
  return MonteCarloResult{samples, std::move(entries)};
}

bool views_well_formed(const Transcript& transcript) {
  for (Party p : {Party::Alice, Party::Bob}) {
    View view = transcript.view_for(p);
    std::size_t cursor = 0;
    for (const Event& ev : view.events) {
      const bool own = ev.actor == p;
      const bool received = ev.actor == peer_of(p) && ev.action.kind == Action::Kind::SendMessage;
      if (!own && !received) return false;
      // Every view event must appear verbatim, in order, in the transcript.
      while (cursor < transcript.events.size() && !(transcript.events[cursor] == ev)) ++cursor;
      if (cursor == transcript.events.size()) return false;
      ++cursor;
    }
  }
  return true;
}

}  // namespace boxcommit
