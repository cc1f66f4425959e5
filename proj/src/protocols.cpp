#include "boxcommit/protocols.hpp"

#include <algorithm>

namespace boxcommit {

namespace {

struct ScheduleBuilder {
  Scenario scenario;

  int push(Party actor, StepKind kind, int slot, int box, int width, std::string label) {
    int index = static_cast<int>(scenario.steps.size());
    scenario.steps.push_back(StepSpec{index, actor, kind, slot, box, width, std::move(label)});
    return index;
  }

  void mark(const std::string& label) {
    scenario.phase_marks[label] = static_cast<int>(scenario.steps.size());
  }
};

// Bob accepts iff no box answered Pending, the opening message arrived, and
// every box satisfies x_c = mask ^ claimed & choice. For PR families x_c is
// reconstructed as box output ^ commit mask bit.
std::function<Action(const View&)> make_acceptance_rule(ProtocolFamily family, int k,
                                                        std::vector<int> bob_box_steps,
                                                        std::vector<int> bob_choice_coin_steps,
                                                        int commit_message_step,
                                                        int reveal_message_step) {
  return [family, k, bob_box_steps = std::move(bob_box_steps),
          bob_choice_coin_steps = std::move(bob_choice_coin_steps), commit_message_step,
          reveal_message_step](const View& view) -> Action {
    const Action reject = Action::decide(false, std::nullopt);

    auto opening = view.payload_at(reveal_message_step);
    if (!opening || static_cast<int>(opening->size()) != 1 + k) return reject;
    const Bit claimed = (*opening)[0];

    Bits commit_masks;
    if (family != ProtocolFamily::OtCommit) {
      auto m = view.payload_at(commit_message_step);
      if (!m || static_cast<int>(m->size()) != k) return reject;
      commit_masks = *m;
    }

    for (int i = 0; i < k; ++i) {
      const Event* box_event = view.find(bob_box_steps[i]);
      if (!box_event || !box_event->result.has_value()) return reject;  // Pending or never queried
      auto choice = view.value_at(bob_choice_coin_steps[i]);
      if (!choice) return reject;

      Bit chosen = box_event->result.value;
      if (family != ProtocolFamily::OtCommit) chosen ^= commit_masks[i];
      if (chosen != ((*opening)[1 + i] ^ (claimed & *choice))) return reject;
    }
    return Action::decide(true, claimed);
  };
}

void finish_spec(ProtocolSpec& spec, ScheduleBuilder&& builder) {
  spec.scenario = std::move(builder.scenario);
  spec.acceptance_rule =
      make_acceptance_rule(spec.family, spec.box_count(), spec.bob_box_steps,
                           spec.bob_choice_coin_steps, spec.commit_message_step,
                           spec.reveal_message_step);
  spec.scenario.validate();
}

}  // namespace

ProtocolSpec build_commit_ot(const CompositionConfig& cfg) {
  const int k = cfg.box_count();
  ProtocolSpec spec;
  spec.name = "ot-commit";
  spec.family = ProtocolFamily::OtCommit;
  spec.cfg = cfg;

  ScheduleBuilder b;
  b.scenario.name = "ot-commit/k=" + std::to_string(k);
  b.scenario.boxes.assign(k, BoxKind{OtBox{}});
  b.scenario.alice_tape_len = k + 1;
  b.scenario.bob_tape_len = k;

  for (int i = 0; i < k; ++i) {
    spec.alice_mask_slots.push_back(i);
    spec.alice_mask_coin_steps.push_back(
        b.push(Party::Alice, StepKind::SampleCoin, i, -1, 0, "commit.alice.mask" + std::to_string(i)));
  }
  spec.alice_commit_slot = k;
  spec.alice_commit_choice_step =
      b.push(Party::Alice, StepKind::SampleCoin, k, -1, 0, "commit.alice.committed");
  for (int i = 0; i < k; ++i) {
    spec.alice_box_steps.push_back(
        b.push(Party::Alice, StepKind::InputBox, -1, i, 2, "commit.alice.box" + std::to_string(i)));
  }
  spec.commit_message_step = b.push(Party::Alice, StepKind::SendMessage, -1, -1, 0, "commit.alice.turn");
  for (int i = 0; i < k; ++i) {
    spec.bob_choice_slots.push_back(i);
    spec.bob_choice_coin_steps.push_back(
        b.push(Party::Bob, StepKind::SampleCoin, i, -1, 0, "commit.bob.choice" + std::to_string(i)));
  }
  for (int i = 0; i < k; ++i) {
    spec.bob_box_steps.push_back(
        b.push(Party::Bob, StepKind::InputBox, -1, i, 1, "commit.bob.box" + std::to_string(i)));
  }
  b.mark("commit_end");
  spec.reveal_message_step =
      b.push(Party::Alice, StepKind::SendMessage, -1, -1, 1 + k, "reveal.alice.open");
  spec.decide_step = b.push(Party::Bob, StepKind::Decide, -1, -1, 0, "reveal.bob.decide");
  b.mark("end");

  finish_spec(spec, std::move(b));
  return spec;
}

ProtocolSpec build_commit_pr(const CompositionConfig& cfg) {
  const int k = cfg.box_count();
  ProtocolSpec spec;
  spec.name = "pr-commit";
  spec.family = ProtocolFamily::PrCommit;
  spec.cfg = cfg;

  ScheduleBuilder b;
  b.scenario.name = "pr-commit/k=" + std::to_string(k);
  b.scenario.boxes.assign(k, BoxKind{PrBox{}});
  b.scenario.alice_tape_len = k + 1;
  b.scenario.bob_tape_len = k;

  for (int i = 0; i < k; ++i) {
    spec.alice_mask_slots.push_back(i);
    spec.alice_mask_coin_steps.push_back(
        b.push(Party::Alice, StepKind::SampleCoin, i, -1, 0, "commit.alice.mask" + std::to_string(i)));
  }
  spec.alice_commit_slot = k;
  spec.alice_commit_choice_step =
      b.push(Party::Alice, StepKind::SampleCoin, k, -1, 0, "commit.alice.committed");
  for (int i = 0; i < k; ++i) {
    spec.alice_box_steps.push_back(
        b.push(Party::Alice, StepKind::InputBox, -1, i, 1, "commit.alice.box" + std::to_string(i)));
  }
  spec.commit_message_step =
      b.push(Party::Alice, StepKind::SendMessage, -1, -1, k, "commit.alice.masked");
  for (int i = 0; i < k; ++i) {
    spec.bob_choice_slots.push_back(i);
    spec.bob_choice_coin_steps.push_back(
        b.push(Party::Bob, StepKind::SampleCoin, i, -1, 0, "commit.bob.choice" + std::to_string(i)));
  }
  for (int i = 0; i < k; ++i) {
    spec.bob_box_steps.push_back(
        b.push(Party::Bob, StepKind::InputBox, -1, i, 1, "commit.bob.box" + std::to_string(i)));
  }
  b.mark("commit_end");
  // A PR box answers Alice whenever she queries it, so the schedule keeps a
  // late input open to her; honest runs skip it.
  for (int i = 0; i < k; ++i) {
    spec.reveal_box_steps.push_back(
        b.push(Party::Alice, StepKind::InputBox, -1, i, 1, "reveal.alice.box" + std::to_string(i)));
  }
  spec.reveal_message_step =
      b.push(Party::Alice, StepKind::SendMessage, -1, -1, 1 + k, "reveal.alice.open");
  spec.decide_step = b.push(Party::Bob, StepKind::Decide, -1, -1, 0, "reveal.bob.decide");
  b.mark("end");

  finish_spec(spec, std::move(b));
  return spec;
}

ProtocolSpec build_commit_ot_simulated(const CompositionConfig& cfg) {
  const ProtocolSpec source = build_commit_ot(cfg);
  const int k = source.box_count();

  ProtocolSpec spec;
  spec.name = "ot-sim-pr-commit";
  spec.family = ProtocolFamily::OtSimPrCommit;
  spec.cfg = cfg;
  spec.alice_mask_slots = source.alice_mask_slots;
  spec.alice_commit_slot = source.alice_commit_slot;
  spec.bob_choice_slots = source.bob_choice_slots;

  ScheduleBuilder b;
  b.scenario.name = "ot-sim-pr-commit/k=" + std::to_string(k);
  b.scenario.boxes.assign(k, BoxKind{PrBox{}});
  b.scenario.alice_tape_len = source.scenario.alice_tape_len;
  b.scenario.bob_tape_len = source.scenario.bob_tape_len;

  const int commit_end = source.scenario.phase_mark("commit_end");
  auto in = [](const std::vector<int>& steps, int index) {
    return std::find(steps.begin(), steps.end(), index) != steps.end();
  };

  // Walk the OT schedule and substitute each box by its PR simulation: the
  // two-bit OT load becomes the one-bit PR input x0 ^ x1, and the
  // simulation's mask bits x0 ^ a ride on the existing turn message.
  for (const StepSpec& step : source.scenario.steps) {
    if (step.index == commit_end) {
      b.mark("commit_end");
      // The substituted PR boxes stay privately available to Alice during
      // REVEAL; the spent OT boxes had nothing left to offer her.
      for (int i = 0; i < k; ++i) {
        spec.reveal_box_steps.push_back(b.push(
            Party::Alice, StepKind::InputBox, -1, i, 1, "reveal.alice.box" + std::to_string(i)));
      }
    }
    if (in(source.alice_mask_coin_steps, step.index)) {
      spec.alice_mask_coin_steps.push_back(
          b.push(step.actor, step.kind, step.slot, step.box, step.width, step.label));
    } else if (step.index == source.alice_commit_choice_step) {
      spec.alice_commit_choice_step =
          b.push(step.actor, step.kind, step.slot, step.box, step.width, step.label);
    } else if (in(source.alice_box_steps, step.index)) {
      spec.alice_box_steps.push_back(b.push(step.actor, step.kind, step.slot, step.box, 1,
                                            "commit.alice.simbox" + std::to_string(step.box)));
    } else if (step.index == source.commit_message_step) {
      spec.commit_message_step = b.push(step.actor, step.kind, step.slot, step.box, step.width + k,
                                        "commit.alice.masked");
    } else if (in(source.bob_choice_coin_steps, step.index)) {
      spec.bob_choice_coin_steps.push_back(
          b.push(step.actor, step.kind, step.slot, step.box, step.width, step.label));
    } else if (in(source.bob_box_steps, step.index)) {
      spec.bob_box_steps.push_back(
          b.push(step.actor, step.kind, step.slot, step.box, step.width, step.label));
    } else if (step.index == source.reveal_message_step) {
      spec.reveal_message_step =
          b.push(step.actor, step.kind, step.slot, step.box, step.width, step.label);
    } else if (step.index == source.decide_step) {
      spec.decide_step = b.push(step.actor, step.kind, step.slot, step.box, step.width, step.label);
    } else {
      b.push(step.actor, step.kind, step.slot, step.box, step.width, step.label);
    }
  }
  b.mark("end");

  finish_spec(spec, std::move(b));
  return spec;
}

ProtocolSpec build_protocol(std::string_view name, int n_epsilon) {
  CompositionConfig cfg(n_epsilon);
  if (name == "ot-commit") return build_commit_ot(cfg);
  if (name == "pr-commit") return build_commit_pr(cfg);
  if (name == "ot-sim-pr-commit") return build_commit_ot_simulated(cfg);
  throw ConfigError("unknown protocol: " + std::string(name));
}

bool is_pr_family(const ProtocolSpec& spec) { return spec.family != ProtocolFamily::OtCommit; }

CommitmentOutcome outcome_of(const Transcript& transcript, const ProtocolSpec& spec) {
  CommitmentOutcome outcome;
  for (const Event& ev : transcript.events) {
    if (ev.step_index == spec.decide_step && ev.action.kind == Action::Kind::Decide) {
      outcome.accepted = ev.action.accept;
      outcome.revealed = ev.action.revealed;
    }
    if (ev.actor == Party::Bob && ev.result.is_pending()) outcome.cheat_flag = true;
  }
  return outcome;
}

std::string schedule_signature(const ProtocolSpec& spec) {
  std::string out;
  for (const BoxKind& kind : spec.scenario.boxes) {
    out += kind_name(kind);
    out += ',';
  }
  out += '#';
  out += std::to_string(spec.scenario.alice_tape_len) + ":" +
         std::to_string(spec.scenario.bob_tape_len) + "#";
  for (const StepSpec& step : spec.scenario.steps) {
    out += party_tag(step.actor);
    switch (step.kind) {
      case StepKind::SampleCoin:
        out += 'c';
        out += std::to_string(step.slot);
        break;
      case StepKind::InputBox:
        out += 'i';
        out += std::to_string(step.box) + "w" + std::to_string(step.width);
        break;
      case StepKind::SendMessage:
        out += 'm';
        out += std::to_string(step.width);
        break;
      case StepKind::Decide:
        out += 'd';
        break;
    }
    out += ';';
  }
  out += '#';
  for (const auto& [label, mark] : spec.scenario.phase_marks) {
    out += label + "@" + std::to_string(mark) + ";";
  }
  return out;
}

std::pair<Bit, Bit> sim_pr_from_ot(Bit x, Bit y, Bit alice_coin) {
  Bit a = alice_coin;
  Bit b = ot_response(a, x ^ a, y);
  return {a, b};
}

Bit sim_ot_from_pr(Bit x0, Bit x1, Bit choice, Bit shared) {
  auto [a, b] = pr_response(x0 ^ x1, choice, shared);
  return (x0 ^ a) ^ b;
}

Bit sim_ot_from_pr_message(Bit x0, Bit x1, Bit shared) {
  Bit a = pr_response(x0 ^ x1, Bit(0), shared).first;  // a does not depend on y
  return x0 ^ a;
}

Scenario sim_pr_from_ot_scenario(Bit /*x*/, Bit /*y*/, bool bob_first) {
  Scenario sc;
  sc.name = bob_first ? "sim-pr-from-ot/bob-first" : "sim-pr-from-ot/alice-first";
  sc.boxes = {OtBox{}};
  sc.alice_tape_len = 1;
  int index = 0;
  sc.steps.push_back(StepSpec{index++, Party::Alice, StepKind::SampleCoin, 0, -1, 0, "alice.coin"});
  if (bob_first) {
    sc.steps.push_back(StepSpec{index++, Party::Bob, StepKind::InputBox, -1, 0, 1, "bob.query"});
    sc.steps.push_back(StepSpec{index++, Party::Alice, StepKind::InputBox, -1, 0, 2, "alice.load"});
  } else {
    sc.steps.push_back(StepSpec{index++, Party::Alice, StepKind::InputBox, -1, 0, 2, "alice.load"});
    sc.steps.push_back(StepSpec{index++, Party::Bob, StepKind::InputBox, -1, 0, 1, "bob.query"});
  }
  sc.phase_marks["end"] = index;
  return sc;
}

PartyStrategy sim_pr_alice(Bit x) {
  return PartyStrategy{"sim-pr-alice",
                       [x](const View& view, std::span<const Bit>, const StepSpec& step) {
                         if (step.kind == StepKind::SampleCoin) return Action::sample_coin();
                         Bit coin = view.value_at(0).value();
                         return Action::input_box(Bits{coin, x ^ coin});
                       }};
}

PartyStrategy sim_pr_bob(Bit y) {
  return PartyStrategy{"sim-pr-bob", [y](const View&, std::span<const Bit>, const StepSpec&) {
                         return Action::input_box(y);
                       }};
}

}  // namespace boxcommit
