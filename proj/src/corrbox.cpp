#include "boxcommit/corrbox.hpp"

#include <numeric>

namespace boxcommit {

const std::array<UnaryBitFn, 4>& UnaryBitFn::all() {
  static const std::array<UnaryBitFn, 4> fns = {
      UnaryBitFn(Bit(0), Bit(0)),  // zero
      UnaryBitFn(Bit(1), Bit(1)),  // one
      UnaryBitFn(Bit(0), Bit(1)),  // id
      UnaryBitFn(Bit(1), Bit(0)),  // not
  };
  return fns;
}

UnaryBitFn UnaryBitFn::named(std::string_view name) {
  if (name == "zero") return UnaryBitFn(Bit(0), Bit(0));
  if (name == "one") return UnaryBitFn(Bit(1), Bit(1));
  if (name == "id") return UnaryBitFn(Bit(0), Bit(1));
  if (name == "not") return UnaryBitFn(Bit(1), Bit(0));
  throw ConfigError("unknown unary bit function: " + std::string(name));
}

std::string UnaryBitFn::name() const {
  if (at_zero_ == Bit(0) && at_one_ == Bit(0)) return "zero";
  if (at_zero_ == Bit(1) && at_one_ == Bit(1)) return "one";
  if (at_zero_ == Bit(0) && at_one_ == Bit(1)) return "id";
  return "not";
}

JointConditional::JointConditional(int alice_arity, int bob_arity)
    : alice_arity_(alice_arity), bob_arity_(bob_arity) {
  if (alice_arity < 1 || bob_arity < 1) throw ValidationError("input arity must be positive");
  cells_.assign(static_cast<std::size_t>(alice_arity) * bob_arity * 4, Rat(0));
}

int JointConditional::cell_index(int alice_in, int bob_in, int out_a, int out_b) const {
  if (alice_in < 0 || alice_in >= alice_arity_ || bob_in < 0 || bob_in >= bob_arity_ ||
      out_a < 0 || out_a > 1 || out_b < 0 || out_b > 1) {
    throw ValidationError("conditional table index out of range");
  }
  return (alice_in * bob_arity_ + bob_in) * 4 + out_a * 2 + out_b;
}

const Rat& JointConditional::at(int alice_in, int bob_in, int out_a, int out_b) const {
  return cells_[cell_index(alice_in, bob_in, out_a, out_b)];
}

Rat& JointConditional::at(int alice_in, int bob_in, int out_a, int out_b) {
  return cells_[cell_index(alice_in, bob_in, out_a, out_b)];
}

Rat JointConditional::alice_output_marginal(int alice_in, int bob_in, int out_a) const {
  return at(alice_in, bob_in, out_a, 0) + at(alice_in, bob_in, out_a, 1);
}

Rat JointConditional::bob_output_marginal(int alice_in, int bob_in, int out_b) const {
  return at(alice_in, bob_in, 0, out_b) + at(alice_in, bob_in, 1, out_b);
}

void JointConditional::validate() const {
  for (int ax = 0; ax < alice_arity_; ++ax) {
    for (int by = 0; by < bob_arity_; ++by) {
      Rat sum(0);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const Rat& p = at(ax, by, a, b);
          if (p < Rat(0)) throw ValidationError("negative probability entry");
          sum += p;
        }
      }
      if (sum != Rat(1)) {
        throw ValidationError("conditional row does not sum to 1 (got " + to_string(sum) + ")");
      }
    }
  }
}

std::string kind_name(const BoxKind& kind) {
  if (std::holds_alternative<PrBox>(kind)) return "pr";
  if (std::holds_alternative<OtBox>(kind)) return "ot";
  if (const auto* local = std::get_if<LocalDeterministicBox>(&kind)) {
    return "local:" + local->alice_fn.name() + "," + local->bob_fn.name();
  }
  return "general";
}

BoxKind parse_box_kind(std::string_view text) {
  if (text == "pr") return PrBox{};
  if (text == "ot") return OtBox{};
  if (text == "uniform") {
    JointConditional t(2, 2);
    for (int ax = 0; ax < 2; ++ax)
      for (int by = 0; by < 2; ++by)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) t.at(ax, by, a, b) = Rat(1, 4);
    return GeneralBox{std::move(t)};
  }
  constexpr std::string_view prefix = "local:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view rest = text.substr(prefix.size());
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ConfigError("local box wants two function names, e.g. local:id,not");
    }
    return LocalDeterministicBox{UnaryBitFn::named(rest.substr(0, comma)),
                                 UnaryBitFn::named(rest.substr(comma + 1))};
  }
  throw ConfigError("unknown box kind: " + std::string(text));
}

std::pair<Bit, Bit> pr_response(Bit x, Bit y, Bit shared) {
  return {shared, shared ^ (x & y)};
}

Bit ot_response(Bit x0, Bit x1, Bit choice) {
  return x0 ^ (choice & (x0 ^ x1));
}

JointConditional as_conditional(const BoxKind& kind) {
  if (std::holds_alternative<PrBox>(kind)) {
    JointConditional t(2, 2);
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            if ((a ^ b) == (x & y)) t.at(x, y, a, b) = Rat(1, 2);
          }
        }
      }
    }
    return t;
  }
  if (std::holds_alternative<OtBox>(kind)) {
    JointConditional t(4, 2);
    for (int x0 = 0; x0 < 2; ++x0) {
      for (int x1 = 0; x1 < 2; ++x1) {
        for (int c = 0; c < 2; ++c) {
          Bit out = ot_response(Bit(x0), Bit(x1), Bit(c));
          t.at(ot_input_index(Bit(x0), Bit(x1)), c, 0, out.value()) = Rat(1);
        }
      }
    }
    return t;
  }
  if (const auto* local = std::get_if<LocalDeterministicBox>(&kind)) {
    JointConditional t(2, 2);
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        t.at(x, y, local->alice_fn(Bit(x)).value(), local->bob_fn(Bit(y)).value()) = Rat(1);
      }
    }
    return t;
  }
  const auto& general = std::get<GeneralBox>(kind);
  general.table.validate();
  return general.table;
}

NoSignallingReport check_no_signalling(const JointConditional& d) {
  d.validate();
  NoSignallingReport report;
  report.alice_to_bob_ok = true;
  report.bob_to_alice_ok = true;
  report.max_marginal_gap = Rat(0);

  // Bob's output marginal may not depend on Alice's input.
  for (int by = 0; by < d.bob_arity(); ++by) {
    for (int b = 0; b < 2; ++b) {
      Rat lo = d.bob_output_marginal(0, by, b);
      Rat hi = lo;
      for (int ax = 1; ax < d.alice_arity(); ++ax) {
        Rat m = d.bob_output_marginal(ax, by, b);
        if (m < lo) lo = m;
        if (m > hi) hi = m;
      }
      Rat gap = hi - lo;
      if (gap > Rat(0)) report.alice_to_bob_ok = false;
      if (gap > report.max_marginal_gap) report.max_marginal_gap = gap;
    }
  }
  // And symmetrically for Alice's marginal against Bob's input.
  for (int ax = 0; ax < d.alice_arity(); ++ax) {
    for (int a = 0; a < 2; ++a) {
      Rat lo = d.alice_output_marginal(ax, 0, a);
      Rat hi = lo;
      for (int by = 1; by < d.bob_arity(); ++by) {
        Rat m = d.alice_output_marginal(ax, by, a);
        if (m < lo) lo = m;
        if (m > hi) hi = m;
      }
      Rat gap = hi - lo;
      if (gap > Rat(0)) report.bob_to_alice_ok = false;
      if (gap > report.max_marginal_gap) report.max_marginal_gap = gap;
    }
  }
  return report;
}

Rat chsh_win_probability(const JointConditional& d) {
  if (d.alice_arity() != 2 || d.bob_arity() != 2) {
    throw ValidationError("CHSH is defined for binary-input boxes only");
  }
  d.validate();
  Rat sum(0);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if ((a ^ b) == (x & y)) sum += d.at(x, y, a, b);
        }
      }
    }
  }
  return sum * Rat(1, 4);
}

}  // namespace boxcommit
