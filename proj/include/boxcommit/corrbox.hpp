#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "boxcommit/bits.hpp"
#include "boxcommit/errors.hpp"
#include "boxcommit/rational.hpp"

namespace boxcommit {

// Unary bit function given by its truth table. There are exactly four:
// zero, one, id, not.
class UnaryBitFn {
 public:
  constexpr UnaryBitFn() = default;
  constexpr UnaryBitFn(Bit at_zero, Bit at_one) : at_zero_(at_zero), at_one_(at_one) {}

  constexpr Bit operator()(Bit x) const { return x.value() ? at_one_ : at_zero_; }

  static const std::array<UnaryBitFn, 4>& all();
  // Accepts "zero", "one", "id", "not"; throws ConfigError otherwise.
  static UnaryBitFn named(std::string_view name);
  std::string name() const;

  friend bool operator==(const UnaryBitFn&, const UnaryBitFn&) = default;

 private:
  Bit at_zero_{};
  Bit at_one_{};
};

// Exact conditional distribution P(a,b | alice_in, bob_in) over binary
// outputs. Inputs are binary except for the static OT table, where Alice's
// input ranges over the four (x0,x1) pairs (index x0*2 + x1).
class JointConditional {
 public:
  JointConditional(int alice_arity, int bob_arity);

  int alice_arity() const { return alice_arity_; }
  int bob_arity() const { return bob_arity_; }

  const Rat& at(int alice_in, int bob_in, int out_a, int out_b) const;
  Rat& at(int alice_in, int bob_in, int out_a, int out_b);

  Rat alice_output_marginal(int alice_in, int bob_in, int out_a) const;  // sum over b
  Rat bob_output_marginal(int alice_in, int bob_in, int out_b) const;    // sum over a

  // Every (alice_in, bob_in) row must be a distribution: entries >= 0,
  // summing to exactly 1. Throws ValidationError.
  void validate() const;

  friend bool operator==(const JointConditional&, const JointConditional&) = default;

 private:
  int cell_index(int alice_in, int bob_in, int out_a, int out_b) const;

  int alice_arity_ = 2;
  int bob_arity_ = 2;
  std::vector<Rat> cells_;
};

struct PrBox {
  friend bool operator==(const PrBox&, const PrBox&) = default;
};
struct OtBox {
  friend bool operator==(const OtBox&, const OtBox&) = default;
};
struct LocalDeterministicBox {
  UnaryBitFn alice_fn;
  UnaryBitFn bob_fn;
  friend bool operator==(const LocalDeterministicBox&, const LocalDeterministicBox&) = default;
};
struct GeneralBox {
  JointConditional table;
  friend bool operator==(const GeneralBox&, const GeneralBox&) = default;
};

using BoxKind = std::variant<PrBox, OtBox, LocalDeterministicBox, GeneralBox>;

std::string kind_name(const BoxKind& kind);
// Accepts "pr", "ot", "uniform", "local:<fa>,<fb>"; throws ConfigError.
BoxKind parse_box_kind(std::string_view text);

// a = shared, b = shared ^ (x & y); hence a ^ b = x & y on every tape.
std::pair<Bit, Bit> pr_response(Bit x, Bit y, Bit shared);

// x0 ^ choice & (x0 ^ x1): x0 when choice = 0, x1 when choice = 1.
Bit ot_response(Bit x0, Bit x1, Bit choice);

// Row index of the pair (x0, x1) in the static OT table.
constexpr int ot_input_index(Bit x0, Bit x1) { return x0.value() * 2 + x1.value(); }

// Static table of a box kind, averaged over a uniform tape. The OT table
// fixes Alice's output to 0 (she never receives one).
JointConditional as_conditional(const BoxKind& kind);

struct NoSignallingReport {
  bool alice_to_bob_ok = false;  // Bob's output marginal independent of Alice's input
  bool bob_to_alice_ok = false;
  Rat max_marginal_gap{0};
  bool ok() const { return alice_to_bob_ok && bob_to_alice_ok; }
};

NoSignallingReport check_no_signalling(const JointConditional& d);

// (1/4) * sum over (x,y) of P(a ^ b = x & y | x,y). Binary inputs only.
Rat chsh_win_probability(const JointConditional& d);

}  // namespace boxcommit
