#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace boxcommit {

// Exact probability arithmetic. Analysis paths never touch floating point;
// floats appear only when summarizing Monte Carlo runs.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

// 2^-k, the natural unit for tape weights and binding thresholds.
inline Rat inverse_pow2(int k) {
  if (k < 0 || k > 62) throw boost::bad_rational();
  return Rat(1, std::int64_t{1} << k);
}

inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

// Canonical rendering, always with an explicit denominator: "1/2", "1/1", "0/1".
inline std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace boxcommit
