#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace boxcommit {

// A single protocol bit. XOR is addition mod 2, AND doubles as multiplication.
class Bit {
 public:
  constexpr Bit() = default;
  constexpr explicit Bit(int v) : v_(static_cast<std::uint8_t>(v & 1)) {}

  constexpr int value() const { return v_; }
  constexpr Bit flipped() const { return Bit(v_ ^ 1); }

  friend constexpr Bit operator^(Bit lhs, Bit rhs) { return Bit(lhs.v_ ^ rhs.v_); }
  friend constexpr Bit operator&(Bit lhs, Bit rhs) { return Bit(lhs.v_ & rhs.v_); }
  constexpr Bit& operator^=(Bit rhs) {
    v_ ^= rhs.v_;
    return *this;
  }

  friend constexpr auto operator<=>(Bit, Bit) = default;

 private:
  std::uint8_t v_ = 0;
};

using Bits = std::vector<Bit>;

inline std::string to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (Bit b : bits) out.push_back(static_cast<char>('0' + b.value()));
  return out;
}

}  // namespace boxcommit
