#pragma once

#include <stdexcept>
#include <string>

namespace boxcommit {

// Input data breaks a declared invariant (malformed table, bad parameter).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A strategy emitted an action the schedule does not permit at its step.
struct ProtocolViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown label or malformed request.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact enumeration or strategy search refused: it would exceed a guard limit.
struct GuardLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strategy applied to a protocol it does not target.
struct InapplicableStrategy : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace boxcommit
