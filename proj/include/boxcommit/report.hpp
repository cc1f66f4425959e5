#pragma once

#include <string>

#include <json.hpp>

#include "boxcommit/security.hpp"

namespace boxcommit {

// The machine-readable run report. Key order is fixed; rationals render as
// exact "num/den" strings, never floats, so re-serializing a parsed report
// reproduces it byte for byte.
struct RunReport {
  std::string protocol;
  int n_epsilon = 1;
  int boxes = 1;
  std::string adversary;
  SecurityReport security;

  // Each evaluated requirement holds: Bob learns the committed bit, learns
  // nothing early, and binding stays at or under the threshold.
  bool all_properties_hold() const {
    return security.correctness == Rat(1) && security.privacy_distance == Rat(0) &&
           security.binding.secure();
  }
};

RunReport make_run_report(const ProtocolSpec& spec, Adversary adversary,
                          const SecurityReport& security);

nlohmann::ordered_json to_json(const RunReport& report);
std::string to_table(const RunReport& report);

nlohmann::ordered_json to_json(const NoSignallingReport& report, const std::string& kind,
                               const std::string& chsh);
std::string to_table(const NoSignallingReport& report, const std::string& kind,
                     const std::string& chsh);

struct ComposeReport {
  int n_epsilon = 1;
  RunReport ot_commit;
  RunReport ot_sim_pr_commit;
  bool sim_matches_pr_commit = false;
};

ComposeReport make_compose_report(int n_epsilon, const ComposabilityDemo& demo);

nlohmann::ordered_json to_json(const ComposeReport& report);
std::string to_table(const ComposeReport& report);

}  // namespace boxcommit
