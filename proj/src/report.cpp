#include "boxcommit/report.hpp"

#include <sstream>

namespace boxcommit {

namespace {

constexpr std::size_t kLeafTableCap = 16;

nlohmann::ordered_json binding_to_json(const BindingReport& binding) {
  nlohmann::ordered_json leaves = nlohmann::ordered_json::array();
  for (const BindingLeaf& leaf : binding.leaves) {
    leaves.push_back({{"p_accept_0", to_string(leaf.p_accept_0)},
                      {"p_accept_1", to_string(leaf.p_accept_1)}});
  }
  return nlohmann::ordered_json{{"threshold", to_string(binding.threshold)},
                                {"violation", to_string(binding.violation)},
                                {"secure", binding.secure()},
                                {"leaves", std::move(leaves)}};
}

}  // namespace

RunReport make_run_report(const ProtocolSpec& spec, Adversary adversary,
                          const SecurityReport& security) {
  return RunReport{spec.name, spec.cfg.n_epsilon, spec.box_count(), adversary_name(adversary),
                   security};
}

nlohmann::ordered_json to_json(const RunReport& report) {
  return nlohmann::ordered_json{{"protocol", report.protocol},
                                {"n_epsilon", report.n_epsilon},
                                {"boxes", report.boxes},
                                {"adversary", report.adversary},
                                {"correctness", to_string(report.security.correctness)},
                                {"privacy_distance", to_string(report.security.privacy_distance)},
                                {"binding", binding_to_json(report.security.binding)}};
}

std::string to_table(const RunReport& report) {
  std::ostringstream out;
  out << "protocol:          " << report.protocol << " (n_epsilon=" << report.n_epsilon
      << ", boxes=" << report.boxes << ", adversary=" << report.adversary << ")\n";
  out << "correctness:       " << to_string(report.security.correctness) << "\n";
  out << "privacy distance:  " << to_string(report.security.privacy_distance) << "\n";
  out << "binding threshold: " << to_string(report.security.binding.threshold) << "\n";
  out << "binding violation: " << to_string(report.security.binding.violation) << "\n";
  out << "secure binding:    " << (report.security.binding.secure() ? "yes" : "no") << "\n";
  out << "leaves (p_accept_0, p_accept_1):\n";
  std::size_t shown = 0;
  for (const BindingLeaf& leaf : report.security.binding.leaves) {
    if (shown == kLeafTableCap) break;
    out << "  (" << to_string(leaf.p_accept_0) << ", " << to_string(leaf.p_accept_1)
        << ")  weight " << to_string(leaf.weight) << "\n";
    ++shown;
  }
  if (report.security.binding.leaves.size() > kLeafTableCap) {
    out << "  ... " << (report.security.binding.leaves.size() - kLeafTableCap)
        << " more leaves\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const NoSignallingReport& report, const std::string& kind,
                               const std::string& chsh) {
  return nlohmann::ordered_json{{"kind", kind},
                                {"alice_to_bob_ok", report.alice_to_bob_ok},
                                {"bob_to_alice_ok", report.bob_to_alice_ok},
                                {"max_marginal_gap", to_string(report.max_marginal_gap)},
                                {"no_signalling", report.ok()},
                                {"chsh_win_probability", chsh}};
}

std::string to_table(const NoSignallingReport& report, const std::string& kind,
                     const std::string& chsh) {
  std::ostringstream out;
  out << "box kind:            " << kind << "\n";
  out << "alice -> bob silent: " << (report.alice_to_bob_ok ? "yes" : "no") << "\n";
  out << "bob -> alice silent: " << (report.bob_to_alice_ok ? "yes" : "no") << "\n";
  out << "max marginal gap:    " << to_string(report.max_marginal_gap) << "\n";
  out << "no-signalling:       " << (report.ok() ? "yes" : "no") << "\n";
  out << "chsh win:            " << chsh << "\n";
  return out.str();
}

ComposeReport make_compose_report(int n_epsilon, const ComposabilityDemo& demo) {
  ComposeReport report;
  report.n_epsilon = n_epsilon;
  report.ot_commit = make_run_report(build_protocol("ot-commit", n_epsilon), Adversary::Search,
                                     demo.ot_commit);
  report.ot_sim_pr_commit = make_run_report(build_protocol("ot-sim-pr-commit", n_epsilon),
                                            Adversary::Delayed, demo.ot_sim_pr_commit);
  report.sim_matches_pr_commit = demo.sim_matches_pr_commit;
  return report;
}

nlohmann::ordered_json to_json(const ComposeReport& report) {
  return nlohmann::ordered_json{{"n_epsilon", report.n_epsilon},
                                {"ot_commit", to_json(report.ot_commit)},
                                {"ot_sim_pr_commit", to_json(report.ot_sim_pr_commit)},
                                {"sim_matches_pr_commit", report.sim_matches_pr_commit}};
}

std::string to_table(const ComposeReport& report) {
  std::ostringstream out;
  out << "substituting the simulated box changes the security verdict\n";
  out << "\n--- ot-commit under its best deterministic cheat ---\n";
  out << to_table(report.ot_commit);
  out << "\n--- the same commitment over simulated boxes, delayed-input cheat ---\n";
  out << to_table(report.ot_sim_pr_commit);
  out << "\nsimulated schedule and honest statistics match pr-commit: "
      << (report.sim_matches_pr_commit ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace boxcommit
