// Command-line front end: inspect box models, evaluate the commitment
// protocols exactly or by sampling, replay the delayed-input attack, and run
// the substitution demo.
//
// Exit codes: 0 every evaluated property holds, 1 a property is violated,
// 2 usage error, 3 a guard limit refused the computation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "boxcommit/report.hpp"

namespace {

using namespace boxcommit;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct OutputOptions {
  std::string format = "table";
  std::string file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--output", out.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--output-file", out.file, "Also write the report to a file");
}

void emit(const OutputOptions& out, const nlohmann::ordered_json& json, const std::string& table) {
  std::string text = out.format == "json" ? json.dump(2) + "\n" : table;
  std::cout << text;
  if (!out.file.empty()) {
    std::ofstream f(out.file);
    if (!f) throw ConfigError("cannot open output file: " + out.file);
    f << text;
  }
}

struct RunOptions {
  std::string protocol = "ot-commit";
  int n_epsilon = 1;
  std::string adversary = "honest";
  std::string mode = "exact";
  std::uint64_t samples = 100000;
  std::optional<std::uint64_t> seed;
  OutputOptions out;
};

void add_run_flags(CLI::App* cmd, RunOptions& opt, bool with_adversary) {
  cmd->add_option("--protocol", opt.protocol, "Protocol to evaluate")
      ->check(CLI::IsMember({"ot-commit", "pr-commit", "ot-sim-pr-commit"}));
  cmd->add_option("--n-epsilon", opt.n_epsilon, "Binding security parameter (boxes = 2n-1)")
      ->check(CLI::PositiveNumber);
  if (with_adversary) {
    cmd->add_option("--adversary", opt.adversary, "Alice to evaluate binding against")
        ->check(CLI::IsMember({"honest", "delayed", "search"}));
  }
  cmd->add_option("--mode", opt.mode, "Exact enumeration or reproducible sampling")
      ->check(CLI::IsMember({"exact", "monte-carlo"}));
  cmd->add_option("--samples", opt.samples, "Sample count (monte-carlo mode)");
  cmd->add_option("--seed", opt.seed, "Tape stream seed (monte-carlo mode)");
  add_output_flags(cmd, opt.out);
}

int run_command(const RunOptions& opt) {
  ProtocolSpec spec = build_protocol(opt.protocol, opt.n_epsilon);
  Adversary adversary = parse_adversary(opt.adversary);

  SecurityReport security;
  if (opt.mode == "monte-carlo") {
    if (opt.samples < 1) throw ConfigError("monte-carlo mode needs --samples >= 1");
    if (!opt.seed) throw ConfigError("monte-carlo mode needs an explicit --seed");
    security = sample_security(spec, adversary, opt.samples, *opt.seed);
  } else {
    security = evaluate_security(spec, adversary);
  }

  RunReport report = make_run_report(spec, adversary, security);
  emit(opt.out, to_json(report), to_table(report));
  return report.all_properties_hold() ? kExitOk : kExitViolated;
}

int box_verify_command(const std::string& kind_text, const OutputOptions& out) {
  BoxKind kind = parse_box_kind(kind_text);
  JointConditional table = as_conditional(kind);
  NoSignallingReport report = check_no_signalling(table);
  std::string chsh = table.alice_arity() == 2 && table.bob_arity() == 2
                         ? to_string(chsh_win_probability(table))
                         : "n/a";
  emit(out, to_json(report, kind_text, chsh), to_table(report, kind_text, chsh));
  return report.ok() ? kExitOk : kExitViolated;
}

int box_chsh_command(const std::string& kind_text, const OutputOptions& out) {
  JointConditional table = as_conditional(parse_box_kind(kind_text));
  Rat win = chsh_win_probability(table);  // rejects the 4-input ot table
  nlohmann::ordered_json json{{"kind", kind_text}, {"chsh_win_probability", to_string(win)}};
  emit(out, json, "chsh win: " + to_string(win) + "\n");
  return kExitOk;
}

int compose_demo_command(int n_epsilon, const OutputOptions& out) {
  ComposeReport report = make_compose_report(n_epsilon, composability_demo(n_epsilon));
  emit(out, to_json(report), to_table(report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-box commitment laboratory"};
  app.require_subcommand(1);

  // box verify / box chsh
  auto* box = app.add_subcommand("box", "Inspect a box model's static table");
  box->require_subcommand(1);
  std::string box_kind;
  OutputOptions box_out;
  auto* verify = box->add_subcommand("verify", "No-signalling check plus CHSH value");
  verify->add_option("kind", box_kind, "pr | ot | uniform | local:<fa>,<fb>")->required();
  add_output_flags(verify, box_out);
  auto* chsh = box->add_subcommand("chsh", "CHSH win probability of the static table");
  chsh->add_option("kind", box_kind, "pr | uniform | local:<fa>,<fb>")->required();
  add_output_flags(chsh, box_out);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Evaluate correctness, privacy and binding");
  add_run_flags(run, run_opt, true);

  RunOptions attack_opt;
  attack_opt.protocol = "pr-commit";
  attack_opt.adversary = "delayed";
  auto* attack = app.add_subcommand("attack", "Shorthand for run --adversary delayed");
  add_run_flags(attack, attack_opt, false);

  int demo_n_epsilon = 1;
  OutputOptions demo_out;
  auto* demo = app.add_subcommand("compose-demo", "Box substitution changes the verdict");
  demo->add_option("--n-epsilon", demo_n_epsilon, "Binding security parameter")
      ->check(CLI::PositiveNumber);
  add_output_flags(demo, demo_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return box_verify_command(box_kind, box_out);
    if (chsh->parsed()) return box_chsh_command(box_kind, box_out);
    if (run->parsed()) return run_command(run_opt);
    if (attack->parsed()) return run_command(attack_opt);
    if (demo->parsed()) return compose_demo_command(demo_n_epsilon, demo_out);
  } catch (const GuardLimitError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
