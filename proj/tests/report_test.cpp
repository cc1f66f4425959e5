#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxcommit/report.hpp"

using namespace boxcommit;

namespace {

RunReport sample_report() {
  ProtocolSpec spec = build_protocol("ot-commit", 1);
  return make_run_report(spec, Adversary::Search, evaluate_security(spec, Adversary::Search));
}

}  // namespace

TEST_CASE("run report json carries exact rationals in a fixed key order") {
  nlohmann::ordered_json json = to_json(sample_report());
  CHECK(json["protocol"] == "ot-commit");
  CHECK(json["n_epsilon"] == 1);
  CHECK(json["boxes"] == 1);
  CHECK(json["adversary"] == "search");
  CHECK(json["correctness"] == "1/1");
  CHECK(json["privacy_distance"] == "0/1");
  CHECK(json["binding"]["threshold"] == "1/2");
  CHECK(json["binding"]["violation"] == "1/2");
  CHECK(json["binding"]["secure"] == true);
  REQUIRE(json["binding"]["leaves"].size() == 1);
  CHECK(json["binding"]["leaves"][0]["p_accept_0"] == "1/1");

  std::vector<std::string> keys;
  for (auto it = json.begin(); it != json.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"protocol", "n_epsilon", "boxes", "adversary",
                                         "correctness", "privacy_distance", "binding"});
}

TEST_CASE("serialized report parses back to identical bytes") {
  std::string text = to_json(sample_report()).dump(2);
  auto reparsed = nlohmann::ordered_json::parse(text);
  CHECK(reparsed.dump(2) == text);
}

TEST_CASE("table output is capped at sixteen leaves") {
  RunReport report = sample_report();
  report.security.binding.leaves.assign(20, BindingLeaf{"leaf", Rat(1, 20), Rat(1), Rat(1, 2)});
  std::string table = to_table(report);
  CHECK(table.find("... 4 more leaves") != std::string::npos);
}

TEST_CASE("all_properties_hold tracks the three requirements") {
  RunReport report = sample_report();
  CHECK(report.all_properties_hold());
  report.security.binding.violation = Rat(1);
  CHECK_FALSE(report.all_properties_hold());
}

TEST_CASE("compose report nests two run reports") {
  ComposeReport report = make_compose_report(1, composability_demo(1));
  nlohmann::ordered_json json = to_json(report);
  CHECK(json["ot_commit"]["binding"]["secure"] == true);
  CHECK(json["ot_sim_pr_commit"]["binding"]["secure"] == false);
  CHECK(json["sim_matches_pr_commit"] == true);
  std::string text = json.dump(2);
  CHECK(nlohmann::ordered_json::parse(text).dump(2) == text);
}
