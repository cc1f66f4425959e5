#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boxcommit/report.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// boxcommit rationals cross the boundary as exact fractions.Fraction values.
template <>
struct type_caster<boxcommit::Rat> {
  PYBIND11_TYPE_CASTER(boxcommit::Rat, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    object fraction_type = module_::import("fractions").attr("Fraction");
    if (!isinstance(src, fraction_type) && !PyLong_Check(src.ptr())) return false;
    object frac = fraction_type(reinterpret_borrow<object>(src));
    value = boxcommit::Rat(frac.attr("numerator").cast<long long>(),
                           frac.attr("denominator").cast<long long>());
    return true;
  }

  static handle cast(const boxcommit::Rat& src, return_value_policy, handle) {
    object fraction_type = module_::import("fractions").attr("Fraction");
    return fraction_type(src.numerator(), src.denominator()).release();
  }
};

template <>
struct type_caster<boxcommit::Bit> {
  PYBIND11_TYPE_CASTER(boxcommit::Bit, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    long v = PyLong_AsLong(src.ptr());
    if (v != 0 && v != 1) return false;
    value = boxcommit::Bit(static_cast<int>(v));
    return true;
  }

  static handle cast(boxcommit::Bit src, return_value_policy, handle) {
    return PyLong_FromLong(src.value());
  }
};

}  // namespace pybind11::detail

namespace {

using namespace boxcommit;

py::dict no_signalling_dict(const std::string& kind) {
  JointConditional table = as_conditional(parse_box_kind(kind));
  NoSignallingReport report = check_no_signalling(table);
  py::dict out;
  out["alice_to_bob_ok"] = report.alice_to_bob_ok;
  out["bob_to_alice_ok"] = report.bob_to_alice_ok;
  out["max_marginal_gap"] = report.max_marginal_gap;
  out["no_signalling"] = report.ok();
  return out;
}

py::dict conditional_dict(const std::string& kind) {
  JointConditional table = as_conditional(parse_box_kind(kind));
  py::dict out;
  for (int ax = 0; ax < table.alice_arity(); ++ax) {
    for (int by = 0; by < table.bob_arity(); ++by) {
      py::dict cell;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          cell[py::make_tuple(a, b)] = table.at(ax, by, a, b);
        }
      }
      out[py::make_tuple(ax, by)] = std::move(cell);
    }
  }
  return out;
}

std::string security_report_json(const std::string& protocol, int n_epsilon,
                                 const std::string& adversary) {
  ProtocolSpec spec = build_protocol(protocol, n_epsilon);
  Adversary adv = parse_adversary(adversary);
  return to_json(make_run_report(spec, adv, evaluate_security(spec, adv))).dump(2);
}

std::string sampled_report_json(const std::string& protocol, int n_epsilon,
                                const std::string& adversary, std::uint64_t samples,
                                std::uint64_t seed) {
  ProtocolSpec spec = build_protocol(protocol, n_epsilon);
  Adversary adv = parse_adversary(adversary);
  return to_json(make_run_report(spec, adv, sample_security(spec, adv, samples, seed))).dump(2);
}

Rat binding_violation(const std::string& protocol, int n_epsilon, const std::string& adversary) {
  ProtocolSpec spec = build_protocol(protocol, n_epsilon);
  switch (parse_adversary(adversary)) {
    case Adversary::Honest: return eval_binding(spec, honest_alice(spec)).violation;
    case Adversary::Delayed: return eval_binding(spec, delayed_alice(spec)).violation;
    case Adversary::Search: return search_optimal_cheat(spec).violation;
  }
  throw ConfigError("unknown adversary");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact two-party laboratory for correlation-box commitment protocols";

  py::register_exception<GuardLimitError>(m, "GuardLimitError", PyExc_RuntimeError);
  py::register_exception<InapplicableStrategy>(m, "InapplicableStrategyError",
                                               PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("pr_response", &pr_response, py::arg("x"), py::arg("y"), py::arg("shared"),
        "Both outputs of a pr box on one tape bit: (shared, shared ^ x & y)");
  m.def("ot_response", &ot_response, py::arg("x0"), py::arg("x1"), py::arg("choice"),
        "The bit an ot box hands Bob: x0 ^ choice & (x0 ^ x1)");
  m.def("sim_pr_from_ot", &sim_pr_from_ot, py::arg("x"), py::arg("y"), py::arg("alice_coin"),
        "Outputs of the pr box simulated over an ot box");
  m.def("sim_ot_from_pr", &sim_ot_from_pr, py::arg("x0"), py::arg("x1"), py::arg("choice"),
        py::arg("shared"), "Bob's reconstructed bit in the ot-over-pr simulation");

  m.def(
      "chsh_win_probability",
      [](const std::string& kind) {
        return chsh_win_probability(as_conditional(parse_box_kind(kind)));
      },
      py::arg("kind"));
  m.def("check_no_signalling", &no_signalling_dict, py::arg("kind"));
  m.def("conditional_table", &conditional_dict, py::arg("kind"),
        "P(a,b | inputs) as nested dicts of exact fractions");

  m.def(
      "eval_correctness",
      [](const std::string& protocol, int n) {
        return eval_correctness(build_protocol(protocol, n));
      },
      py::arg("protocol"), py::arg("n_epsilon") = 1);
  m.def(
      "eval_privacy",
      [](const std::string& protocol, int n) { return eval_privacy(build_protocol(protocol, n)); },
      py::arg("protocol"), py::arg("n_epsilon") = 1);
  m.def("binding_violation", &binding_violation, py::arg("protocol"), py::arg("n_epsilon") = 1,
        py::arg("adversary") = "search");
  m.def(
      "binding_threshold", [](int n) { return CompositionConfig(n).binding_threshold(); },
      py::arg("n_epsilon") = 1);

  m.def("security_report_json", &security_report_json, py::arg("protocol"),
        py::arg("n_epsilon") = 1, py::arg("adversary") = "honest");
  m.def("sampled_report_json", &sampled_report_json, py::arg("protocol"), py::arg("n_epsilon"),
        py::arg("adversary"), py::arg("samples"), py::arg("seed"));
  m.def(
      "compose_demo_json",
      [](int n) { return to_json(make_compose_report(n, composability_demo(n))).dump(2); },
      py::arg("n_epsilon") = 1);
}
