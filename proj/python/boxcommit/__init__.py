"""Exact two-party laboratory for correlation-box commitment protocols.

The heavy lifting lives in the compiled extension; this package adds small
JSON-decoding conveniences. All probabilities are exact fractions.
"""

import json as _json

from ._core import (
    ConfigError,
    GuardLimitError,
    InapplicableStrategyError,
    ValidationError,
    binding_threshold,
    binding_violation,
    check_no_signalling,
    chsh_win_probability,
    compose_demo_json,
    conditional_table,
    eval_correctness,
    eval_privacy,
    ot_response,
    pr_response,
    sampled_report_json,
    security_report_json,
    sim_ot_from_pr,
    sim_pr_from_ot,
)

__all__ = [
    "ConfigError",
    "GuardLimitError",
    "InapplicableStrategyError",
    "ValidationError",
    "binding_threshold",
    "binding_violation",
    "check_no_signalling",
    "chsh_win_probability",
    "compose_demo",
    "compose_demo_json",
    "conditional_table",
    "eval_correctness",
    "eval_privacy",
    "ot_response",
    "pr_response",
    "sampled_report",
    "sampled_report_json",
    "security_report",
    "security_report_json",
    "sim_ot_from_pr",
    "sim_pr_from_ot",
]


def security_report(protocol="ot-commit", n_epsilon=1, adversary="honest"):
    """Correctness, privacy and binding as a dict; rationals stay "num/den" strings."""
    return _json.loads(security_report_json(protocol, n_epsilon, adversary))


def sampled_report(protocol, n_epsilon, adversary, samples, seed):
    """Reproducible sampled counterpart of security_report."""
    return _json.loads(sampled_report_json(protocol, n_epsilon, adversary, samples, seed))


def compose_demo(n_epsilon=1):
    """The box-substitution experiment: paired verdicts plus the structural match."""
    return _json.loads(compose_demo_json(n_epsilon))
