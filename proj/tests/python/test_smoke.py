"""Smoke tests for the python module against the exact core results."""

from fractions import Fraction

import pytest

import boxcommit as bc


def test_pr_law_holds_on_every_tape():
    for x in (0, 1):
        for y in (0, 1):
            for shared in (0, 1):
                a, b = bc.pr_response(x, y, shared)
                assert a ^ b == x & y
                assert a == shared


def test_ot_response_selects_by_choice():
    for x0 in (0, 1):
        for x1 in (0, 1):
            assert bc.ot_response(x0, x1, 0) == x0
            assert bc.ot_response(x0, x1, 1) == x1


def test_simulations_match_the_primitive_boxes():
    for x0 in (0, 1):
        for x1 in (0, 1):
            for c in (0, 1):
                for shared in (0, 1):
                    assert bc.sim_ot_from_pr(x0, x1, c, shared) == bc.ot_response(x0, x1, c)
    for x in (0, 1):
        for y in (0, 1):
            for coin in (0, 1):
                a, b = bc.sim_pr_from_ot(x, y, coin)
                assert a ^ b == x & y


def test_chsh_values_are_exact_fractions():
    assert bc.chsh_win_probability("pr") == Fraction(1)
    assert bc.chsh_win_probability("uniform") == Fraction(1, 2)
    assert bc.chsh_win_probability("local:zero,zero") == Fraction(3, 4)


def test_no_signalling_verdicts():
    assert bc.check_no_signalling("pr")["no_signalling"] is True
    report = bc.check_no_signalling("ot")
    assert report["alice_to_bob_ok"] is False
    assert report["bob_to_alice_ok"] is True
    assert report["max_marginal_gap"] == Fraction(1)


def test_conditional_table_shape():
    table = bc.conditional_table("pr")
    assert table[(1, 1)][(0, 1)] == Fraction(1, 2)
    assert table[(1, 1)][(0, 0)] == Fraction(0)


def test_exact_security_metrics():
    assert bc.eval_correctness("pr-commit", 1) == Fraction(1)
    assert bc.eval_privacy("ot-commit", 1) == Fraction(0)
    assert bc.binding_violation("ot-commit", 1, "search") == Fraction(1, 2)
    assert bc.binding_violation("ot-commit", 2, "search") == Fraction(1, 4)
    assert bc.binding_violation("pr-commit", 1, "delayed") == Fraction(1)
    assert bc.binding_threshold(2) == Fraction(1, 4)


def test_security_report_schema():
    report = bc.security_report("pr-commit", 1, "delayed")
    assert report["protocol"] == "pr-commit"
    assert report["correctness"] == "1/1"
    assert report["privacy_distance"] == "0/1"
    assert report["binding"]["violation"] == "1/1"
    assert report["binding"]["secure"] is False


def test_compose_demo_pairs_the_verdicts():
    demo = bc.compose_demo(1)
    assert demo["ot_commit"]["binding"]["violation"] == "1/2"
    assert demo["ot_commit"]["binding"]["secure"] is True
    assert demo["ot_sim_pr_commit"]["binding"]["violation"] == "1/1"
    assert demo["ot_sim_pr_commit"]["binding"]["secure"] is False
    assert demo["sim_matches_pr_commit"] is True


def test_sampled_report_is_reproducible():
    first = bc.sampled_report("pr-commit", 1, "delayed", 300, 5)
    second = bc.sampled_report("pr-commit", 1, "delayed", 300, 5)
    assert first == second
    assert first["binding"]["violation"] == "1/1"


def test_guard_refusals_surface_as_exceptions():
    with pytest.raises(bc.GuardLimitError):
        bc.binding_violation("pr-commit", 2, "search")
    with pytest.raises(bc.InapplicableStrategyError):
        bc.binding_violation("ot-commit", 1, "delayed")
    with pytest.raises(bc.ConfigError):
        bc.security_report("coin-flip", 1, "honest")
