import json
import random
from fractions import Fraction as F

import pytest

from catalania.counting import catalan_gen, catalan_sequence
from catalania.exact import binom
from catalania.identities import (
    DEFAULT_CONFIG,
    ConfigError,
    GouldPair,
    IdentityReport,
    SingularGouldParameters,
    closed_form_reduction_check,
    eq2_lhs,
    eq2_lhs_reindexed,
    eq2_rhs,
    eq3_lhs,
    eq3_rhs,
    eq10_lhs,
    expand_interval,
    gould_backward,
    gould_forward,
    load_config,
    random_rational_sequence,
    reports_to_json,
    run_suite,
    verify_eq2,
    verify_eq3,
    verify_eq4,
    verify_eq10,
)
from catalania.involution import signed_sum
from catalania.riordan import _row_sums, catalan_family, catalan_gf


class TestEq2:
    def test_delta_row(self):
        report = verify_eq2(1, 2, 1, 8)
        assert report.ok
        for n in range(9):
            assert eq2_lhs(1, 2, 1, n) == (1 if n == 0 else 0)

    def test_alpha_equals_gamma_collapses(self):
        for alpha, beta in [(1, 2), (F(3, 2), 3), (2, F(1, 2))]:
            report = verify_eq2(alpha, beta, alpha, 6)
            assert report.ok
            for n in range(7):
                assert eq2_rhs(alpha, alpha, n) == (1 if n == 0 else 0)

    def test_hand_evaluated_point(self):
        # 3 - 4 + 2
        assert eq2_lhs(3, 2, 1, 2) == 1 == eq2_rhs(3, 1, 2)

    def test_reindexed_sum_is_identical(self):
        for alpha, beta, gamma in [(3, 2, 1), (F(-1, 2), F(5, 3), 2), (0, 0, -1)]:
            for n in range(7):
                assert eq2_lhs(alpha, beta, gamma, n) == eq2_lhs_reindexed(
                    alpha, beta, gamma, n
                )

    def test_reindexed_verifier(self):
        assert verify_eq4(3, 2, 1, 8).ok
        assert verify_eq4(F(-3, 2), F(1, 3), F(2), 6).ok

    def test_reindexed_verifier_catches_order_bugs(self):
        # a drifting oracle makes the two orderings disagree at n = 1
        calls = iter(range(100))

        def drifting(n, beta, gamma):
            return catalan_gen(n, beta, gamma) + next(calls)

        assert eq2_lhs(1, 2, 1, 1, catalan=drifting) != eq2_lhs_reindexed(
            1, 2, 1, 1, catalan=drifting
        )

    def test_rational_parameters(self):
        assert verify_eq2(F(7, 2), F(5, 3), F(-1, 2), 8).ok

    def test_corrupted_oracle_fails_with_counterexample(self):
        def corrupted(n, beta, gamma):
            return catalan_gen(n, beta, gamma) + (1 if n == 3 else 0)

        report = verify_eq2(1, 2, 1, 6, catalan=corrupted)
        assert not report.ok
        assert report.counterexample is not None
        params = dict(report.counterexample.params)
        assert params["n"] == "3"
        # the counterexample is reproducible
        n = int(params["n"])
        assert eq2_lhs(1, 2, 1, n, catalan=corrupted) != eq2_rhs(1, 1, n)


class TestEq3:
    def test_scalar_specialization_matches_eq2(self):
        for beta in (2, 3):
            for gamma in (1, 2):
                for alpha in (0, 1, 3):
                    vector = verify_eq3((beta,), gamma, alpha, 4)
                    scalar = verify_eq2(alpha, beta, gamma, 4)
                    assert vector.status == scalar.status == "pass"

    def test_point_values(self):
        assert eq3_lhs((2, 3), (1, 1), 1, 1) == 0 == eq3_rhs((1, 1), 1, 1)
        assert eq3_lhs((2, 3), (1, 1), 1, 4) == 6 == eq3_rhs((1, 1), 1, 4)

    def test_rational_alpha_grid(self):
        for alpha in (F(-1, 2), F(1, 2), F(5, 2)):
            assert verify_eq3((2, 3), 1, alpha, 3).ok

    def test_gamma_zero(self):
        assert verify_eq3((2, 3), 0, F(7, 3), 3).ok


class TestGould:
    def test_frozen_roundtrip(self):
        pair = GouldPair(2, F(0), F(1))
        seq = [F(1), F(1), F(2), F(5), F(14)]
        assert gould_backward(gould_forward(seq, pair), pair) == seq

    def test_z_zero_is_identity(self):
        pair = GouldPair(3, F(2), F(0))
        seq = [F(4), F(-1, 3), F(0), F(9)]
        assert gould_forward(seq, pair) == seq
        assert gould_backward(seq, pair) == seq

    def test_singular_parameters_reported(self):
        # -a*n - m = n - 2 vanishes at n = 2
        with pytest.raises(SingularGouldParameters) as err:
            gould_backward([F(1), F(1), F(1), F(1)], GouldPair(-1, F(2), F(1)))
        assert err.value.n == 2

    def test_short_sequence_avoids_singularity(self):
        pair = GouldPair(-1, F(2), F(1))
        assert gould_backward([F(1), F(1)], pair)  # n stops before 2

    def test_eq2_induced_pair(self):
        # forward of the counting sequence gives the signed binomial row
        for alpha, beta, gamma in [(2, 2, 1), (3, 3, 2), (0, 2, 1)]:
            pair = GouldPair(beta - 1, F(alpha), F(-1))
            got = gould_forward(catalan_sequence(beta, gamma, 8), pair)
            want = [(-1) ** n * binom(alpha - gamma, n) for n in range(9)]
            assert got == want
            # and backward recovers the counting sequence
            assert gould_backward(want, pair) == catalan_sequence(beta, gamma, 8)

    def test_seeded_random_roundtrips(self):
        rng = random.Random(13)
        pairs = [
            GouldPair(2, F(0), F(1)),
            GouldPair(1, F(1, 2), F(-1)),
            GouldPair(0, F(1), F(2)),
            GouldPair(-1, F(1, 2), F(2)),
        ]
        for _ in range(20):
            seq = random_rational_sequence(rng, 10)
            for pair in pairs:
                assert gould_backward(gould_forward(seq, pair), pair) == seq
                assert gould_forward(gould_backward(seq, pair), pair) == seq


class TestEq10:
    def test_two_term_point(self):
        assert eq10_lhs(0, 2, 1, 1) == 1 == catalan_gen(1, 2, 1)

    def test_alpha_zero_grid(self):
        for beta in (0, 1, 2, 3):
            for gamma in (0, 1, 2):
                report = verify_eq10(0, beta, gamma, 10)
                assert report.ok
                # (1-beta)n - 0 = 0 only at beta = 1, every n... no: (1-1)n = 0
                if beta == 1:
                    assert len(report.skipped) == 10
                else:
                    assert not report.skipped

    def test_alpha_equals_gamma_grid(self):
        for g in (1, 2):
            assert verify_eq10(g, 2, g, 8).ok

    def test_singular_rows_are_listed_not_failed(self):
        report = verify_eq10(-2, 3, 1, 5)
        assert report.ok
        assert report.skipped == ("n=1: (1-beta)*n - alpha = 0",)

    def test_rational_point(self):
        assert verify_eq10(F(1, 2), F(3, 2), F(-1, 2), 8).ok


class TestClosedFormReduction:
    def test_binary_point(self):
        assert closed_form_reduction_check(2, 1, 10).ok
        assert catalan_gen(3, 2, 1) == 5

    def test_unary_degenerate(self):
        assert closed_form_reduction_check(1, 3, 8).ok

    def test_negative_and_rational_parameters(self):
        assert closed_form_reduction_check(F(-1), F(-2), 6).ok
        assert closed_form_reduction_check(F(5, 2), F(1, 3), 6).ok


class TestCrossMethodAgreement:
    def test_three_routes_coincide(self):
        for beta in (2, 3):
            for gamma in (1, 2):
                for alpha in (gamma, gamma + 1, gamma + 2):
                    rows = _row_sums(
                        catalan_family(alpha, beta, 5), catalan_gf(beta, gamma, 5), 4
                    )
                    for n in range(5):
                        direct = eq2_lhs(alpha, beta, gamma, n)
                        census = signed_sum(beta, n, gamma, alpha)
                        assert direct == census == rows[n]


class TestSuite:
    def test_default_suite_passes(self):
        reports = run_suite()
        assert [r.identity_id for r in reports] == [
            "Eq1", "Eq2", "Eq3", "Eq4", "Eq7", "Eq8", "Eq9_roundtrip", "Eq10",
            "ClosedForm",
        ]
        assert all(r.ok for r in reports)

    def test_report_json_is_deterministic(self):
        first = reports_to_json(run_suite())
        second = reports_to_json(run_suite())
        assert first == second
        parsed = json.loads(first)
        assert {entry["status"] for entry in parsed} == {"pass"}

    def test_empty_config_gives_empty_report(self):
        assert run_suite({}) == []

    def test_corrupt_catalan_hook(self):
        reports = run_suite({"eq1": {"n_max": 5}, "corrupt_catalan": True})
        assert len(reports) == 1
        assert not reports[0].ok
        assert reports[0].counterexample is not None

    def test_unknown_keys_rejected(self):
        with pytest.raises(ConfigError):
            run_suite({"eq99": {}})

    def test_malformed_section_rejected(self):
        with pytest.raises(ConfigError):
            run_suite({"eq2": {"alpha": {"min": "0"}, "beta": {}, "gamma": {}, "n_max": 2}})

    def test_default_config_is_json_serializable(self):
        assert load_config(json.dumps(DEFAULT_CONFIG)) == DEFAULT_CONFIG

    def test_load_config_rejects_bad_json(self):
        with pytest.raises(ConfigError):
            load_config("{not json")
        with pytest.raises(ConfigError):
            load_config("[1, 2]")


class TestGridExpansion:
    def test_integer_interval(self):
        assert expand_interval({"min": "-2", "max": "1", "step": "1"}) == [-2, -1, 0, 1]

    def test_rational_step(self):
        got = expand_interval({"min": "0", "max": "2", "step": "1/2"})
        assert got == [0, F(1, 2), 1, F(3, 2), 2]

    def test_step_not_landing_on_max(self):
        assert expand_interval({"min": "0", "max": "1", "step": "2/3"}) == [0, F(2, 3)]

    @pytest.mark.parametrize(
        "spec",
        [
            {"min": "0", "max": "1"},
            {"min": "1", "max": "0", "step": "1"},
            {"min": "0", "max": "1", "step": "0"},
            {"min": "0", "max": "1", "step": "-1"},
            {"min": "0.5", "max": "1", "step": "1"},
        ],
    )
    def test_bad_intervals(self, spec):
        with pytest.raises(ConfigError):
            expand_interval(spec)


class TestReportShape:
    def test_fail_requires_counterexample(self):
        with pytest.raises(ValueError):
            IdentityReport("Eq2", "grid", "fail")

    def test_unknown_identity_rejected(self):
        with pytest.raises(ValueError):
            IdentityReport("Eq5", "grid", "pass")
