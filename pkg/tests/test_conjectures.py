"""
Tests for the fused q-antisymmetriser and the centrality and ideal checks.
"""

import pytest

import fused
import hecke
from config import get_config
from conjectures import (
    _centrality_labels,
    _ideal_rank_at,
    ConjReport,
    as_classical,
    as_element,
    check_centrality,
    check_ideal_generation,
    expected_ideal_dim,
    gamma,
    gamma_word,
    run_checks,
    sweep,
    sweep_cases,
)
from error_handling import BudgetExceededError, PreconditionError
from logging_config import get_logger
from monitoring import CheckStatus
from permcomb import Blocks, length


@pytest.mark.unit
class TestGamma:
    """The permutation bringing first strands together."""

    @pytest.mark.parametrize(
        "k, n, word",
        [((2, 2, 2), 3, (2, 4, 3)), ((1, 1, 1), 3, ()), ((3, 1, 1), 3, (3, 2, 4, 3))],
    )
    def test_gamma_word(self, k, n, word):
        assert gamma_word(k, n) == word

    def test_gamma_is_reduced(self):
        g, g_inv = gamma((2, 2, 2), 3)
        assert length(g.support()[0]) == 3
        assert hecke.mul(g, g_inv) == hecke.one(6)

    def test_short_composition(self):
        with pytest.raises(PreconditionError):
            gamma_word((2, 2), 3)

    def test_increasing_composition(self):
        with pytest.raises(PreconditionError):
            gamma_word((1, 2), 2)


@pytest.mark.unit
class TestAntisymmetrizer:
    """AS_{k,n}(q) and its classical limit."""

    def test_unfused_case(self):
        expected = fused.from_hecke(hecke.antisymmetrizer_numerator(3), Blocks((1, 1, 1)))
        assert as_element((1, 1, 1), 3) == expected

    @pytest.mark.parametrize("k", [(1, 1), (2, 1), (2, 2), (2, 1, 1), (2, 2, 2)])
    def test_classical_limit(self, k):
        n = len(k)
        classical = fused.specialize(as_classical(k, n), 1)
        assert fused.specialize(as_element(k, n), 1) == classical

    def test_central_in_constant_pair(self):
        assert check_centrality((2, 2), 1) == (CheckStatus.VERIFIED, "symbolic")


@pytest.mark.unit
class TestChecks:
    """Centrality and ideal generation on small cases."""

    @pytest.mark.parametrize(
        "k, N, dim", [((2, 2, 2), 2, 6), ((1, 1, 1), 2, 1), ((2, 1), 1, 1), ((2, 2), 1, 2)]
    )
    def test_expected_ideal_dim(self, k, N, dim):
        assert expected_ideal_dim(k, N) == dim

    def test_unfused_antisymmetrizer(self):
        report = run_checks((1, 1, 1), 2)
        assert report.passed
        assert report.centrality is CheckStatus.VERIFIED
        assert report.ideal_generation is CheckStatus.VERIFIED
        assert report.ideal_dim_computed == 1
        assert report.q_mode == "symbolic"
        assert report.kernel_member is True
        assert report.kernel_method == "tensor"
        assert report.certificate == "exact"

    def test_seminormal_kernel(self):
        report = run_checks((2, 1), 1)
        assert report.passed
        assert report.kernel_method == "seminormal"
        assert report.ideal_dim_computed == report.ideal_dim_expected == 1

    def test_evaluated_centrality(self):
        get_config().budget.max_weight_symbolic = 2
        status, mode = check_centrality((2, 1), 1)
        assert (status, mode) == (CheckStatus.VERIFIED, "evaluated")

    def test_centrality_skipped_over_budget(self):
        get_config().budget.max_weight_evaluated = 2
        assert check_centrality((2, 1), 1) == (CheckStatus.SKIPPED, "skipped")

    def test_ideal_over_budget(self):
        get_config().budget.max_weight_evaluated = 2
        with pytest.raises(BudgetExceededError):
            check_ideal_generation((2, 1), 1)

    def test_evaluated_rank_stops_at_bound(self, q0):
        blocks = Blocks((1, 1, 1))
        unit = fused.unit(blocks)
        assert _ideal_rank_at(blocks, unit, q0) == 6
        assert _ideal_rank_at(blocks, unit, q0, target=4) == 4

    def test_centrality_labels(self):
        assert len(_centrality_labels(Blocks((1, 1, 1, 1)))) == 3
        assert len(_centrality_labels(Blocks((2, 1)))) == fused.dimension(Blocks((2, 1)))

    def test_mismatch_fails(self, mocker):
        mocker.patch("conjectures.expected_ideal_dim", return_value=99)
        report = check_ideal_generation((1, 1), 1)
        assert report.ideal_generation is CheckStatus.FAILED
        assert report.certificate == "lower-bound"
        assert not report.passed

    @pytest.mark.slow
    def test_fused_case_222(self):
        report = run_checks((2, 2, 2), 2)
        assert report.passed
        assert report.ideal_dim_computed == 6


@pytest.mark.unit
class TestSweep:
    """Enumeration of cases and the full sweep."""

    def test_sweep_cases(self):
        assert sweep_cases(3) == [((1, 1), 1), ((2, 1), 1), ((1, 1, 1), 2)]

    def test_sweep_cases_ordering(self):
        cases = sweep_cases(5)
        weights = [sum(k) for k, _ in cases]
        assert weights == sorted(weights)
        assert all(len(k) == N + 1 for k, N in cases)

    def test_sweep(self):
        reports = sweep(3)
        assert [(r.k, r.N) for r in reports] == sweep_cases(3)
        assert all(r.passed for r in reports)

    def test_sweep_logs_each_case_in_context(self, mocker):
        seen = []

        def record(k, N, threads=None):
            seen.append(get_logger().context["case"])
            return ConjReport(k=k, N=N, centrality=CheckStatus.VERIFIED)

        mocker.patch("conjectures.run_checks", side_effect=record)
        sweep(3)
        assert seen == ["[1, 1]/N=1", "[2, 1]/N=1", "[1, 1, 1]/N=2"]
        assert "case" not in get_logger().context

    def test_report_to_dict(self):
        report = ConjReport(k=(2, 1), N=1, centrality=CheckStatus.VERIFIED)
        data = report.to_dict()
        assert data["k"] == [2, 1]
        assert data["centrality"] == "verified"
        assert data["ideal_generation"] == "skipped"
        assert data["certificate"] == "lower-bound"

    @pytest.mark.slow
    def test_sweep_to_weight_seven(self):
        budget = get_config().budget
        budget.max_weight_evaluated = 7
        budget.max_weight_symbolic = 6
        reports = sweep(7)
        assert len(reports) == len(sweep_cases(7))
        failures = [(r.k, r.N) for r in reports if not r.passed]
        assert failures == []
