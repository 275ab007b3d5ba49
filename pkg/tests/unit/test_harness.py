"""
Unit tests for the seeded random-instance harness.
"""
import random

import pytest

from qclass.core.config import LimitsConfig, SelftestConfig
from qclass.core.models import VerdictReport
from qclass.digraph.graph import Digraph
from qclass.verify.harness import (
    SUITES,
    InstanceResult,
    explore_non_locally_special,
    random_digraph,
    random_double_poset,
    random_locally_special,
    random_subgroup,
    random_symmetric_double_poset,
    run_instance,
    run_selftest,
)


@pytest.fixture
def small() -> SelftestConfig:
    return SelftestConfig(seed=7, count=3, max_size=4, workers=2)


class TestGenerators:
    """Tests for the random instance generators."""

    @pytest.mark.parametrize("seed", range(10))
    def test_locally_special(self, seed: int) -> None:
        rng = random.Random(seed)
        assert random_locally_special(rng, 5, 0.5).is_locally_special()
        assert random_symmetric_double_poset(rng, 4, 0.5).is_locally_special()

    def test_double_poset_labels(self) -> None:
        poset = random_double_poset(random.Random(1), 4, 0.5)
        assert poset.elements == ("a", "b", "c", "d")

    def test_digraph(self) -> None:
        graph = random_digraph(random.Random(3), 4, 1.0)
        assert isinstance(graph, Digraph)
        assert len(graph) == 4

    def test_same_seed_same_instance(self) -> None:
        first = random_locally_special(random.Random(11), 5, 0.4)
        second = random_locally_special(random.Random(11), 5, 0.4)
        assert first == second

    @pytest.mark.parametrize("seed", range(5))
    def test_subgroup(self, seed: int) -> None:
        graph = Digraph("abcd")
        group = graph.automorphisms()
        sub = random_subgroup(random.Random(seed), group)
        assert sub.is_subgroup_of(group)


class TestRunInstance:
    """Tests for single instances and the summary."""

    def test_replayable(self, small: SelftestConfig) -> None:
        limits = LimitsConfig()
        first = run_instance('reciprocity', 2, small, limits)
        second = run_instance('reciprocity', 2, small, limits)
        assert first.to_dict() == second.to_dict()
        assert first.passed

    def test_instance_result_dict(self) -> None:
        result = InstanceResult('orbital', 4, False, [], "ResourceError: too big")
        assert result.to_dict() == {
            'suite': 'orbital', 'index': 4, 'passed': False, 'error': "ResourceError: too big",
        }

    def test_passing_reports_not_listed(self) -> None:
        passing = VerdictReport(theorem='t', instance='i', passed=True)
        result = InstanceResult('reciprocity', 0, True, [passing])
        assert 'failures' not in result.to_dict()

    def test_selftest_passes(self, small: SelftestConfig) -> None:
        summary = run_selftest(small, LimitsConfig())

        assert summary['passed']
        assert summary['seed'] == 7
        assert summary['count'] == 3
        assert set(summary['suites']) == set(SUITES)
        assert all(s['passed'] == 3 and s['failed'] == [] for s in summary['suites'].values())

    def test_selected_suites(self, small: SelftestConfig) -> None:
        summary = run_selftest(small, LimitsConfig(), suites=('orbital',))
        assert list(summary['suites']) == ['orbital']

    def test_explore(self, small: SelftestConfig) -> None:
        result = explore_non_locally_special(small, LimitsConfig(), samples=5)
        assert 0 <= result['samples'] <= 5
        assert all('poset' in c and 'report' in c for c in result['counterexamples'])
