"""
Seeded random-instance suites.

Instance ``i`` of a run draws everything from ``random.Random(seed + i)``, so
any single instance can be replayed without rerunning the others. Instances
run in a thread pool; the summary lists which instances passed and gives the
first witness of every failure.
"""
import logging
import random
import string
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Optional

from qclass.core.config import LimitsConfig, SelftestConfig
from qclass.core.config_parser import get_config, get_limits
from qclass.core.errors import QClassError
from qclass.core.logging import log_timing, log_with_metadata
from qclass.core.models import VerdictReport
from qclass.digraph.chromatic import chromatic_qcf
from qclass.digraph.decomposition import verify_orientation_decomposition
from qclass.digraph.graph import Digraph
from qclass.dposet.enumeration import omega_qcf
from qclass.dposet.poset import DoublePoset, Pair
from qclass.groups.group import PermGroup
from qclass.verify.effectiveness import check_F_effective
from qclass.verify.orbital import (
    check_orbit_counts_digraph,
    check_orbit_counts_dposet,
    check_orbital_reciprocity_digraph,
    check_orbital_reciprocity_dposet,
)
from qclass.verify.reciprocity import (
    check_quotient_identity,
    check_reciprocity_digraph,
    check_reciprocity_dposet,
)


logger = logging.getLogger(__name__)

SUITES = ('reciprocity', 'effectiveness', 'decomposition', 'orbital')


def _labels(size: int) -> list[str]:
    return list(string.ascii_lowercase[:size])


def _random_dag(rng: random.Random, labels: list[str], p: float) -> list[Pair]:
    """Pairs x < y along a shuffled order of the labels, each kept with probability p."""
    order = labels[:]
    rng.shuffle(order)
    return [(x, y) for i, x in enumerate(order) for y in order[i + 1:] if rng.random() < p]


def _replicate(pairs: list[Pair], labels: list[str], copies: int) -> tuple[list[str], list[Pair]]:
    """Disjoint union of ``copies`` relabelled copies; the copies are permuted by automorphisms."""
    size = len(labels)
    names = _labels(size * copies)
    rename = [{x: names[k * size + i] for i, x in enumerate(labels)} for k in range(copies)]
    return names, [(r[x], r[y]) for r in rename for x, y in pairs]


def random_locally_special(rng: random.Random, size: int, p: float) -> DoublePoset:
    """
    A random locally special double poset.

    The first order is a random DAG; each of its covers is oriented along a
    random total order, together with a few extra pairs along the same order,
    to form the second order.
    """
    labels = _labels(size)
    first = DoublePoset(labels, _random_dag(rng, labels, p))
    order = labels[:]
    rng.shuffle(order)
    position = {x: i for i, x in enumerate(order)}

    def along(x: str, y: str) -> Pair:
        return (x, y) if position[x] < position[y] else (y, x)

    rel2 = {along(x, y) for x, y in first.covers1}
    rel2 |= {along(x, y) for x in labels for y in labels if x < y and rng.random() < p / 2}
    return DoublePoset(labels, first.rel1, sorted(rel2))


def random_double_poset(rng: random.Random, size: int, p: float) -> DoublePoset:
    """Two independent random orders; usually not locally special."""
    labels = _labels(size)
    return DoublePoset(labels, _random_dag(rng, labels, p), _random_dag(rng, labels, p))


def random_symmetric_double_poset(rng: random.Random, size: int, p: float) -> DoublePoset:
    """Locally special, and with nontrivial automorphisms when two copies fit in ``size``."""
    if size < 2 or rng.random() < 0.5:
        return random_locally_special(rng, size, p)
    base = random_locally_special(rng, size // 2, p)
    labels, rel1 = _replicate(sorted(base.rel1), list(base.elements), 2)
    _, rel2 = _replicate(sorted(base.rel2), list(base.elements), 2)
    return DoublePoset(labels, rel1, rel2)


def random_digraph(rng: random.Random, size: int, p: float) -> Digraph:
    """Random digraph; half the time a disjoint union of isomorphic copies."""
    copies = 2 if size >= 2 and rng.random() < 0.5 else 1
    labels = _labels(size // copies)
    edges = []
    for i, x in enumerate(labels):
        for y in labels[i + 1:]:
            if rng.random() < p:
                edges.append((x, y) if rng.random() < 0.5 else (y, x))
    if copies > 1:
        labels, edges = _replicate(edges, labels, copies)
    return Digraph(labels, edges)


def random_subgroup(rng: random.Random, group: PermGroup, limits: Optional[LimitsConfig] = None) -> PermGroup:
    """The whole group, or the subgroup generated by up to two random elements."""
    if rng.random() < 0.5 or group.order == 1:
        return group
    picks = [rng.choice(group.elements) for _ in range(rng.randint(0, 2))]
    return PermGroup.from_elements(picks, group.domain, limits)


@dataclass
class InstanceResult:
    """Outcome of one random instance.

    Attributes:
        suite: Suite name
        index: Instance index within the run
        passed: Whether every report passed
        reports: Verdict reports of the instance
        error: Error message when a check raised instead of returning
    """
    suite: str
    index: int
    passed: bool
    reports: list[VerdictReport]
    error: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {'suite': self.suite, 'index': self.index, 'passed': self.passed}
        failing = [r.to_dict() for r in self.reports if not r.passed]
        if failing:
            result['failures'] = failing
        if self.error is not None:
            result['error'] = self.error
        return result


Check = Callable[[random.Random, str, SelftestConfig, LimitsConfig], list[VerdictReport]]


def _size(rng: random.Random, config: SelftestConfig) -> int:
    return rng.randint(1, config.max_size)


def _reciprocity(rng: random.Random, name: str, config: SelftestConfig, limits: LimitsConfig) -> list[VerdictReport]:
    poset = random_symmetric_double_poset(rng, _size(rng, config), config.edge_probability)
    graph = random_digraph(rng, _size(rng, config), config.edge_probability)
    return [
        check_reciprocity_dposet(poset, random_subgroup(rng, poset.automorphisms(limits), limits),
                                 limits, f"{name}:double-poset"),
        check_reciprocity_digraph(graph, random_subgroup(rng, graph.automorphisms(limits), limits),
                                  limits, f"{name}:digraph"),
    ]


def _effectiveness(rng: random.Random, name: str, config: SelftestConfig, limits: LimitsConfig) -> list[VerdictReport]:
    poset = random_symmetric_double_poset(rng, _size(rng, config), config.edge_probability)
    graph = random_digraph(rng, _size(rng, config), config.edge_probability)
    poset_group = random_subgroup(rng, poset.automorphisms(limits), limits)
    graph_group = random_subgroup(rng, graph.automorphisms(limits), limits)
    return [
        check_F_effective(omega_qcf(poset, poset_group, limits), poset_group, instance=f"{name}:double-poset"),
        check_F_effective(chromatic_qcf(graph, graph_group, limits), graph_group, instance=f"{name}:digraph"),
    ]


def _decomposition(rng: random.Random, name: str, config: SelftestConfig, limits: LimitsConfig) -> list[VerdictReport]:
    poset = random_symmetric_double_poset(rng, _size(rng, config), config.edge_probability)
    graph = random_digraph(rng, _size(rng, config), config.edge_probability)
    return [
        check_quotient_identity(poset, random_subgroup(rng, poset.automorphisms(limits), limits),
                                limits, f"{name}:double-poset"),
        verify_orientation_decomposition(graph, random_subgroup(rng, graph.automorphisms(limits), limits),
                                         limits, f"{name}:digraph"),
    ]


def _orbital(rng: random.Random, name: str, config: SelftestConfig, limits: LimitsConfig) -> list[VerdictReport]:
    poset = random_symmetric_double_poset(rng, _size(rng, config), config.edge_probability)
    graph = random_digraph(rng, _size(rng, config), config.edge_probability)
    poset_group = random_subgroup(rng, poset.automorphisms(limits), limits)
    graph_group = random_subgroup(rng, graph.automorphisms(limits), limits)
    return [
        check_orbit_counts_dposet(poset, poset_group, limits=limits, instance=f"{name}:double-poset"),
        check_orbital_reciprocity_dposet(poset, poset_group, limits, f"{name}:double-poset"),
        check_orbit_counts_digraph(graph, graph_group, limits=limits, instance=f"{name}:digraph"),
        check_orbital_reciprocity_digraph(graph, graph_group, limits, f"{name}:digraph"),
    ]


CHECKS: dict[str, Check] = {
    'reciprocity': _reciprocity,
    'effectiveness': _effectiveness,
    'decomposition': _decomposition,
    'orbital': _orbital,
}


def run_instance(suite: str, index: int, config: SelftestConfig, limits: LimitsConfig) -> InstanceResult:
    """Run one instance of one suite from ``random.Random(config.seed + index)``."""
    rng = random.Random(config.seed + index)
    name = f"{suite}-{index}"
    try:
        reports = CHECKS[suite](rng, name, config, limits)
    except QClassError as e:
        log_with_metadata(logger, logging.WARNING, f"Instance {name} raised {type(e).__name__}",
                          {"suite": suite, "index": index, "error": e.message})
        return InstanceResult(suite, index, False, [], f"{type(e).__name__}: {e.message}")
    return InstanceResult(suite, index, all(r.passed for r in reports), reports)


def explore_non_locally_special(
    config: SelftestConfig,
    limits: LimitsConfig,
    samples: Optional[int] = None,
) -> dict[str, Any]:
    """
    Run double-poset reciprocity without its hypothesis on random
    non-locally-special double posets and collect the instances where it fails.
    """
    samples = config.count if samples is None else samples
    counterexamples = []
    tried = 0
    for index in range(samples):
        rng = random.Random(config.seed + index)
        poset = random_double_poset(rng, _size(rng, config), config.edge_probability)
        if poset.is_locally_special():
            continue
        tried += 1
        verdict = check_reciprocity_dposet(poset, None, limits, f"explore-{index}", require_hypothesis=False)
        if not verdict.passed:
            counterexamples.append({'index': index, 'poset': poset.to_payload(), 'report': verdict.to_dict()})
    return {'samples': tried, 'counterexamples': counterexamples}


def run_selftest(
    config: Optional[SelftestConfig] = None,
    limits: Optional[LimitsConfig] = None,
    suites: tuple[str, ...] = SUITES,
    explore: bool = False,
) -> dict[str, Any]:
    """
    Run the random-instance suites concurrently.

    Args:
        config: Harness settings (default: active configuration)
        limits: Size bounds (default: active configuration)
        suites: Suite names to run
        explore: Also run reciprocity on non-locally-special double posets

    Returns:
        Dictionary with:
        - seed, count: The run parameters
        - suites: per suite, the passed count and the failing instances
        - passed: True when no instance failed
    """
    config = config if config is not None else get_config().selftest
    limits = get_limits(limits)
    tasks = [(suite, index) for suite in suites for index in range(config.count)]
    logger.info(f"Running {len(tasks)} self-test instances on {config.workers} workers")

    with log_timing(logger, "Self-test complete", {"seed": config.seed, "count": config.count}) as fields:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(lambda task: run_instance(task[0], task[1], config, limits), tasks))

        summary: dict[str, Any] = {'seed': config.seed, 'count': config.count, 'suites': {}}
        for suite in suites:
            outcomes = [r for r in results if r.suite == suite]
            summary['suites'][suite] = {
                'passed': sum(1 for r in outcomes if r.passed),
                'failed': [r.to_dict() for r in outcomes if not r.passed],
            }
        summary['passed'] = all(not s['failed'] for s in summary['suites'].values())
        if explore:
            summary['exploratory'] = explore_non_locally_special(config, limits)
        fields['passed'] = summary['passed']
    return summary
