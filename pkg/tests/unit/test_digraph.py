"""
Unit tests for digraphs, orientations and chromatic class functions.
"""
import json
from pathlib import Path

import pytest

from qclass.combinat.compositions import IntComposition
from qclass.combinat.set_compositions import SetComposition
from qclass.core.config import LimitsConfig
from qclass.core.errors import InvalidInputError, PreconditionError, ResourceError
from qclass.digraph.chromatic import (
    bar_chromatic_qcf,
    chromatic_at,
    chromatic_poly_cf,
    chromatic_qcf,
    colorings,
    count_colorings,
    count_proper_colorings,
    is_coloring_pattern,
)
from qclass.digraph.decomposition import (
    averaged_sum,
    pointwise_sum,
    transversal_sum,
    verify_orientation_decomposition,
)
from qclass.digraph.graph import Digraph, Orientation, orientation_poset
from qclass.groups.cyclotomic import TPoly
from qclass.groups.group import PermGroup, parse_group
from qclass.groups.permutation import Permutation
from qclass.qsym.equivariant import at_identity
from qclass.qsym.expr import Basis, QSymExpr
from qclass.qsym.serialize import qcf_to_dict


C = IntComposition.of


class TestDigraph:
    """Tests for Digraph construction and statistics."""

    def test_loop_rejected(self) -> None:
        with pytest.raises(InvalidInputError, match="Loop"):
            Digraph("ab", [("a", "a")])

    def test_antiparallel_rejected(self) -> None:
        with pytest.raises(InvalidInputError, match="More than one edge"):
            Digraph("ab", [("a", "b"), ("b", "a")])

    def test_payload(self, instances_dir: Path, four_cycle: Digraph) -> None:
        payload = json.loads((instances_dir / "four_cycle.json").read_text())
        assert Digraph.from_payload(payload) == four_cycle

    def test_asc_and_des(self, four_cycle: Digraph) -> None:
        assert four_cycle.asc({"a": 1, "b": 2, "c": 1, "d": 2}) == 2
        reversed_ab = four_cycle.orientation([("b", "a"), ("b", "c"), ("c", "d"), ("d", "a")])
        assert four_cycle.des(reversed_ab) == 1
        assert four_cycle.asc_composition(SetComposition.parse("a|b|c|d")) == 3

    def test_orientation_must_cover_edges(self, four_cycle: Digraph) -> None:
        with pytest.raises(InvalidInputError):
            four_cycle.orientation([("a", "b")])
        with pytest.raises(InvalidInputError):
            four_cycle.orientation([("a", "b"), ("b", "a"), ("c", "d"), ("d", "a")])

    def test_acyclic_orientations(self, four_cycle: Digraph, single_edge: Digraph) -> None:
        assert len(four_cycle.acyclic_orientations()) == 14
        assert len(single_edge.acyclic_orientations()) == 2
        with pytest.raises(ResourceError):
            four_cycle.acyclic_orientations(LimitsConfig(max_n=3))

    def test_automorphisms(self, four_cycle: Digraph, four_cycle_group: PermGroup) -> None:
        assert four_cycle.automorphisms() == four_cycle_group
        assert Digraph("abc").automorphisms().order == 6

    def test_require_symmetry(self, four_cycle: Digraph) -> None:
        with pytest.raises(InvalidInputError):
            four_cycle.require_symmetry(parse_group(["(a b)"], "abcd"))
        with pytest.raises(InvalidInputError):
            four_cycle.require_symmetry(parse_group(["(a b)"], "ab"))

    def test_reverse_edge(self, single_edge: Digraph) -> None:
        reversed_edge = single_edge.reverse_edge(("a", "b"))
        assert reversed_edge.edges == (("b", "a"),)
        assert reversed_edge.has_edge("b", "a")
        assert not reversed_edge.has_edge("a", "b")
        with pytest.raises(InvalidInputError):
            single_edge.reverse_edge(("b", "a"))


class TestOrientation:
    """Tests for Orientation and its poset."""

    def test_act_and_fixed(self, four_cycle: Digraph) -> None:
        cyclic = four_cycle.orientation(four_cycle.edges)
        rotation = Permutation.parse("(a b c d)", "abcd")
        assert not cyclic.is_acyclic
        assert cyclic.is_fixed(rotation)
        assert str(cyclic) == "{a->b, b->c, c->d, d->a}"

    def test_orientation_poset(self, single_edge: Digraph) -> None:
        poset = orientation_poset(single_edge.orientation([("a", "b")]))
        assert poset.lt1("b", "a")
        assert poset.lt2("a", "b")
        assert poset.is_locally_special()

    def test_cyclic_orientation_has_no_poset(self, four_cycle: Digraph) -> None:
        with pytest.raises(PreconditionError):
            orientation_poset(Orientation(four_cycle.vertices, four_cycle.edges))


class TestChromatic:
    """Tests for the chromatic class functions."""

    def test_single_edge(self, single_edge: Digraph, instances_dir: Path) -> None:
        q = chromatic_qcf(single_edge)
        assert at_identity(q) == QSymExpr(2, Basis.M, {C(1, 1): TPoly([1, 1])})

        golden = json.loads((instances_dir / "golden" / "single_edge.chromatic-M.json").read_text())
        table = qcf_to_dict(q, single_edge.automorphisms(), polynomial=True)
        assert table == {k: v for k, v in golden.items() if k not in ('instance', 'form')}

    def test_single_edge_bar(self, single_edge: Digraph) -> None:
        q = at_identity(bar_chromatic_qcf(single_edge))
        assert q == QSymExpr(2, Basis.M, {C(1, 1): TPoly([1, 1]), C(2): TPoly([1, 1])})

    def test_colorings(self, single_edge: Digraph) -> None:
        found = [str(c) for c in colorings(single_edge)]
        assert found == ["a|b", "b|a"]
        assert is_coloring_pattern(single_edge, SetComposition.parse("a|b"))
        assert not is_coloring_pattern(single_edge, SetComposition.parse("ab"))

    def test_rotation_fixes_no_coloring(self, four_cycle: Digraph) -> None:
        assert chromatic_at(four_cycle, Permutation.parse("(a b c d)", "abcd")).is_zero()

    def test_chromatic_at_needs_automorphism(self, four_cycle: Digraph) -> None:
        with pytest.raises(InvalidInputError):
            chromatic_at(four_cycle, Permutation.parse("(a b)", "abcd"))

    def test_half_turn(self, four_cycle: Digraph) -> None:
        # colorings constant on {a, c} and {b, d} always have two ascents
        q = chromatic_at(four_cycle, Permutation.parse("(a c)(b d)", "abcd"))
        assert q == QSymExpr(4, Basis.M, {C(2, 2): TPoly([0, 0, 2])})

    def test_polynomial_against_brute_force(self, four_cycle: Digraph, four_cycle_group: PermGroup) -> None:
        poly = chromatic_poly_cf(four_cycle, four_cycle_group)
        for c in four_cycle_group.classes:
            for n in range(4):
                value = poly.evaluate(n)
                assert value.at(c.index) == count_colorings(four_cycle, n, c.representative)

    def test_proper_colorings(self, four_cycle: Digraph) -> None:
        # chromatic polynomial of the 4-cycle: (n-1)^4 + (n-1)
        assert [count_proper_colorings(four_cycle, n) for n in range(4)] == [0, 0, 2, 18]
        assert count_colorings(four_cycle, 2).evaluate(1) == 2

    def test_negative_n(self, four_cycle: Digraph) -> None:
        with pytest.raises(InvalidInputError):
            count_colorings(four_cycle, -1)
        with pytest.raises(InvalidInputError):
            count_proper_colorings(four_cycle, -1)


class TestOrientationDecomposition:
    """Tests for the three orientation sums."""

    def test_four_cycle(self, four_cycle: Digraph, four_cycle_group: PermGroup) -> None:
        report = verify_orientation_decomposition(four_cycle, four_cycle_group, instance="four_cycle")
        assert report.passed
        assert report.details == {
            'orientation-decomposition:pointwise': True,
            'orientation-decomposition:averaged': True,
            'orientation-decomposition:transversal': True,
        }

    def test_forms_agree(self, single_edge: Digraph) -> None:
        group = single_edge.automorphisms()
        expected = chromatic_qcf(single_edge, group)
        assert pointwise_sum(single_edge, group) == expected
        assert averaged_sum(single_edge, group) == expected
        assert transversal_sum(single_edge, group) == expected

    def test_edgeless_graph_under_symmetric_group(self) -> None:
        graph = Digraph("abc")
        assert verify_orientation_decomposition(graph).passed
