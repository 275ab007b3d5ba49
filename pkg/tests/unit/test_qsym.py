"""
Unit tests for quasisymmetric expressions, specializations and serialization.
"""
from fractions import Fraction

import pytest

from qclass.combinat.compositions import IntComposition
from qclass.core.errors import InvalidInputError
from qclass.groups.class_function import ClassFunction, sign_character
from qclass.groups.cyclotomic import TPoly
from qclass.groups.group import PermGroup, parse_group
from qclass.qsym.compare import find_difference
from qclass.qsym.equivariant import (
    assemble,
    at_class,
    at_identity,
    by_class,
    coefficient_function,
    scale_by_class,
    t_coefficient,
    t_degree,
)
from qclass.qsym.expr import Basis, QSymExpr, antipode, f_to_m, m_to_f, reverse, signed_antipode
from qclass.qsym.serialize import encode_coefficient, expr_to_dict, qcf_to_dict, to_canonical_json
from qclass.qsym.specialization import (
    PolyInBinomials,
    generalized_binomial,
    h_polynomial,
    is_unimodal,
    negate_variable,
    principal_specialization,
)


C = IntComposition.of


def M(*terms: tuple) -> QSymExpr:
    """M-expression from (coeff, parts) pairs."""
    degree = sum(terms[0][1])
    return QSymExpr.from_items(degree, Basis.M, [(C(*parts), coeff) for coeff, parts in terms])


def F(*terms: tuple) -> QSymExpr:
    degree = sum(terms[0][1])
    return QSymExpr.from_items(degree, Basis.F, [(C(*parts), coeff) for coeff, parts in terms])


@pytest.fixture
def s2() -> PermGroup:
    return parse_group(["(a b)"], "ab")


class TestQSymExpr:
    """Tests for QSymExpr construction and arithmetic."""

    def test_zero_coefficients_dropped(self) -> None:
        q = QSymExpr(2, Basis.M, {C(2): 0, C(1, 1): 3})
        assert len(q) == 1
        assert QSymExpr.zero(3).is_zero()
        assert not QSymExpr.zero(3)

    def test_weight_mismatch(self) -> None:
        with pytest.raises(InvalidInputError):
            QSymExpr(3, Basis.M, {C(2): 1})

    def test_negative_degree(self) -> None:
        with pytest.raises(InvalidInputError):
            QSymExpr(-1)

    def test_from_items_sums_repeats(self) -> None:
        q = M((1, (2,)), (2, (2,)))
        assert q.coefficient(C(2)) == 3

    def test_add_and_scale(self) -> None:
        q = M((1, (2,))) + M((2, (1, 1)))
        assert q == M((1, (2,)), (2, (1, 1)))
        assert q - q == QSymExpr.zero(2)
        assert 2 * q == q * 2
        assert (-q).coefficient(C(1, 1)) == -2

    def test_incompatible_sum(self) -> None:
        with pytest.raises(InvalidInputError):
            M((1, (2,))) + F((1, (2,)))
        with pytest.raises(InvalidInputError):
            M((1, (2,))) + M((1, (3,)))

    def test_equality_across_bases(self) -> None:
        assert F((1, (2,))) == M((1, (1, 1)), (1, (2,)))

    def test_str(self) -> None:
        assert str(f_to_m(QSymExpr.monomial(C(2), basis=Basis.F))) == "M(1,1) + M(2)"
        assert str(m_to_f(M((1, (2,))))) == "-F(1,1) + F(2)"
        assert str(M((3, (2,)))) == "(3)M(2)"
        assert str(QSymExpr.zero(1)) == "0"


class TestBasisChange:
    """Tests for M/F conversion, antipode and reversal."""

    def test_f_to_m(self) -> None:
        assert f_to_m(F((1, (1, 2)))) == M((1, (1, 2)), (1, (1, 1, 1)))

    def test_m_to_f(self) -> None:
        q = m_to_f(M((1, (1, 2))))
        assert q.basis == Basis.F
        assert q.coefficient(C(1, 2)) == 1
        assert q.coefficient(C(1, 1, 1)) == -1

    def test_wrong_basis(self) -> None:
        with pytest.raises(InvalidInputError):
            f_to_m(M((1, (2,))))

    def test_antipode_degree_two(self) -> None:
        assert antipode(M((1, (2,)))) == M((-1, (2,)))
        assert antipode(M((1, (1, 1)))) == M((1, (1, 1)), (1, (2,)))
        assert antipode(F((1, (2,)))) == F((1, (1, 1)))

    def test_antipode_is_involution(self) -> None:
        q = M((1, (2, 1)), (3, (1, 1, 1)))
        assert antipode(antipode(q)) == q
        assert antipode(M((1, (2, 1)))) == M((1, (1, 2)), (1, (3,)))

    def test_signed_antipode(self) -> None:
        assert signed_antipode(M((1, (2, 1)))) == M((-1, (1, 2)), (-1, (3,)))
        assert signed_antipode(M((1, (1, 1))), 2) == M((2, (1, 1)), (2, (2,)))

    def test_reverse(self) -> None:
        assert reverse(F((1, (1, 3)))) == F((1, (3, 1)))


class TestSpecialization:
    """Tests for principal specialization and polynomials in binomials."""

    def test_generalized_binomial(self) -> None:
        assert generalized_binomial(5, 2) == 10
        assert generalized_binomial(-2, 2) == 3
        assert generalized_binomial(-2, 1) == -2
        assert generalized_binomial(3, -1) == 0

    def test_f_vector(self) -> None:
        poly = principal_specialization(M((1, (2,)), (2, (1, 1))))
        assert poly.f == (0, 1, 2)
        # n + 2 binom(n, 2) = n^2
        assert poly.series(4) == [0, 1, 4, 9]
        assert poly(-3) == 9

    def test_f_basis_input(self) -> None:
        assert principal_specialization(F((1, (2,)))).f == (0, 1, 1)

    def test_length_check(self) -> None:
        with pytest.raises(InvalidInputError):
            PolyInBinomials(2, [1, 2])

    def test_h_vector_matches_f_basis(self) -> None:
        q = M((1, (2,)))
        assert principal_specialization(q).h_vector() == [0, 1, -1]
        assert h_polynomial(q) == [0, 1, -1]

    def test_negate_variable(self) -> None:
        poly = PolyInBinomials(2, [0, 0, 1])
        negated = negate_variable(poly)
        assert negated.f == (0, 1, 1)
        assert all(negated(n) == poly(-n) for n in range(-3, 4))

    def test_map(self) -> None:
        assert PolyInBinomials(1, [1, 2]).map(lambda c: -c) == PolyInBinomials(1, [-1, -2])

    @pytest.mark.parametrize("sequence,expected", [
        ([], True),
        ([4], True),
        ([1, 3, 3, 2], True),
        ([0, 0, 1, 0, 1, 0], False),
        ([3, 2, 1], True),
    ])
    def test_is_unimodal(self, sequence, expected: bool) -> None:
        assert is_unimodal(sequence) is expected


class TestEquivariant:
    """Tests for quasisymmetric class functions on S2."""

    @pytest.fixture
    def omega(self, s2: PermGroup) -> QSymExpr:
        return assemble(s2, [M((1, (2,)), (2, (1, 1))), M((1, (2,)))])

    def test_assemble_and_at_class(self, omega: QSymExpr, s2: PermGroup) -> None:
        assert at_identity(omega) == M((1, (2,)), (2, (1, 1)))
        assert at_class(omega, 1) == M((1, (2,)))
        assert list(by_class(omega, s2)) == ["()", "(a b)"]

    def test_assemble_checks(self, s2: PermGroup) -> None:
        with pytest.raises(InvalidInputError):
            assemble(s2, [M((1, (2,)))])
        with pytest.raises(InvalidInputError):
            assemble(s2, [M((1, (2,))), F((1, (2,)))])

    def test_coefficient_function(self, omega: QSymExpr, s2: PermGroup) -> None:
        assert coefficient_function(omega, C(1, 1), s2) == ClassFunction(s2, [2, 0])
        assert coefficient_function(omega, C(5), s2) == ClassFunction(s2, [0, 0])

    def test_scale_by_sign(self, omega: QSymExpr, s2: PermGroup) -> None:
        scaled = scale_by_class(omega, sign_character(s2))
        assert at_class(scaled, 1) == M((-1, (2,)))

    def test_t_coefficients(self, s2: PermGroup) -> None:
        q = QSymExpr(2, Basis.M, {C(1, 1): ClassFunction(s2, [TPoly([1, 1]), 0])})
        assert t_degree(q) == 1
        assert at_identity(t_coefficient(q, 1)) == M((1, (1, 1)))

    def test_qcf_to_dict(self, omega: QSymExpr, s2: PermGroup) -> None:
        assert qcf_to_dict(omega, s2) == {
            'degree': 2,
            'basis': 'M',
            'group_order': 2,
            'columns': [[1, 1], [2]],
            'rows': [
                {'class': '()', 'size': 1, 'values': [2, 1]},
                {'class': '(a b)', 'size': 1, 'values': [0, 1]},
            ],
        }


class TestSerializeAndCompare:
    """Tests for canonical JSON and find_difference."""

    def test_encode_coefficient(self) -> None:
        assert encode_coefficient(Fraction(1, 2)) == "1/2"
        assert encode_coefficient(3, polynomial=True) == [3]
        assert encode_coefficient(TPoly([0, 1])) == [0, 1]
        with pytest.raises(TypeError):
            encode_coefficient("x")

    def test_expr_to_dict(self) -> None:
        assert expr_to_dict(M((1, (2,)), (2, (1, 1)))) == {
            'degree': 2,
            'basis': 'M',
            'terms': [{'alpha': [1, 1], 'coeff': 2}, {'alpha': [2], 'coeff': 1}],
        }

    def test_canonical_json(self) -> None:
        assert to_canonical_json({'b': 1, 'a': [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'

    def test_no_difference(self) -> None:
        assert find_difference(F((1, (2,))), M((1, (2,)), (1, (1, 1)))) is None

    def test_first_difference(self) -> None:
        witness = find_difference(M((1, (2,))), M((1, (2,)), (1, (1, 1))), detail="S q")
        assert witness is not None
        assert witness.composition == [1, 1]
        assert (witness.lhs, witness.rhs) == (0, 1)
        assert witness.detail == "S q"

    def test_degree_difference(self) -> None:
        witness = find_difference(M((1, (2,))), M((1, (3,))))
        assert witness is not None
        assert (witness.lhs, witness.rhs) == (2, 3)

    def test_difference_names_class(self, s2: PermGroup) -> None:
        a = assemble(s2, [M((1, (2,))), M((1, (2,)))])
        b = assemble(s2, [M((1, (2,))), M((-1, (2,)))])
        witness = find_difference(a, b, s2)
        assert witness is not None
        assert witness.class_representative == "(a b)"
        assert (witness.lhs, witness.rhs) == (1, -1)
