"""
Unit tests for cyclotomic arithmetic, class functions and character tables.
"""
from fractions import Fraction

import numpy as np
import pytest

from qclass.core.config import LimitsConfig
from qclass.core.errors import IntegrityError, InvalidInputError, ResourceError
from qclass.groups.character_table import (
    Verdict,
    character_table,
    decompose,
    multiplicity_vector,
    order_leq,
)
from qclass.groups.class_function import (
    ClassFunction,
    induce,
    inner_product,
    orbit_count,
    permutation_character,
    regular_character,
    restrict,
    sign_character,
    trivial_character,
)
from qclass.groups import oracle
from qclass.groups.cyclotomic import CycNumber, TPoly, cyclotomic_coefficients
from qclass.groups.dixon import dixon_prime
from qclass.groups.group import PermGroup, generate, symmetric_group
from qclass.groups.permutation import Permutation


class TestCycNumber:
    """Tests for exact cyclotomic numbers."""

    def test_cyclotomic_coefficients(self) -> None:
        assert cyclotomic_coefficients(1) == (-1, 1)
        assert cyclotomic_coefficients(4) == (1, 0, 1)
        assert cyclotomic_coefficients(6) == (1, -1, 1)
        with pytest.raises(InvalidInputError):
            cyclotomic_coefficients(0)

    def test_reduction_mod_cyclotomic_polynomial(self) -> None:
        assert CycNumber.zeta(3, 2).coeffs == (-1, -1)
        assert CycNumber.zeta(4, 3).coeffs == (0, -1)
        assert CycNumber.zeta(8, 6).coeffs == (0, 0, -1, 0)
        # 1 + ζ + ... + ζ^4 = 0 in Q(ζ_5)
        assert CycNumber(5, [1, 1, 1, 1, 1]).coeffs == (0, 0, 0, 0)
        assert CycNumber(3, [Fraction(1, 2), 0, Fraction(1, 2)]).coeffs == (0, Fraction(-1, 2))

    def test_roots_of_unity(self) -> None:
        w = CycNumber.zeta(3)
        assert w * w * w == 1
        assert w + w.conjugate() == -1
        assert 1 + w + w * w == 0

    def test_mixed_fields(self) -> None:
        i = CycNumber.zeta(4)
        w = CycNumber.zeta(3)
        assert (i * w).m == 12
        assert i * i == -1
        assert (i * w) * (i * w).conjugate() == 1

    def test_lift(self) -> None:
        assert CycNumber.zeta(2).lift(4) == CycNumber.zeta(4, 2)
        with pytest.raises(InvalidInputError):
            CycNumber.zeta(3).lift(4)

    def test_rational_queries(self) -> None:
        half = CycNumber.rational(Fraction(1, 2))
        assert half.is_rational
        assert not half.is_integer
        assert half.to_fraction() == Fraction(1, 2)
        assert CycNumber.rational(3, 4).is_integer
        with pytest.raises(InvalidInputError):
            CycNumber.zeta(3).to_fraction()

    def test_to_complex(self) -> None:
        assert abs(CycNumber.zeta(4).to_complex() - 1j) < 1e-12

    def test_to_json(self) -> None:
        assert CycNumber.rational(Fraction(-3, 2)).to_json() == "-3/2"
        assert CycNumber.rational(5).to_json() == 5
        assert CycNumber.zeta(4).to_json() == [0, 1]
        assert CycNumber.zeta(2).to_json(4) == -1

    def test_str(self) -> None:
        assert str(CycNumber.zeta(4)) == "z4"
        assert str(2 - CycNumber.zeta(3, 2) * 3) == "5+3*z3"


class TestTPoly:
    """Tests for polynomials in t."""

    def test_trailing_zeros_dropped(self) -> None:
        p = TPoly([1, 2, 0, 0])
        assert p.degree == 1
        assert TPoly().degree == -1
        assert not TPoly([0])

    def test_arithmetic(self) -> None:
        p = TPoly([1, 1])
        assert p * p == TPoly([1, 2, 1])
        assert p - p == 0
        assert 3 - p == TPoly([2, -1])
        assert (p * 4) / 2 == TPoly([2, 2])
        assert TPoly.t(2) == TPoly([0, 0, 1])

    def test_evaluate(self) -> None:
        assert TPoly([1, 2, 1]).evaluate(-1) == 0
        assert TPoly([1, 2, 1]).evaluate(2) == 9

    def test_str_and_json(self) -> None:
        assert str(TPoly([0, 4, 16, 4])) == "4t^3+16t^2+4t"
        assert str(TPoly([1, -1])) == "-t+1"
        assert TPoly([7]).to_json() == 7
        assert TPoly([7]).to_json(polynomial=True) == [7]
        assert TPoly([1, 1]).to_json() == [1, 1]

    def test_coefficient_outside_range(self) -> None:
        assert TPoly([1]).coefficient(5) == 0
        assert TPoly([1]).coefficient(-1) == 0


class TestClassFunction:
    """Tests for ClassFunction and standard characters on S3."""

    @pytest.fixture
    def s3(self) -> PermGroup:
        return symmetric_group("abc")

    def test_wrong_number_of_values(self, s3: PermGroup) -> None:
        with pytest.raises(InvalidInputError):
            ClassFunction(s3, [1, 2])

    def test_standard_characters(self, s3: PermGroup) -> None:
        assert trivial_character(s3) == ClassFunction(s3, [1, 1, 1])
        assert sign_character(s3) == ClassFunction(s3, [1, -1, 1])
        assert regular_character(s3) == ClassFunction(s3, [6, 0, 0])

    def test_call_and_degree(self, s3: PermGroup) -> None:
        chi = ClassFunction(s3, [2, 0, -1])
        assert chi(Permutation.parse("(a c b)", "abc")) == -1
        assert chi.degree == 2

    def test_inner_products(self, s3: PermGroup) -> None:
        standard = ClassFunction(s3, [2, 0, -1])
        assert inner_product(standard, standard) == 1
        assert inner_product(trivial_character(s3), sign_character(s3)) == 0
        assert inner_product(standard, regular_character(s3)) == 2

    def test_ring_operations(self, s3: PermGroup) -> None:
        sgn = sign_character(s3)
        assert sgn * sgn == trivial_character(s3)
        assert sgn + 1 == ClassFunction(s3, [2, 0, 2])
        assert 1 - sgn == ClassFunction(s3, [0, 2, 0])
        assert (sgn * 4) / 2 == ClassFunction(s3, [2, -2, 2])

    def test_different_groups(self, s3: PermGroup) -> None:
        other = symmetric_group("ab")
        with pytest.raises(InvalidInputError):
            trivial_character(s3) + trivial_character(other)
        assert trivial_character(s3) != trivial_character(other)

    def test_t_coefficients(self, s3: PermGroup) -> None:
        chi = ClassFunction(s3, [TPoly([1, 2]), 0, TPoly([0, 0, 1])])
        assert chi.t_degree == 2
        assert chi.t_coefficient(1) == ClassFunction(s3, [2, 0, 0])
        assert chi.to_json() == {"()": [1, 2], "(b c)": 0, "(a b c)": [0, 0, 1]}

    def test_permutation_character(self, s3: PermGroup) -> None:
        chi = permutation_character(s3, "abc", lambda g, x: g(x))
        assert chi == ClassFunction(s3, [3, 1, 0])
        assert inner_product(trivial_character(s3), chi) == 1
        assert orbit_count(s3, "abc", lambda g, x: g(x)) == 1

    def test_permutation_character_not_closed(self, s3: PermGroup) -> None:
        with pytest.raises(InvalidInputError):
            permutation_character(s3, "ab", lambda g, x: g(x))

    def test_restrict_and_induce(self, s3: PermGroup) -> None:
        c3 = generate([Permutation.parse("(a b c)", "abc")], "abc")
        restricted = restrict(ClassFunction(s3, [2, 0, -1]), c3)
        assert restricted.degree == 2

        induced = induce(trivial_character(c3), s3)
        assert induced == trivial_character(s3) + sign_character(s3)

    def test_restrict_to_non_subgroup(self, s3: PermGroup) -> None:
        other = generate([], "abcd")
        with pytest.raises(InvalidInputError):
            restrict(trivial_character(s3), other)


class TestCharacterTable:
    """Tests for character tables by Dixon's method and the numeric check."""

    def test_dixon_prime(self) -> None:
        assert dixon_prime(6, 6) == 7
        assert dixon_prime(4, 4) == 5

    def test_s3(self) -> None:
        s3 = symmetric_group("abc")
        table = character_table(s3)

        assert table.degrees == (1, 1, 2)
        assert table[0] == trivial_character(s3)
        assert table[1] == sign_character(s3)
        assert table[2] == ClassFunction(s3, [2, 0, -1])
        assert table.is_orthonormal()

    def test_s4_degrees(self) -> None:
        table = character_table(symmetric_group("abcd"))
        assert sorted(table.degrees) == [1, 1, 2, 3, 3]
        assert table.is_orthonormal()

    def test_cyclic_group_has_complex_characters(self, four_cycle_group: PermGroup) -> None:
        table = character_table(four_cycle_group)

        assert table.degrees == (1, 1, 1, 1)
        assert table.is_orthonormal()
        assert any(not v.is_rational for chi in table for v in chi.values)

    def test_dixon_matches_oracle(self, fig3_group: PermGroup) -> None:
        dixon = character_table(fig3_group, 'dixon')
        oracle = character_table(fig3_group, 'oracle')

        assert len(dixon) == 6
        assert dixon.same_as(oracle)

    def test_trivial_group(self) -> None:
        table = character_table(generate([], "ab"))
        assert table.degrees == (1,)

    def test_unknown_method(self) -> None:
        with pytest.raises(InvalidInputError):
            character_table(symmetric_group("ab"), 'guess')  # type: ignore[arg-type]

    def test_oracle_bound(self) -> None:
        with pytest.raises(ResourceError):
            character_table(symmetric_group("abcd"), 'oracle', LimitsConfig(oracle_max_order=12))

    def test_oracle_rounds_within_tolerance(self) -> None:
        s2 = symmetric_group("ab")
        power_maps = [s2.power_map(k) for k in range(s2.exponent)]
        values = np.array([1 + 1e-9, -1 - 1e-9])
        assert oracle._round_character(s2, values, power_maps) == [1, -1]

    def test_oracle_rejects_non_integral_multiplicity(self) -> None:
        s2 = symmetric_group("ab")
        power_maps = [s2.power_map(k) for k in range(s2.exponent)]
        with pytest.raises(IntegrityError):
            oracle._round_character(s2, np.array([1.0, 0.5]), power_maps)

    def test_to_dict(self) -> None:
        data = character_table(symmetric_group("abc")).to_dict()
        assert data['order'] == 6
        assert data['classes'] == [
            {'representative': '()', 'size': 1},
            {'representative': '(b c)', 'size': 3},
            {'representative': '(a b c)', 'size': 2},
        ]
        assert data['characters'][2] == [2, 0, -1]


class TestDecompose:
    """Tests for decompose and the character order."""

    def test_effective(self) -> None:
        s3 = symmetric_group("abc")
        chi = permutation_character(s3, "abc", lambda g, x: g(x))
        result = decompose(chi)

        assert result.verdict is Verdict.EFFECTIVE
        assert multiplicity_vector(result) == [1, 0, 1]
        assert result.to_dict() == {'verdict': 'effective', 'multiplicities': [1, 0, 1]}

    def test_virtual(self) -> None:
        s3 = symmetric_group("abc")
        result = decompose(trivial_character(s3) - sign_character(s3))
        assert result.verdict is Verdict.VIRTUAL
        assert not result.is_effective

    def test_non_character(self) -> None:
        s3 = symmetric_group("abc")
        assert decompose(ClassFunction(s3, [1, 0, 0])).verdict is Verdict.NON_CHARACTER

    def test_t_coefficients_are_decomposed(self) -> None:
        s3 = symmetric_group("abc")
        psi = trivial_character(s3) + sign_character(s3) * TPoly.t()
        result = decompose(psi)
        assert result.multiplicities[0] == 1
        assert result.multiplicities[1] == TPoly.t()

    def test_order_leq(self) -> None:
        s3 = symmetric_group("abc")
        regular = regular_character(s3)
        assert order_leq(trivial_character(s3), regular)
        assert not order_leq(regular, trivial_character(s3))
