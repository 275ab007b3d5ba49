"""
Homogeneous quasisymmetric expressions in the monomial and fundamental bases.

A QSymExpr has a fixed degree, a basis tag (M or F) and sparse coefficients
indexed by compositions of the degree. Coefficients come from any
commutative ring whose elements support ``+``, ``-``, ``*`` with ints and
with each other, ``==`` and truthiness as the nonzero test: ints,
Fractions, TPoly and ClassFunction all qualify.

Refinement convention: finer is larger, F_α = Σ_{β ≥ α} M_β.
"""
from enum import Enum
from typing import Any, Callable, Iterable, Iterator, Mapping, Optional

from qclass.combinat.compositions import IntComposition
from qclass.core.errors import InvalidInputError


class Basis(str, Enum):
    M = 'M'
    F = 'F'


def _signed(coeff: Any, exponent: int) -> Any:
    return -coeff if exponent % 2 else coeff


class QSymExpr:
    """A homogeneous quasisymmetric expression.

    Attributes:
        degree: Degree d; every key is a composition of d
        basis: Basis.M or Basis.F
        terms: Nonzero coefficients keyed by composition

    Examples:
        >>> f2 = QSymExpr.monomial(IntComposition.of(2), basis=Basis.F)
        >>> str(f_to_m(f2))
        'M(1,1) + M(2)'
    """

    __slots__ = ('degree', 'basis', 'terms')
    __hash__ = None  # type: ignore[assignment]

    def __init__(
        self,
        degree: int,
        basis: Basis | str = Basis.M,
        terms: Optional[Mapping[IntComposition, Any]] = None,
    ):
        if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
            raise InvalidInputError(f"Degree must be a nonnegative integer, got {degree!r}")
        self.degree = degree
        self.basis = Basis(basis)
        self.terms: dict[IntComposition, Any] = {}
        for alpha, coeff in (terms or {}).items():
            if alpha.weight != degree:
                raise InvalidInputError(
                    f"Composition {alpha} has weight {alpha.weight}, expected {degree}",
                    data={"alpha": list(alpha.parts), "degree": degree}
                )
            if coeff:
                self.terms[alpha] = coeff

    @classmethod
    def monomial(cls, alpha: IntComposition, coeff: Any = 1, basis: Basis | str = Basis.M) -> 'QSymExpr':
        return cls(alpha.weight, basis, {alpha: coeff})

    @classmethod
    def zero(cls, degree: int, basis: Basis | str = Basis.M) -> 'QSymExpr':
        return cls(degree, basis)

    @classmethod
    def from_items(
        cls,
        degree: int,
        basis: Basis | str,
        items: Iterable[tuple[IntComposition, Any]],
    ) -> 'QSymExpr':
        """Sum coefficients over repeated keys."""
        terms: dict[IntComposition, Any] = {}
        for alpha, coeff in items:
            terms[alpha] = terms[alpha] + coeff if alpha in terms else coeff
        return cls(degree, basis, terms)

    def coefficient(self, alpha: IntComposition) -> Any:
        return self.terms.get(alpha, 0)

    def items(self) -> Iterator[tuple[IntComposition, Any]]:
        """Terms in composition order."""
        for alpha in sorted(self.terms):
            yield alpha, self.terms[alpha]

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_compatible(self, other: 'QSymExpr') -> None:
        if self.degree != other.degree or self.basis != other.basis:
            raise InvalidInputError(
                f"Cannot combine a degree-{self.degree} {self.basis.value}-expression "
                f"with a degree-{other.degree} {other.basis.value}-expression",
                data={"left": [self.degree, self.basis.value], "right": [other.degree, other.basis.value]}
            )

    def __add__(self, other: 'QSymExpr') -> 'QSymExpr':
        if not isinstance(other, QSymExpr):
            return NotImplemented
        self._check_compatible(other)
        return QSymExpr.from_items(
            self.degree, self.basis, list(self.terms.items()) + list(other.terms.items())
        )

    def __neg__(self) -> 'QSymExpr':
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other: 'QSymExpr') -> 'QSymExpr':
        if not isinstance(other, QSymExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Any) -> 'QSymExpr':
        """Scalar multiplication; products of expressions are not supported."""
        if isinstance(scalar, QSymExpr):
            return NotImplemented
        return self.map_coefficients(lambda c: c * scalar)

    def __rmul__(self, scalar: Any) -> 'QSymExpr':
        if isinstance(scalar, QSymExpr):
            return NotImplemented
        return self.map_coefficients(lambda c: scalar * c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymExpr):
            return NotImplemented
        if self.degree != other.degree:
            return False
        if self.basis != other.basis:
            other = other.to_basis(self.basis)
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(a) == other.coefficient(a) for a in keys)

    def map_coefficients(self, fn: Callable[[Any], Any]) -> 'QSymExpr':
        return QSymExpr(self.degree, self.basis, {a: fn(c) for a, c in self.terms.items()})

    def to_basis(self, basis: Basis | str) -> 'QSymExpr':
        basis = Basis(basis)
        if basis == self.basis:
            return self
        return m_to_f(self) if basis == Basis.F else f_to_m(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for alpha, coeff in self.items():
            name = f"{self.basis.value}{alpha}"
            text = str(coeff)
            if text == "1":
                parts.append(name)
            elif text == "-1":
                parts.append(f"-{name}")
            else:
                parts.append(f"({text}){name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QSymExpr(degree={self.degree}, basis={self.basis.value}, '{self}')"


def _require(q: QSymExpr, basis: Basis) -> None:
    if q.basis != basis:
        raise InvalidInputError(
            f"Expected an expression in the {basis.value} basis, got {q.basis.value}",
            data={"expected": basis.value, "actual": q.basis.value}
        )


def f_to_m(q: QSymExpr) -> QSymExpr:
    """Expand every F_α as the sum of M_β over refinements β ≥ α."""
    _require(q, Basis.F)
    return QSymExpr.from_items(
        q.degree,
        Basis.M,
        ((beta, coeff) for alpha, coeff in q.terms.items() for beta in alpha.refinements()),
    )


def m_to_f(q: QSymExpr) -> QSymExpr:
    """Möbius inversion: M_α = Σ_{β ≥ α} (−1)^(ℓ(β)−ℓ(α)) F_β."""
    _require(q, Basis.M)
    return QSymExpr.from_items(
        q.degree,
        Basis.F,
        (
            (beta, _signed(coeff, len(beta) - len(alpha)))
            for alpha, coeff in q.terms.items()
            for beta in alpha.refinements()
        ),
    )


def antipode(q: QSymExpr) -> QSymExpr:
    """
    S(M_α) = (−1)^ℓ(α) Σ_{β ≤ α} M_{rev β}, summing over coarsenings β.

    An F-basis input is converted to M and the result converted back.
    """
    if q.basis == Basis.F:
        return m_to_f(antipode(f_to_m(q)))
    return QSymExpr.from_items(
        q.degree,
        Basis.M,
        (
            (beta.reversed(), _signed(coeff, len(alpha)))
            for alpha, coeff in q.terms.items()
            for beta in alpha.coarsenings()
        ),
    )


def reverse(q: QSymExpr) -> QSymExpr:
    """Relabel each basis element by the reversed composition (both bases)."""
    return QSymExpr(q.degree, q.basis, {alpha.reversed(): c for alpha, c in q.terms.items()})


def signed_antipode(q: QSymExpr, scalar: Any = 1) -> QSymExpr:
    """(−1)^d · scalar · S(q), the reciprocity operator."""
    image = antipode(q)
    if q.degree % 2:
        image = -image
    return image if scalar == 1 else image.map_coefficients(lambda c: scalar * c)
