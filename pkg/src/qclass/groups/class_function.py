"""
Class functions with values in polynomials over cyclotomic fields.

A ClassFunction stores one TPoly per conjugacy class of its group. The ring
operations act pointwise; ints and Fractions act as constant functions, so
``0`` is a zero for every group. This is the coefficient ring the
quasisymmetric expressions of the equivariant invariants use.
"""
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Sequence, TypeVar

from qclass.core.errors import InvalidInputError
from qclass.groups.cyclotomic import CycNumber, TPoly
from qclass.groups.group import PermGroup
from qclass.groups.orbits import orbits
from qclass.groups.permutation import Permutation


T = TypeVar('T', bound=Hashable)

_SCALARS = (int, Fraction, CycNumber, TPoly)


class ClassFunction:
    """A function on a permutation group that is constant on conjugacy classes.

    Attributes:
        group: The owning group
        values: One TPoly per conjugacy class, in ``group.classes`` order
    """

    __slots__ = ('group', 'values')
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, group: PermGroup, values: Iterable[Any]):
        self.group = group
        self.values: tuple[TPoly, ...] = tuple(TPoly.coerce(v) for v in values)
        if len(self.values) != len(group.classes):
            raise InvalidInputError(
                f"Expected {len(group.classes)} class values, got {len(self.values)}",
                data={"classes": len(group.classes), "values": len(self.values)}
            )

    @classmethod
    def constant(cls, group: PermGroup, value: Any) -> 'ClassFunction':
        return cls(group, [value] * len(group.classes))

    @classmethod
    def from_function(cls, group: PermGroup, fn: Callable[[Permutation], Any]) -> 'ClassFunction':
        """Evaluate ``fn`` on each class representative."""
        return cls(group, [fn(c.representative) for c in group.classes])

    def __call__(self, g: Permutation) -> TPoly:
        return self.values[self.group.class_index(g)]

    def at(self, class_index: int) -> TPoly:
        return self.values[class_index]

    @property
    def degree(self) -> TPoly:
        """Value at the identity."""
        return self.values[0]

    def _other_values(self, other: Any) -> tuple[Any, ...]:
        if isinstance(other, ClassFunction):
            if other.group != self.group:
                raise InvalidInputError(
                    "Class functions belong to different groups",
                    data={"left": repr(self.group), "right": repr(other.group)}
                )
            return other.values
        if isinstance(other, _SCALARS) and not isinstance(other, bool):
            return (other,) * len(self.values)
        raise TypeError(type(other).__name__)

    def __add__(self, other: Any) -> 'ClassFunction':
        try:
            values = self._other_values(other)
        except TypeError:
            return NotImplemented
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, values)])

    __radd__ = __add__

    def __neg__(self) -> 'ClassFunction':
        return ClassFunction(self.group, [-a for a in self.values])

    def __sub__(self, other: Any) -> 'ClassFunction':
        try:
            values = self._other_values(other)
        except TypeError:
            return NotImplemented
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, values)])

    def __rsub__(self, other: Any) -> 'ClassFunction':
        return (-self) + other

    def __mul__(self, other: Any) -> 'ClassFunction':
        try:
            values = self._other_values(other)
        except TypeError:
            return NotImplemented
        return ClassFunction(self.group, [a * b for a, b in zip(self.values, values)])

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'ClassFunction':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ClassFunction(self.group, [a / other for a in self.values])
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        try:
            values = self._other_values(other)
        except (TypeError, InvalidInputError):
            return NotImplemented if not isinstance(other, ClassFunction) else False
        return all(a == b for a, b in zip(self.values, values))

    def __bool__(self) -> bool:
        return any(self.values)

    def conjugate(self) -> 'ClassFunction':
        return ClassFunction(self.group, [a.conjugate() for a in self.values])

    @property
    def t_degree(self) -> int:
        return max((v.degree for v in self.values), default=-1)

    def t_coefficient(self, k: int) -> 'ClassFunction':
        """The class function g -> [t^k] value(g)."""
        return ClassFunction(self.group, [v.coefficient(k) for v in self.values])

    def to_json(self, polynomial: bool = False) -> dict[str, Any]:
        """Map each class representative (cycle notation) to its encoded value."""
        m = self.group.exponent
        return {
            str(c.representative): v.to_json(m, polynomial)
            for c, v in zip(self.group.classes, self.values)
        }

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.values) + "]"

    def __repr__(self) -> str:
        return f"ClassFunction({self.group!r}, {self})"


def trivial_character(group: PermGroup) -> ClassFunction:
    return ClassFunction.constant(group, 1)


def sign_character(group: PermGroup) -> ClassFunction:
    return ClassFunction.from_function(group, lambda g: g.sign)


def regular_character(group: PermGroup) -> ClassFunction:
    values = [0] * len(group.classes)
    values[0] = group.order
    return ClassFunction(group, values)


def permutation_character(
    group: PermGroup,
    points: Sequence[T],
    act: Callable[[Permutation, T], T],
) -> ClassFunction:
    """
    The permutation character g -> |Fix_g(X)|.

    Args:
        group: Acting group
        points: The finite set X
        act: ``act(g, x)`` is g applied to x

    Raises:
        InvalidInputError: If a generator maps a point outside X
    """
    space = set(points)
    for g in group.generators:
        for x in points:
            if act(g, x) not in space:
                raise InvalidInputError(
                    f"Action is not closed: {g} moves a point outside the set",
                    data={"generator": str(g), "point": repr(x)}
                )
    return ClassFunction.from_function(
        group, lambda g: sum(1 for x in points if act(g, x) == x)
    )


def inner_product(chi: ClassFunction, psi: ClassFunction) -> TPoly:
    """
    (1/|G|) Σ_g conj(χ(g)) ψ(g), conjugating cyclotomic coefficients only.

    Raises:
        InvalidInputError: If the class functions belong to different groups
    """
    if chi.group != psi.group:
        raise InvalidInputError(
            "Inner product of class functions on different groups",
            data={"left": repr(chi.group), "right": repr(psi.group)}
        )
    total = TPoly()
    for c, a, b in zip(chi.group.classes, chi.values, psi.values):
        total = total + a.conjugate() * b * c.size
    return total / chi.group.order


def restrict(chi: ClassFunction, subgroup: PermGroup) -> ClassFunction:
    """
    Restriction of χ to a subgroup.

    Raises:
        InvalidInputError: If ``subgroup`` is not contained in the group of χ
    """
    if not subgroup.is_subgroup_of(chi.group):
        raise InvalidInputError(
            "Cannot restrict to a group that is not a subgroup",
            data={"group": repr(chi.group), "subgroup": repr(subgroup)}
        )
    return ClassFunction.from_function(subgroup, chi)


def induce(chi: ClassFunction, group: PermGroup) -> ClassFunction:
    """
    Induce χ from its group H to ``group``.

    χ↑(g) = (1/|H|) Σ_{k ∈ G, kgk⁻¹ ∈ H} χ(kgk⁻¹).

    Raises:
        InvalidInputError: If H is not a subgroup of ``group``
    """
    subgroup = chi.group
    if not subgroup.is_subgroup_of(group):
        raise InvalidInputError(
            "Cannot induce from a group that is not a subgroup",
            data={"group": repr(group), "subgroup": repr(subgroup)}
        )

    values = []
    for c in group.classes:
        g = c.representative
        total = TPoly()
        for k in group.elements:
            conj = k * g * k.inverse()
            if conj in subgroup:
                total = total + chi(conj)
        values.append(total / subgroup.order)
    return ClassFunction(group, values)


def orbit_count(group: PermGroup, points: Sequence[T], act: Callable[[Permutation, T], T]) -> int:
    """Number of orbits, by union-find."""
    return len(orbits(group, points, act))
