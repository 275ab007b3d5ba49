"""
Exact arithmetic in cyclotomic fields and polynomials over them.

A CycNumber is an element of Q(ζ_m) stored as rational coefficients over the
power basis 1, ζ_m, ..., ζ_m^(φ(m)-1), i.e. reduced modulo the m-th
cyclotomic polynomial. Values from different fields are combined in
Q(ζ_lcm). TPoly is a polynomial in the formal variable t with CycNumber
coefficients; class functions take values in TPoly.
"""
import cmath
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import lcm
from typing import Any, Iterable, Optional, Sequence, Union

from sympy import Poly, Rational as SymRational, Symbol, cyclotomic_poly

from qclass.core.errors import InvalidInputError


Rational = Union[int, Fraction]


_X = Symbol('x')


@lru_cache(maxsize=None)
def cyclotomic_modulus(m: int) -> Poly:
    """The m-th cyclotomic polynomial Φ_m over QQ."""
    if m < 1:
        raise InvalidInputError(f"Cyclotomic order must be positive, got {m}")
    return Poly(cyclotomic_poly(m, _X), _X, domain='QQ')


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first."""
    return tuple(int(c) for c in reversed(cyclotomic_modulus(m).all_coeffs()))


def _reduce(m: int, dense: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a polynomial in ζ_m (any length) to the power basis."""
    degree = cyclotomic_modulus(m).degree()
    folded = [Fraction(0)] * m
    for k, c in enumerate(dense):
        if c:
            folded[k % m] += c
    if not any(folded[degree:]):
        return tuple(folded[:degree])
    poly = Poly([SymRational(c.numerator, c.denominator) for c in reversed(folded)], _X, domain='QQ')
    remainder = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.rem(cyclotomic_modulus(m)).all_coeffs())]
    return tuple(remainder + [Fraction(0)] * (degree - len(remainder)))


class CycNumber:
    """An exact element of the cyclotomic field Q(ζ_m).

    Attributes:
        m: Order of the root of unity ζ_m
        coeffs: Coefficients over 1, ζ_m, ..., ζ_m^(φ(m)-1)

    Examples:
        >>> w = CycNumber.zeta(3)
        >>> w * w * w == 1
        True
        >>> w + w.conjugate() == -1
        True
    """

    __slots__ = ('m', 'coeffs')
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, m: int, coeffs: Iterable[Rational] = ()):
        self.m = m
        self.coeffs = _reduce(m, [Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, m: int, coeffs: tuple[Fraction, ...]) -> 'CycNumber':
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> 'CycNumber':
        """ζ_m^k."""
        dense = [Fraction(0)] * m
        dense[k % m] = Fraction(1)
        return cls(m, dense)

    @classmethod
    def rational(cls, value: Rational, m: int = 1) -> 'CycNumber':
        return cls(m, [value])

    @staticmethod
    def coerce(value: Any, m: int = 1) -> 'CycNumber':
        if isinstance(value, CycNumber):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return CycNumber(m, [value])
        raise TypeError(f"Cannot interpret {type(value).__name__} as a cyclotomic number")

    def lift(self, target: int) -> 'CycNumber':
        """Rewrite in Q(ζ_target) via ζ_m = ζ_target^(target/m)."""
        if target == self.m:
            return self
        if target % self.m:
            raise InvalidInputError(
                f"Q(ζ_{self.m}) is not contained in Q(ζ_{target})",
                data={"m": self.m, "target": target}
            )
        step = target // self.m
        dense = [Fraction(0)] * target
        for k, c in enumerate(self.coeffs):
            dense[k * step] = c
        return CycNumber(target, dense)

    def _align(self, other: Any) -> tuple['CycNumber', 'CycNumber']:
        other = CycNumber.coerce(other, self.m)
        common = lcm(self.m, other.m)
        return self.lift(common), other.lift(common)

    def __add__(self, other: Any) -> 'CycNumber':
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        coeffs = tuple(x + y for x, y in zip_longest(a.coeffs, b.coeffs, fillvalue=Fraction(0)))
        return CycNumber._raw(a.m, coeffs)

    __radd__ = __add__

    def __neg__(self) -> 'CycNumber':
        return CycNumber._raw(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> 'CycNumber':
        try:
            return self + (-CycNumber.coerce(other, self.m))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Any) -> 'CycNumber':
        return (-self) + other

    def __mul__(self, other: Any) -> 'CycNumber':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycNumber._raw(self.m, tuple(c * other for c in self.coeffs))
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        dense = [Fraction(0)] * max(1, len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    dense[i + j] += x * y
        return CycNumber(a.m, dense)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'CycNumber':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycNumber._raw(self.m, tuple(c / other for c in self.coeffs))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, bool) or not isinstance(other, (CycNumber, int, Fraction)):
            return NotImplemented
        a, b = self._align(other)
        return all(x == y for x, y in zip_longest(a.coeffs, b.coeffs, fillvalue=Fraction(0)))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def conjugate(self) -> 'CycNumber':
        """Complex conjugation, ζ_m -> ζ_m^(-1)."""
        dense = [Fraction(0)] * self.m
        for k, c in enumerate(self.coeffs):
            dense[(-k) % self.m] += c
        return CycNumber(self.m, dense)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def is_integer(self) -> bool:
        return self.is_rational and self.to_fraction().denominator == 1

    def to_fraction(self) -> Fraction:
        """
        The value as a Fraction.

        Raises:
            InvalidInputError: If the number is not rational
        """
        if not self.is_rational:
            raise InvalidInputError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def to_complex(self) -> complex:
        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * k / self.m) for k, c in enumerate(self.coeffs)),
            0j,
        )

    def sort_key(self, m: int) -> tuple[Fraction, ...]:
        """Coefficients in Q(ζ_m), for deterministic ordering."""
        return self.lift(lcm(m, self.m)).coeffs

    def to_json(self, m: Optional[int] = None) -> Any:
        """An int or "p/q" when rational, else the trimmed coefficient list.

        The list is over powers of ζ_m when ``m`` is given (it must be a
        multiple of the field order), otherwise over powers of ζ_self.m.
        """
        if self.is_rational:
            return encode_rational(self.to_fraction())
        coeffs = list(self.lift(m).coeffs if m else self.coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        return [encode_rational(c) for c in coeffs]

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.to_fraction())
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if k == 0 else (f"z{self.m}" if k == 1 else f"z{self.m}^{k}")
            if not power:
                term = str(c)
            elif c == 1:
                term = power
            elif c == -1:
                term = "-" + power
            else:
                term = f"{c}*{power}"
            parts.append(term)
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"CycNumber({self.m}, {[str(c) for c in self.coeffs]})"


def encode_rational(value: Fraction) -> Union[int, str]:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


Scalar = Union[int, Fraction, CycNumber]


class TPoly:
    """A polynomial in t with cyclotomic coefficients.

    Attributes:
        coeffs: Coefficients of t^0, t^1, ... with no trailing zeros

    Examples:
        >>> p = TPoly([0, 4, 16, 4])
        >>> str(p)
        '4t^3+16t^2+4t'
    """

    __slots__ = ('coeffs',)
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [CycNumber.coerce(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.coeffs: tuple[CycNumber, ...] = tuple(values)

    @classmethod
    def t(cls, power: int = 1) -> 'TPoly':
        return cls([0] * power + [1])

    @staticmethod
    def coerce(value: Any) -> 'TPoly':
        if isinstance(value, TPoly):
            return value
        if isinstance(value, (int, Fraction, CycNumber)) and not isinstance(value, bool):
            return TPoly([value])
        raise TypeError(f"Cannot interpret {type(value).__name__} as a polynomial in t")

    @property
    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> CycNumber:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else CycNumber(1)

    def __add__(self, other: Any) -> 'TPoly':
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return TPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> 'TPoly':
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> 'TPoly':
        try:
            return self + (-TPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Any) -> 'TPoly':
        return (-self) + other

    def __mul__(self, other: Any) -> 'TPoly':
        if isinstance(other, (int, Fraction, CycNumber)) and not isinstance(other, bool):
            return TPoly(c * other for c in self.coeffs)
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        result: list[Any] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                result[i + j] = a * b + result[i + j]
        return TPoly(result)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'TPoly':
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TPoly(c / other for c in self.coeffs)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def conjugate(self) -> 'TPoly':
        return TPoly(c.conjugate() for c in self.coeffs)

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> CycNumber:
        return self.coefficient(0)

    def evaluate(self, t: Scalar) -> CycNumber:
        result = CycNumber(1)
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    def to_json(self, m: Optional[int] = None, polynomial: bool = False) -> Any:
        """The list of coefficient encodings, lowest power of t first.

        A constant collapses to its scalar encoding unless ``polynomial`` is set.
        """
        if self.is_constant and not polynomial:
            return self.constant().to_json(m)
        return [c.to_json(m) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            power = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            text = str(c)
            if not c.is_rational:
                text = f"({text})"
            if not power:
                term = text
            elif text == "1":
                term = power
            elif text == "-1":
                term = "-" + power
            else:
                term = text + power
            parts.append(term)
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"TPoly('{self}')"
