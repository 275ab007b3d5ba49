"""
Principal specialization: quasisymmetric expressions to polynomials in n.

Setting x_1 = ... = x_n = 1 and x_i = 0 for i > n sends M_α to binom(n, ℓ(α)),
so a degree-d expression becomes Σ_i f_i binom(n, i). The f-vector is stored
with coefficients in the same ring as the expression.
"""
from math import comb
from typing import Any, Callable, Optional, Sequence

from qclass.core.errors import InvalidInputError
from qclass.qsym.expr import Basis, QSymExpr, f_to_m


def generalized_binomial(n: int, k: int) -> int:
    """binom(n, k) for any integer n, with binom(−n, k) = (−1)^k binom(n+k−1, k)."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    value = comb(-n + k - 1, k)
    return -value if k % 2 else value


def _sum(values: Sequence[Any]) -> Any:
    total: Any = 0
    for v in values:
        total = total + v
    return total


class PolyInBinomials:
    """A polynomial p(x) = Σ_{i=0}^{d} f_i binom(x, i).

    Attributes:
        degree: d
        f: The f-vector (f_0, ..., f_d)
    """

    __slots__ = ('degree', 'f')

    def __init__(self, degree: int, f: Sequence[Any]):
        if len(f) != degree + 1:
            raise InvalidInputError(
                f"A degree-{degree} f-vector needs {degree + 1} entries, got {len(f)}",
                data={"degree": degree, "length": len(f)}
            )
        self.degree = degree
        self.f = tuple(f)

    def evaluate(self, n: int) -> Any:
        """p(n) for any integer n."""
        return _sum([self.f[i] * generalized_binomial(n, i) for i in range(self.degree + 1)])

    def __call__(self, n: int) -> Any:
        return self.evaluate(n)

    def series(self, count: int) -> list[Any]:
        """[p(0), p(1), ..., p(count − 1)]."""
        return [self.evaluate(m) for m in range(count)]

    def h_vector(self) -> list[Any]:
        """
        The h-vector: Σ_{m≥0} p(m) t^m = h(t) / (1 − t)^(d+1).

        Computed from values, h_k = Σ_j (−1)^j binom(d+1, j) p(k − j).
        """
        d = self.degree
        values = self.series(d + 1)
        return [
            _sum([
                values[k - j] * (-comb(d + 1, j) if j % 2 else comb(d + 1, j))
                for j in range(k + 1)
            ])
            for k in range(d + 1)
        ]

    def map(self, fn: Callable[[Any], Any]) -> 'PolyInBinomials':
        return PolyInBinomials(self.degree, [fn(c) for c in self.f])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyInBinomials):
            return NotImplemented
        return self.degree == other.degree and all(a == b for a, b in zip(self.f, other.f))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PolyInBinomials(degree={self.degree}, f={[str(c) for c in self.f]})"


def principal_specialization(q: QSymExpr) -> PolyInBinomials:
    """f_i = Σ_{ℓ(α) = i} [M_α] q; F-basis input is expanded first."""
    if q.basis == Basis.F:
        q = f_to_m(q)
    f: list[Any] = [0] * (q.degree + 1)
    for alpha, coeff in q.terms.items():
        f[len(alpha)] = f[len(alpha)] + coeff
    return PolyInBinomials(q.degree, f)


def h_polynomial(q: QSymExpr) -> list[Any]:
    """h_i = Σ_{ℓ(α) = i} [F_α] q; M-basis input is converted first."""
    q = q.to_basis(Basis.F)
    h: list[Any] = [0] * (q.degree + 1)
    for alpha, coeff in q.terms.items():
        h[len(alpha)] = h[len(alpha)] + coeff
    return h


def negate_variable(p: PolyInBinomials) -> PolyInBinomials:
    """
    The polynomial q with q(n) = p(−n).

    Uses binom(−x, i) = (−1)^i Σ_{j=1}^{i} binom(i−1, i−j) binom(x, j) for i ≥ 1.
    """
    q: list[Any] = [p.f[0]] + [0] * p.degree
    for i in range(1, p.degree + 1):
        for j in range(1, i + 1):
            scale = comb(i - 1, i - j)
            term = p.f[i] * (-scale if i % 2 else scale)
            q[j] = q[j] + term
    return PolyInBinomials(p.degree, q)


def is_unimodal(sequence: Sequence[Any], leq: Optional[Callable[[Any, Any], bool]] = None) -> bool:
    """
    Whether the sequence weakly rises to a peak and then weakly falls.

    ``leq`` defaults to ``<=``; pass an order on class functions to test
    unimodality in that order.
    """
    leq = leq or (lambda a, b: a <= b)
    i = 0
    while i + 1 < len(sequence) and leq(sequence[i], sequence[i + 1]):
        i += 1
    while i + 1 < len(sequence) and leq(sequence[i + 1], sequence[i]):
        i += 1
    return i >= len(sequence) - 1
