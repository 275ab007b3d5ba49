"""
Dixon's method for the character table of a permutation group.

The class sums span the centre of the group algebra. Their structure
constants a_{rij} = #{x ∈ C_r : x⁻¹ z_j ∈ C_i} (z_j a representative of C_j)
give matrices N_r whose common left eigenvectors over F_p are the central
characters ω_χ. With p ≡ 1 (mod exponent) and p > 2√|G|, each ω_χ determines
χ modulo p, and the eigenvalue multiplicities of χ on every cyclic subgroup
lift χ exactly to Q(ζ_m).
"""
import logging
from math import isqrt
from typing import Any

from sympy import FiniteField, Poly, Symbol, nextprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from qclass.core.errors import IntegrityError
from qclass.core.logging import log_timing
from qclass.groups.cyclotomic import CycNumber
from qclass.groups.group import PermGroup


logger = logging.getLogger(__name__)


def class_matrices(group: PermGroup) -> list[list[list[int]]]:
    """
    Structure constants of the class sums.

    Returns:
        ``mats[r][j][i]`` = a_{rij}
    """
    classes = group.classes
    n = len(classes)
    mats = []
    for cr in classes:
        mat = [[0] * n for _ in range(n)]
        for j, cj in enumerate(classes):
            z = cj.representative
            for x in cr.elements:
                mat[j][group.class_index(x.inverse() * z)] += 1
        mats.append(mat)
    return mats


def dixon_prime(order: int, exponent: int) -> int:
    """The least prime p > 2√|G| with p ≡ 1 (mod exponent)."""
    p = 2 * isqrt(order)
    while True:
        p = int(nextprime(p))
        if (p - 1) % exponent == 0:
            return p


def eigenspace_decomposition(matrix: DomainMatrix) -> list[DomainMatrix]:
    """Left eigenspaces of a square matrix over its finite field, as row bases in rref."""
    transposed = matrix.transpose()
    field = transposed.domain
    size = transposed.shape[0]
    charpoly = Poly(transposed.charpoly(), Symbol('x'), domain=field)
    spaces = []
    for root in sorted(int(z) for z in charpoly.ground_roots()):
        shifted = transposed - DomainMatrix.diag([field(root)] * size, field)
        basis, _ = shifted.nullspace().rref()
        spaces.append(basis)
    return spaces


def _refine(spaces: list[DomainMatrix], matrix: DomainMatrix) -> list[DomainMatrix]:
    refined = []
    n = matrix.shape[0]
    for space in spaces:
        if space.shape[0] <= 1:
            refined.append(space)
            continue
        # S N = C S with C = S N[:, pivots] once S is in rref
        space, pivots = space.rref()
        restricted = space * matrix.extract(list(range(n)), list(pivots))
        for sub in eigenspace_decomposition(restricted):
            refined.append(sub * space)
    return refined


def central_characters(group: PermGroup, p: int) -> list[list[int]]:
    """
    Common left eigenvectors of the class matrices over F_p.

    Raises:
        IntegrityError: If the eigenspaces do not split into lines
    """
    field = FiniteField(p, symmetric=False)
    n = len(group.classes)
    spaces = [DomainMatrix.eye(n, field)]
    for mat in class_matrices(group):
        if len(spaces) == n:
            break
        spaces = _refine(spaces, DomainMatrix.from_list(mat, field))

    if len(spaces) != n or any(s.shape[0] != 1 for s in spaces):
        raise IntegrityError(
            "Class matrices have no common eigenbasis over F_p",
            data={"p": p, "classes": n, "spaces": [s.shape[0] for s in spaces]}
        )
    return [[int(v) % p for v in s.to_list()[0]] for s in spaces]


def _normalize(group: PermGroup, omega: list[int], p: int) -> list[int]:
    """Turn a central character into the character values modulo p."""
    sizes = group.class_sizes
    inverse = group.inverse_classes
    scale = pow(omega[0], -1, p)
    ratios = [v * scale * pow(size, -1, p) % p for v, size in zip(omega, sizes)]
    dot = sum(size * ratios[j] * ratios[inverse[j]] for j, size in enumerate(sizes)) % p
    square = group.order * pow(dot, -1, p) % p
    root = sqrt_mod(square, p)
    if root is None:
        raise IntegrityError(
            "Character degree has no square root modulo p",
            data={"p": p, "square": square}
        )
    degree = min(root, p - root)
    return [degree * r % p for r in ratios]


def _lift(group: PermGroup, values: list[int], p: int, power_maps: list[tuple[int, ...]]) -> list[CycNumber]:
    m = group.exponent
    x = pow(int(primitive_root(p)), (p - 1) // m, p)
    degree = values[0]
    lifted = []
    for j, c in enumerate(group.classes):
        order = c.representative.order
        step = m // order
        inv_order = pow(order, -1, p)
        dense = [0] * m
        for k in range(order):
            total = sum(
                values[power_maps[s][j]] * pow(x, (-k * s * step) % m, p)
                for s in range(order)
            )
            mult = total * inv_order % p
            if mult > degree:
                raise IntegrityError(
                    "Eigenvalue multiplicity out of range while lifting a character",
                    data={"class": str(c.representative), "multiplicity": mult, "degree": degree}
                )
            dense[k * step] += mult
        lifted.append(CycNumber(m, dense))
    return lifted


def dixon_characters(group: PermGroup) -> list[list[CycNumber]]:
    """
    All irreducible characters as lists of class values (unordered).

    Raises:
        IntegrityError: If an internal consistency check fails
    """
    if group.order == 1:
        return [[CycNumber(1, [1])]]

    p = dixon_prime(group.order, group.exponent)
    with log_timing(logger, "Dixon character table", {"order": group.order, "p": p}) as info:
        omegas = central_characters(group, p)
        power_maps = [group.power_map(s) for s in range(group.exponent)]
        rows: list[list[Any]] = [
            _lift(group, _normalize(group, omega, p), p, power_maps)
            for omega in omegas
        ]
        info['characters'] = len(rows)
    return rows
