"""
Floating-point character table used as an independent check on Dixon's method.

The class matrices are diagonalized numerically through one random real
combination; character values are then rounded back to exact cyclotomic
numbers through their eigenvalue multiplicities on cyclic subgroups.

Each multiplicity must lie within _TOLERANCE (1e-6) of a nonnegative integer
or the table is rejected. Groups are capped at ``oracle_max_order`` in
LimitsConfig (default 24).
"""
import logging

import numpy as np

from qclass.core.errors import IntegrityError
from qclass.groups.cyclotomic import CycNumber
from qclass.groups.dixon import class_matrices
from qclass.groups.group import PermGroup


logger = logging.getLogger(__name__)

_TOLERANCE = 1e-6


def oracle_characters(group: PermGroup, seed: int = 0) -> list[list[CycNumber]]:
    """
    All irreducible characters via numpy eigenvectors (unordered).

    Raises:
        IntegrityError: If a multiplicity does not round to a nonnegative integer
    """
    sizes = np.array(group.class_sizes, dtype=float)
    mats = np.array(class_matrices(group), dtype=float)
    rng = np.random.default_rng(seed)
    weights = rng.standard_normal(len(mats))
    # right eigenvectors of Σ c_r N_rᵀ are the central characters
    combined = np.einsum('r,rji->ij', weights, mats)
    _, vectors = np.linalg.eig(combined)

    m = group.exponent
    power_maps = [group.power_map(s) for s in range(m)]
    rows = []
    for column in vectors.T:
        ratios = (column / column[0]) / sizes
        degree = np.sqrt(group.order / np.sum(sizes * np.abs(ratios) ** 2))
        values = degree * ratios
        rows.append(_round_character(group, values, power_maps))
    logger.debug("Oracle character table for group of order %d", group.order)
    return rows


def _round_character(group: PermGroup, values: np.ndarray, power_maps: list[tuple[int, ...]]) -> list[CycNumber]:
    m = group.exponent
    result = []
    for j, c in enumerate(group.classes):
        order = c.representative.order
        step = m // order
        dense = [0] * m
        for k in range(order):
            mult = sum(
                values[power_maps[s][j]] * np.exp(-2j * np.pi * k * s / order)
                for s in range(order)
            ) / order
            rounded = int(round(mult.real))
            if abs(mult - rounded) > _TOLERANCE or rounded < 0:
                raise IntegrityError(
                    "Numerical multiplicity is not a nonnegative integer",
                    data={"class": str(c.representative), "value": str(mult)}
                )
            dense[k * step] += rounded
        result.append(CycNumber(m, dense))
    return result
