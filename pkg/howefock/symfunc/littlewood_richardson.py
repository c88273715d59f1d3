# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Littlewood-Richardson coefficients by counting LR tableaux, extended to
generalized partitions through the determinant shift.
"""

from functools import lru_cache
from typing import Dict, Tuple

from howefock.combinat.partitions import (
    GeneralizedPartition,
    Partition,
    as_generalized,
    as_partition,
    contains,
    depth,
    partitions_of,
    sort_key,
)
from howefock.core.exceptions import ShapeError

__all__ = ["lr_coefficient", "lr_coefficient_generalized", "lr_expand"]


@lru_cache(maxsize=None)
def _count_lr_tableaux(outer: Tuple[int, ...], inner: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    # rows top to bottom, each row right to left: the reverse reading word
    cells = [(i, j) for i in range(len(outer)) for j in range(outer[i] - 1, inner[i] - 1, -1)]
    grid = {}
    counts = [0] * (len(content) + 1)

    def place(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = min(i + 1, len(content))
        if (i, j + 1) in grid:
            hi = min(hi, grid[(i, j + 1)])
        lo = grid[(i - 1, j)] + 1 if (i - 1, j) in grid else 1
        total = 0
        for a in range(lo, hi + 1):
            if counts[a] == content[a - 1]:
                continue
            if a > 1 and counts[a] == counts[a - 1]:
                continue
            counts[a] += 1
            grid[(i, j)] = a
            total += place(idx + 1)
            del grid[(i, j)]
            counts[a] -= 1
        return total

    return place(0)


def lr_coefficient(la, mu, nu) -> int:
    """
    C^la_{mu,nu}, the multiplicity of V^la in V^mu (x) V^nu.

    Counts semistandard fillings of la/mu with content nu whose reverse
    reading word is a lattice word. Zero when the sizes disagree or mu is
    not contained in la.
    """
    la, mu, nu = as_partition(la), as_partition(mu), as_partition(nu)
    if la.size != mu.size + nu.size or not contains(la, mu):
        return 0
    if depth(nu) > depth(la):
        return 0
    outer = la.trim().parts
    inner = mu.parts + (0,) * max(0, len(outer) - len(mu.parts))
    inner = inner[: len(outer)]
    return _count_lr_tableaux(outer, inner, nu.trim().parts)


def lr_coefficient_generalized(la, mu, nu) -> int:
    """
    C^la_{mu,nu} for generalized partitions of a common length d, computed as
    C^{la+(k+k')1}_{mu+k1, nu+k'1} with k = max(0, -mu_d), k' = max(0, -nu_d).
    """
    la, mu, nu = as_generalized(la), as_generalized(mu), as_generalized(nu)
    if not la.length == mu.length == nu.length:
        raise ShapeError(f"generalized LR coefficient needs equal lengths, got {la.length}, {mu.length}, {nu.length}")
    if la.size != mu.size + nu.size:
        return 0
    if la.length == 0:
        return 1
    k = max(0, -mu.parts[-1])
    k_prime = max(0, -nu.parts[-1])
    shifted = la.shift(k + k_prime)
    if not shifted.is_partition():
        return 0
    return lr_coefficient(shifted, mu.shift(k), nu.shift(k_prime))


def lr_expand(mu, nu, max_length: int = None) -> Dict[Partition, int]:
    """
    s_mu * s_nu = sum_la C^la_{mu,nu} s_la, keeping la with at most max_length
    non-zero parts (default: no restriction). Labels are padded to max_length
    when it is given.
    """
    mu, nu = as_partition(mu), as_partition(nu)
    bound = depth(mu) + depth(nu)
    width = bound if max_length is None else max_length
    result = {}
    for la in partitions_of(mu.size + nu.size, min(width, bound), pad=False):
        c = lr_coefficient(la, mu, nu)
        if c:
            result[la.pad(width) if max_length is not None else la] = c
    return dict(sorted(result.items(), key=lambda kv: sort_key(kv[0])))
