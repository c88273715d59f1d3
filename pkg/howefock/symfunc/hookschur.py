# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Hook Schur functions HS_lambda(x; y) and the two Cauchy-type identities
they satisfy.
"""

from collections import defaultdict
from typing import Iterator, Optional

from howefock.combinat.partitions import Partition, SkewShape, as_partition, partitions_up_to, transpose
from howefock.core.utils import parallel_map
from howefock.symfunc.schur import schur, skew_schur
from howefock.symfunc.series import GradedSeries, VariableSet, alphabet

__all__ = [
    "cauchy_dual_lhs",
    "cauchy_dual_rhs",
    "cauchy_lhs",
    "cauchy_rhs",
    "cauchy_variables",
    "cauchy_dual_variables",
    "hook_condition",
    "hook_partitions",
    "hook_schur_skew",
    "hook_schur_tableau",
]


def hook_condition(la, m: int, n: int) -> bool:
    """lambda_{m+1} <= n, the condition for HS_lambda(x_1..x_m; y_1..y_n) to be nonzero"""
    parts = as_partition(la).parts
    return m >= len(parts) or parts[m] <= n


def _sub_partitions(parts, max_length: int) -> Iterator[Partition]:
    """partitions mu contained in parts with at most max_length rows"""
    rows = min(max_length, len(parts))

    def extend(prefix, i):
        if i == rows:
            yield Partition(tuple(prefix))
            return
        top = parts[i] if i == 0 else min(parts[i], prefix[-1])
        for v in range(top, -1, -1):
            yield from extend(prefix + [v], i + 1)

    yield from extend([], 0)


def hook_schur_skew(la, x: VariableSet, y: VariableSet, trunc: Optional[int] = None) -> GradedSeries:
    """
    HS_lambda(x; y) = sum over mu in lambda of s_mu(x) s_{lambda'/mu'}(y).
    """
    la = as_partition(la).trim()
    result = GradedSeries.zero(x, y, trunc=trunc)
    if not hook_condition(la, x.count, y.count):
        return result
    conj = transpose(la)
    for mu in _sub_partitions(la.parts, x.count):
        left = schur(mu, x, trunc)
        if left.is_zero():
            continue
        right = skew_schur(SkewShape(conj, transpose(mu)), y, trunc)
        if right.is_zero():
            continue
        result = result + left * right
    return result


def hook_schur_tableau(la, x: VariableSet, y: VariableSet, trunc: Optional[int] = None) -> GradedSeries:
    """
    HS_lambda(x; y) as a sum over (m|n)-semistandard tableaux.

    Letters x_1 < ... < x_m < y_1 < ... < y_n fill the diagram; x letters are
    weakly increasing along rows and strictly down columns, y letters strictly
    along rows and weakly down columns.
    """
    la = as_partition(la).trim()
    m, n = x.count, y.count
    cells = [(i, j) for i, row in enumerate(la.parts) for j in range(row)]
    grid = {}
    weight = [0] * (m + n)
    terms = defaultdict(int)

    def fill(idx):
        if idx == len(cells):
            terms[tuple(weight)] += 1
            return
        i, j = cells[idx]
        for a in range(m + n):
            if j > 0:
                left = grid[(i, j - 1)]
                if a < left or (a == left and a >= m):
                    continue
            if i > 0:
                above = grid[(i - 1, j)]
                if a < above or (a == above and a < m):
                    continue
            grid[(i, j)] = a
            weight[a] += 1
            fill(idx + 1)
            weight[a] -= 1
            del grid[(i, j)]

    fill(0)
    symbols, graded = alphabet(x, y)
    signs = [x.exponent_sign] * m + [y.exponent_sign] * n
    signed = {tuple(s * e for s, e in zip(signs, exp)): c for exp, c in terms.items()}
    return GradedSeries(symbols, graded, signed, trunc)


def hook_partitions(m: int, n: int, d: int, bound: int) -> Iterator[Partition]:
    """partitions with |lambda| <= bound, at most d parts and lambda_{m+1} <= n"""
    for la in partitions_up_to(bound, d, pad=False):
        if hook_condition(la, m, n):
            yield la


def cauchy_variables(m: int, n: int, d: int):
    return VariableSet("x", m, graded=False), VariableSet("eta", n, graded=False), VariableSet("z", d)


def cauchy_dual_variables(p: int, q: int, d: int):
    return (
        VariableSet("y", p, exponent_sign=-1, graded=False),
        VariableSet("zeta", q, exponent_sign=-1, graded=False),
        VariableSet("z", d, exponent_sign=-1),
    )


def _product_side(a: VariableSet, b: VariableSet, z: VariableSet, trunc: int) -> GradedSeries:
    result = GradedSeries.one(a, b, z, trunc=trunc)
    for sa in a.symbols:
        for sz in z.symbols:
            result = result * GradedSeries.geometric((a, z), {sa: a.exponent_sign, sz: z.exponent_sign}, trunc)
    for sb in b.symbols:
        for sz in z.symbols:
            result = result * GradedSeries.binomial((b, z), {sb: b.exponent_sign, sz: z.exponent_sign}, trunc)
    return result


def _schur_side(a: VariableSet, b: VariableSet, z: VariableSet, trunc: int, threads: int) -> GradedSeries:
    def term(la):
        return hook_schur_skew(la, a, b) * schur(la, z, trunc)

    pieces = parallel_map(term, list(hook_partitions(a.count, b.count, z.count, trunc)), threads)
    result = GradedSeries.zero(a, b, z, trunc=trunc)
    for piece in pieces:
        result = result + piece
    return result


def cauchy_lhs(m: int, n: int, d: int, trunc: int) -> GradedSeries:
    """prod_{i,k} (1 - x_i z_k)^-1 prod_{j,k} (1 + eta_j z_k), up to z-degree trunc"""
    return _product_side(*cauchy_variables(m, n, d), trunc)


def cauchy_rhs(m: int, n: int, d: int, trunc: int, threads: int = 1) -> GradedSeries:
    """sum over hook partitions of HS_lambda(x; eta) s_lambda(z), up to z-degree trunc"""
    return _schur_side(*cauchy_variables(m, n, d), trunc, threads)


def cauchy_dual_lhs(p: int, q: int, d: int, trunc: int) -> GradedSeries:
    return _product_side(*cauchy_dual_variables(p, q, d), trunc)


def cauchy_dual_rhs(p: int, q: int, d: int, trunc: int, threads: int = 1) -> GradedSeries:
    return _schur_side(*cauchy_dual_variables(p, q, d), trunc, threads)
