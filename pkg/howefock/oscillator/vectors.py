# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Determinantal highest weight vectors in C[x, y, eta, zeta].

Determinants are expanded by the signed sum over permutations with the
factors of each term multiplied in row order; the entries may be Grassmann
generators, so no row reduction is ever used.
"""

from itertools import permutations
from typing import List, Sequence

from sympy.combinatorics import Permutation

from howefock.combinat.partitions import (
    as_generalized,
    as_partition,
    check_admissible,
    split_plus_minus,
    star,
    transpose,
)
from howefock.core.context import HoweContext
from howefock.core.exceptions import ContextError, InadmissibleError, ShapeError
from howefock.oscillator.superpoly import FockGenerators, SuperPolynomial, fock_generators

__all__ = [
    "box_lambda",
    "delta",
    "delta_kr",
    "delta_lambda",
    "delta_star",
    "delta_star_kr",
    "delta_star_lambda",
    "generator_determinant",
]


def _gens(ctx: HoweContext) -> FockGenerators:
    return fock_generators(HoweContext(m=ctx.m, n=ctx.n, p=ctx.p, q=ctx.q, d=ctx.d))


def generator_determinant(gens: FockGenerators, rows: Sequence[Sequence[int]]) -> SuperPolynomial:
    """sum over sigma of sign(sigma) a_1^{sigma(1)} ... a_r^{sigma(r)}, entries given as generator positions"""
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ShapeError("determinant rows must form a square matrix")
    total = SuperPolynomial.zero(gens)
    for perm in permutations(range(size)):
        term = SuperPolynomial.one(gens)
        for i, j in enumerate(perm):
            term = term * SuperPolynomial.generator(gens, rows[i][j])
            if term.is_zero():
                break
        total = total + term * (Permutation(list(perm)).signature() if size > 1 else 1)
    return total


def delta(r: int, ctx: HoweContext) -> SuperPolynomial:
    """Delta_r = det (x_j^i), 1 <= i, j <= r"""
    if not 1 <= r <= min(ctx.d, ctx.m):
        raise ContextError(f"Delta_{r} needs 1 <= r <= min(d, m) = {min(ctx.d, ctx.m)}")
    gens = _gens(ctx)
    return generator_determinant(gens, [[gens.x(j, i) for j in range(1, r + 1)] for i in range(1, r + 1)])


def delta_kr(k: int, r: int, ctx: HoweContext) -> SuperPolynomial:
    """
    Delta_{k,r}: rows (x_j^1, ..., x_j^r) for j = 1..m, followed by r - m
    copies of the row (eta_k^1, ..., eta_k^r).
    """
    if not ctx.m < r <= ctx.d or not 1 <= k <= ctx.n:
        raise ContextError(f"Delta_{{{k},{r}}} needs m < r <= d and 1 <= k <= n for {ctx}")
    gens = _gens(ctx)
    rows = [[gens.x(j, c) for c in range(1, r + 1)] for j in range(1, ctx.m + 1)]
    rows += [[gens.eta(k, c) for c in range(1, r + 1)] for _ in range(r - ctx.m)]
    return generator_determinant(gens, rows)


def delta_lambda(la, ctx: HoweContext) -> SuperPolynomial:
    """
    Delta_lambda = Delta_{lambda'_1} ... Delta_{lambda'_{lambda_1}} when lambda'_1 <= m, and
    prod_{k <= lambda_{m+1}} Delta_{k, lambda'_k} prod_{j > lambda_{m+1}} Delta_{lambda'_j} otherwise.
    """
    la = as_partition(la).trim()
    if la.length > ctx.d:
        raise ShapeError(f"{la.parts} has more than d = {ctx.d} parts")
    if la.length > ctx.m and la.parts[ctx.m] > ctx.n:
        raise InadmissibleError(f"{la.parts} violates lambda_{ctx.m + 1} <= {ctx.n}")
    conj = transpose(la).parts
    result = SuperPolynomial.one(_gens(ctx))
    if not conj:
        return result
    if conj[0] <= ctx.m:
        for col in conj:
            result = result * delta(col, ctx)
        return result
    hook = la.parts[ctx.m]
    for k in range(1, hook + 1):
        result = result * delta_kr(k, conj[k - 1], ctx)
    for col in conj[hook:]:
        result = result * delta(col, ctx)
    return result


def delta_star(r: int, ctx: HoweContext) -> SuperPolynomial:
    """Delta*_r: row i is (y_p^{d+1-i}, y_{p-1}^{d+1-i}, ..., y_{p-r+1}^{d+1-i})"""
    if not 1 <= r <= min(ctx.d, ctx.p):
        raise ContextError(f"Delta*_{r} needs 1 <= r <= min(d, p) = {min(ctx.d, ctx.p)}")
    gens = _gens(ctx)
    rows = [[gens.y(ctx.p - c, ctx.d + 1 - i) for c in range(r)] for i in range(1, r + 1)]
    return generator_determinant(gens, rows)


def delta_star_kr(k: int, r: int, ctx: HoweContext) -> SuperPolynomial:
    """Delta*_{k,r} = zeta_k^d zeta_k^{d-1} ... zeta_k^{d-r+1}"""
    if not 1 <= k <= ctx.q or not 1 <= r <= ctx.d:
        raise ContextError(f"Delta*_{{{k},{r}}} needs 1 <= k <= q and 1 <= r <= d for {ctx}")
    gens = _gens(ctx)
    result = SuperPolynomial.one(gens)
    for l in range(ctx.d, ctx.d - r, -1):
        result = result * SuperPolynomial.generator(gens, gens.zeta(k, l))
    return result


def delta_star_lambda(la, ctx: HoweContext) -> SuperPolynomial:
    """
    For non-positive lambda with mu = lambda*: prod_{k <= mu_1} Delta*_{q+1-k, mu'_k} when
    mu_1 <= q, and prod_{k <= q} Delta*_{q+1-k, mu'_k} prod_{q < l <= mu_1} Delta*_{mu'_l} otherwise.
    """
    la = as_generalized(la)
    if la.length != ctx.d:
        raise ShapeError(f"{la.parts} must have length d = {ctx.d}")
    if any(v > 0 for v in la.parts):
        raise ShapeError(f"Delta*_lambda needs non-positive parts, got {la.parts}")
    mu = as_partition(star(la)).trim().parts
    if len(mu) > ctx.p and mu[ctx.p] > ctx.q:
        raise InadmissibleError(f"{la.parts} violates lambda_{{d-p}} >= -q for {ctx}")
    conj = transpose(mu).parts
    result = SuperPolynomial.one(_gens(ctx))
    if not conj:
        return result
    for k in range(1, min(len(conj), ctx.q) + 1):
        result = result * delta_star_kr(ctx.q + 1 - k, conj[k - 1], ctx)
    for col in conj[ctx.q :]:
        result = result * delta_star(col, ctx)
    return result


def box_lambda(la, ctx: HoweContext) -> SuperPolynomial:
    """the joint highest weight vector Delta*_{lambda^-} Delta_{lambda^+}"""
    la = as_generalized(la)
    if la.length != ctx.d:
        raise ShapeError(f"{la.parts} must have length d = {ctx.d}")
    if ctx.d and not check_admissible(la, ctx.m, ctx.n, ctx.p, ctx.q):
        raise InadmissibleError(f"{la.parts} is not admissible for (m, n, p, q) = ({ctx.m}, {ctx.n}, {ctx.p}, {ctx.q})")
    plus, minus = split_plus_minus(la)
    return delta_star_lambda(minus, ctx) * delta_lambda(plus, ctx)
