# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Characters of V^{lambda~}_{m|n}, V^{-d1+lambda^}_{p|q} and W^{Lambda(lambda)}
as truncated Laurent series in the formal exponentials

    y_r = e^{eps_r} (r <= p), zeta_s = e^{eps_{p+s}}, x_i, eta_j,

graded so that x_i, eta_j, y_r^-1 and zeta_s^-1 have degree 1. The prefactor
(y_1 ... y_p)^-d (zeta_1 ... zeta_q)^d sits outside the grading.
"""

from dataclasses import dataclass
from typing import Tuple

from howefock.combinat.partitions import (
    as_generalized,
    as_partition,
    check_admissible,
    partitions_of,
    partitions_up_to,
    star,
)
from howefock.core.context import HoweContext
from howefock.core.exceptions import ContextError, InadmissibleError, ShapeError
from howefock.core.utils import parallel_map
from howefock.representations.weights import Weight, WeightBasis
from howefock.symfunc.hookschur import hook_condition, hook_schur_skew
from howefock.symfunc.littlewood_richardson import lr_coefficient_generalized
from howefock.symfunc.schur import schur_laurent
from howefock.symfunc.series import GradedSeries, VariableSet

__all__ = [
    "CharacterContext",
    "char_W",
    "char_finite",
    "char_finite_dual",
    "character_variables",
    "fock_character",
    "howe_character_sum",
    "leading_weight",
    "prefactor",
]


@dataclass(frozen=True)
class CharacterContext(HoweContext):
    """(m, n, p, q, d) together with the truncation degree N of every character series"""

    trunc: int = 0

    def __post_init__(self):
        super().__post_init__()
        if not isinstance(self.trunc, int) or isinstance(self.trunc, bool) or self.trunc < 0:
            raise ContextError(f"truncation must be a non-negative integer, got {self.trunc!r}")
        if self.m + self.n + self.p + self.q == 0:
            raise ContextError("characters need m + n >= 1 or p + q >= 1")


def character_variables(ctx: HoweContext) -> Tuple[VariableSet, VariableSet, VariableSet, VariableSet]:
    """(y, zeta, x, eta) in the order of the super index set; y and zeta enter inverted"""
    return (
        VariableSet("y", ctx.p, exponent_sign=-1),
        VariableSet("zeta", ctx.q, exponent_sign=-1),
        VariableSet("x", ctx.m),
        VariableSet("eta", ctx.n),
    )


def prefactor(ctx: HoweContext):
    """exponents of (y_1 ... y_p)^-d (zeta_1 ... zeta_q)^d"""
    y, zeta, _, _ = character_variables(ctx)
    exps = {s: -ctx.d for s in y.symbols}
    exps.update({s: ctx.d for s in zeta.symbols})
    return exps


def char_finite(la, m: int, n: int, trunc: int = None) -> GradedSeries:
    """ch V^{lambda~}_{m|n} = HS_lambda(x; eta)"""
    la = as_partition(la)
    if not hook_condition(la, m, n):
        raise InadmissibleError(f"{la.parts} violates lambda_{m + 1} <= {n}")
    _, _, x, eta = character_variables(HoweContext(m=m, n=n))
    return hook_schur_skew(la, x, eta, trunc)


def char_finite_dual(la, p: int, q: int, d: int, trunc: int = None) -> GradedSeries:
    """ch V^{-d1+lambda*^}_{p|q} = (y_1 ... y_p)^-d (zeta_1 ... zeta_q)^d HS_lambda(y^-1; zeta^-1)"""
    la = as_partition(la)
    if not hook_condition(la, p, q):
        raise InadmissibleError(f"{la.parts} violates lambda_{p + 1} <= {q}")
    shape = HoweContext(p=p, q=q, d=d)
    y, zeta, _, _ = character_variables(shape)
    series = hook_schur_skew(la, y, zeta, trunc)
    return series.with_prefactor(prefactor(shape))


def _band(la, ctx: CharacterContext):
    """pairs (mu, nu) of partitions of length d with |mu| - |nu| = sum(lambda) and |mu| + |nu| <= N"""
    total = la.size
    for nu in partitions_up_to(ctx.trunc, ctx.d):
        if not hook_condition(nu, ctx.p, ctx.q):
            continue
        size = total + nu.size
        if size < 0 or size + nu.size > ctx.trunc:
            continue
        for mu in partitions_of(size, ctx.d):
            if hook_condition(mu, ctx.m, ctx.n):
                yield mu, nu


def char_W(la, ctx: CharacterContext, threads: int = 1) -> GradedSeries:
    """
    ch W^{Lambda(lambda)} = prefactor * sum_{mu, nu} C^lambda_{mu, nu*} HS_mu(x; eta) HS_nu(y^-1; zeta^-1),
    truncated at ctx.trunc.
    """
    la = as_generalized(la)
    if la.length != ctx.d:
        raise ShapeError(f"lambda {la.parts} must have length d = {ctx.d}")
    if not check_admissible(la, ctx.m, ctx.n, ctx.p, ctx.q):
        raise InadmissibleError(f"{la.parts} is not admissible for (m, n, p, q) = ({ctx.m}, {ctx.n}, {ctx.p}, {ctx.q})")
    y, zeta, x, eta = character_variables(ctx)
    N = ctx.trunc

    def term(pair):
        mu, nu = pair
        c = lr_coefficient_generalized(la, mu, star(nu))
        if c == 0:
            return None
        return hook_schur_skew(nu, y, zeta, N) * hook_schur_skew(mu, x, eta, N) * c

    result = GradedSeries.zero(y, zeta, x, eta, trunc=N)
    for piece in parallel_map(term, list(_band(la, ctx)), threads):
        if piece is not None:
            result = result + piece
    return result.with_prefactor(prefactor(ctx))


def _fock_variables(ctx: HoweContext):
    y, zeta, x, eta = character_variables(ctx)
    return y, zeta, x, eta, VariableSet("z", ctx.d, graded=False)


def fock_character(ctx: CharacterContext) -> GradedSeries:
    """
    The character of C[x, y, eta, zeta] under gl_d x gl(m+p|n+q): the prefactor times
    prod (1 - x_i z_k)^-1 (1 + eta_j z_k) (1 - y_r^-1 z_k^-1)^-1 (1 + zeta_s^-1 z_k^-1).
    """
    y, zeta, x, eta, z = _fock_variables(ctx)
    N = ctx.trunc
    result = GradedSeries.one(y, zeta, x, eta, z, trunc=N)
    for sz in z.symbols:
        for sx in x.symbols:
            result = result * GradedSeries.geometric((x, z), {sx: 1, sz: 1}, N)
        for se in eta.symbols:
            result = result * GradedSeries.binomial((eta, z), {se: 1, sz: 1}, N)
        for sy in y.symbols:
            result = result * GradedSeries.geometric((y, z), {sy: -1, sz: -1}, N)
        for sw in zeta.symbols:
            result = result * GradedSeries.binomial((zeta, z), {sw: -1, sz: -1}, N)
    return result.with_prefactor(prefactor(ctx))


def howe_character_sum(ctx: CharacterContext, threads: int = 1) -> GradedSeries:
    """sum over admissible lambda with sum |lambda_i| <= N of s_lambda(z) ch W^{Lambda(lambda)}"""
    from howefock.representations.decomp import howe_enumerate

    y, zeta, x, eta, z = _fock_variables(ctx)

    def term(la):
        return char_W(la, ctx) * schur_laurent(la, z)

    labels = howe_enumerate(ctx.m, ctx.n, ctx.p, ctx.q, ctx.d, ctx.trunc)
    result = GradedSeries.zero(y, zeta, x, eta, z, trunc=ctx.trunc)
    for piece in parallel_map(term, labels, threads):
        result = result + piece
    return result


def leading_weight(series: GradedSeries, ctx: HoweContext) -> Weight:
    """the lexicographically largest exponent in the order y, zeta, x, eta, read as a gl(m+p|n+q) weight"""
    order = [s for vs in character_variables(ctx) for s in vs.symbols]
    lead = series.leading_exponent(order)
    if lead is None:
        raise ShapeError("the zero series has no leading weight")
    return Weight(lead, WeightBasis.GL_SUPER, ctx)
