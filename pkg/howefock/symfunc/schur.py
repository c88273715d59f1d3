# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Schur and skew Schur polynomials in finitely many variables, their Laurent
extension to generalized partitions, and expansion of symmetric Laurent
polynomials in the Schur basis.
"""

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Optional, Tuple

from howefock.combinat.partitions import (
    GeneralizedPartition,
    Partition,
    SkewShape,
    as_generalized,
    as_partition,
    depth,
    sort_key,
)
from howefock.core.exceptions import SeriesMismatchError, ShapeError
from howefock.symfunc.series import GradedSeries, VariableSet

__all__ = ["schur", "skew_schur", "schur_laurent", "schur_expand", "schur_product_expansion"]


def _padded(outer: Tuple[int, ...], inner: Tuple[int, ...]):
    width = max(len(outer), len(inner))
    return outer + (0,) * (width - len(outer)), inner + (0,) * (width - len(inner))


def _longest_column(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> int:
    if not outer or outer[0] == 0:
        return 0
    return max(sum(1 for a, b in zip(outer, inner) if b < c <= a) for c in range(1, outer[0] + 1))


def _horizontal_strips(outer: Tuple[int, ...], inner: Tuple[int, ...]):
    """every kappa with inner <= kappa <= outer and outer/kappa a horizontal strip"""
    bounds = []
    for i, top in enumerate(outer):
        below = outer[i + 1] if i + 1 < len(outer) else 0
        bounds.append(range(top, max(below, inner[i]) - 1, -1))

    def extend(prefix, i):
        if i == len(bounds):
            yield tuple(prefix)
            return
        for v in bounds[i]:
            yield from extend(prefix + [v], i + 1)

    yield from extend([], 0)


@lru_cache(maxsize=None)
def _skew_terms(outer: Tuple[int, ...], inner: Tuple[int, ...], k: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """monomial expansion of s_{outer/inner}(x_1..x_k) as (exponents, coefficient) pairs"""
    if outer == inner:
        return (((0,) * k, 1),)
    if k == 0 or _longest_column(outer, inner) > k:
        return ()
    size = sum(outer)
    acc = defaultdict(int)
    for kappa in _horizontal_strips(outer, inner):
        strip = size - sum(kappa)
        for exps, c in _skew_terms(kappa, inner, k - 1):
            acc[exps + (strip,)] += c
    return tuple(sorted(acc.items()))


def _as_series(terms, variables: VariableSet, trunc: Optional[int]) -> GradedSeries:
    sign = variables.exponent_sign
    symbols = variables.symbols
    return GradedSeries(
        symbols,
        (variables.graded,) * len(symbols),
        {tuple(sign * e for e in exps): c for exps, c in terms},
        trunc,
    )


def skew_schur(shape: SkewShape, variables: VariableSet, trunc: Optional[int] = None) -> GradedSeries:
    outer, inner = _padded(shape.outer.parts, shape.inner.parts)
    if variables.graded and trunc is not None and shape.size > trunc:
        return _as_series((), variables, trunc)
    return _as_series(_skew_terms(outer, inner, variables.count), variables, trunc)


def schur(la, variables: VariableSet, trunc: Optional[int] = None) -> GradedSeries:
    """
    s_lambda(x_1, ..., x_k) for a partition lambda; zero when depth(lambda) > k.
    """
    la = as_partition(la)
    if depth(la) > variables.count:
        return _as_series((), variables, trunc)
    return skew_schur(SkewShape(la, Partition(())), variables, trunc)


def schur_laurent(la, variables: VariableSet, trunc: Optional[int] = None) -> GradedSeries:
    """
    s_lambda for a generalized partition of length d in exactly d variables:
    (x_1 ... x_d)^(-k) s_{lambda + k}(x) with k = max(0, -lambda_d).
    """
    la = as_generalized(la)
    if la.is_partition():
        return schur(la, variables, trunc)
    if variables.count != la.length:
        raise ShapeError(f"a generalized partition of length {la.length} needs exactly {la.length} variables, got {variables.count}")
    k = -la.parts[-1]
    shifted = schur(la.shift(k), variables, None)
    shifted = shifted.with_prefactor({s: -k * variables.exponent_sign for s in variables.symbols})
    return shifted if trunc is None else shifted.truncated(trunc)


def schur_expand(f: GradedSeries, variables: VariableSet) -> Dict[GeneralizedPartition, int]:
    """
    Expand a symmetric Laurent polynomial in the variables as a sum of Schur
    polynomials indexed by generalized partitions of length = variables.count.
    Other symbols of f must not occur.

    Truncated input is expanded up to its truncation degree. Its graded
    exponents must have one sign per variable; a Laurent part belongs in the
    prefactor, as schur_laurent stores it. Raises SeriesMismatchError when a
    Schur polynomial of the expansion reaches past the truncation.
    """
    d = variables.count
    sign = variables.exponent_sign
    positions = [f.symbols.index(s) if s in f.symbols else None for s in variables.symbols]
    used = {i for i in positions if i is not None}
    graded = [i for i in positions if i is not None and f.graded[i]]
    if f.trunc is not None and any(sign * exp[i] < 0 for exp in f.terms for i in graded):
        raise SeriesMismatchError(
            f"truncated series has exponents of both signs in {variables.name}; carry the Laurent part as a prefactor"
        )

    residual: Dict[Tuple[int, ...], int] = {}
    for exp, coef in f.absolute_terms().items():
        if any(v != 0 for i, v in enumerate(exp) if i not in used):
            raise SeriesMismatchError(f"series involves symbols outside {variables.name}1..{variables.name}{d}")
        residual[tuple(sign * exp[i] if i is not None else 0 for i in positions)] = coef

    for i in range(d - 1):
        swapped = {e[:i] + (e[i + 1], e[i]) + e[i + 2 :]: c for e, c in residual.items()}
        if swapped != residual:
            raise SeriesMismatchError(f"series is not symmetric in {variables.name}{i + 1}, {variables.name}{i + 2}")

    if not residual:
        return {}

    k = max(0, -min(min(e) for e in residual)) if d else 0
    residual = {tuple(v + k for v in e): c for e, c in residual.items()}

    def degree(e):
        full = [0] * len(f.symbols)
        for i, v in zip(positions, e):
            if i is not None:
                full[i] = sign * (v - k)
        return f.degree_of_absolute(tuple(full))

    result: Dict[GeneralizedPartition, int] = {}
    plain = VariableSet(variables.name, d)
    while residual:
        lead = max(residual)
        if any(lead[i] < lead[i + 1] for i in range(d - 1)):
            raise SeriesMismatchError(f"no Schur expansion: leading exponent {lead} is not a partition")
        coef = residual[lead]
        label = GeneralizedPartition(tuple(v - k for v in lead)).normalized()
        for e, c in _as_series(_skew_terms(lead, (0,) * d, d), plain, None).terms.items():
            if f.trunc is not None and degree(e) > f.trunc:
                raise SeriesMismatchError(f"s_{label.parts} reaches past degree {f.trunc}; the truncated series does not determine it")
            value = residual.get(e, 0) - coef * c
            if value:
                residual[e] = value
            else:
                residual.pop(e, None)
        result[label] = result.get(label, 0) + coef

    return {la: c for la, c in sorted(result.items(), key=lambda kv: sort_key(kv[0])) if c}


def schur_product_expansion(mu, nu, k: Optional[int] = None) -> Dict[GeneralizedPartition, int]:
    """
    s_mu * s_nu expanded in the Schur basis of k variables, k = depth(mu) + depth(nu)
    by default, so that no constituent is lost.
    """
    mu, nu = as_partition(mu), as_partition(nu)
    if k is None:
        k = depth(mu) + depth(nu)
    x = VariableSet("x", k)
    return {la.trim(): c for la, c in schur_expand(schur(mu, x) * schur(nu, x), x).items()}
