# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Decompositions inside the Fock space: the Howe decomposition, the
gl(p|q) x gl(m|n) branching of W^{Lambda(lambda)} and tensor products of
two such modules.
"""

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple

from howefock.combinat.partitions import (
    GeneralizedPartition,
    Partition,
    as_generalized,
    check_admissible,
    generalized_partitions,
    partitions_of,
    sort_key,
    split_plus_minus,
    star,
)
from howefock.core.context import HoweContext
from howefock.core.exceptions import ContextError, InadmissibleError, ShapeError
from howefock.core.utils import parallel_map
from howefock.representations.characters import CharacterContext, char_W, char_finite, char_finite_dual, character_variables
from howefock.representations.weights import Weight, hat_weight, one_vector, tilde_weight
from howefock.symfunc.hookschur import hook_condition
from howefock.symfunc.littlewood_richardson import lr_coefficient, lr_coefficient_generalized
from howefock.symfunc.series import GradedSeries

__all__ = [
    "DecompositionTable",
    "branch",
    "branch_character",
    "howe_enumerate",
    "tensor_character",
    "tensor_completeness_ceiling",
    "tensor_decompose",
]


def _label_key(label):
    if isinstance(label, tuple):
        return tuple(sort_key(part) for part in label)
    return sort_key(label)


def _label_json(label):
    if isinstance(label, tuple):
        return [list(part.parts) for part in label]
    return list(label.parts)


def _label_text(label):
    if isinstance(label, tuple):
        return " | ".join(f"({part.to_text()})" for part in label)
    return f"({label.to_text()})"


@dataclass
class DecompositionTable:
    """
    Multiplicities of highest weight labels, enumerated up to bound.

    complete is True only when no label beyond the bound can occur.
    """

    bound: int
    complete: bool
    entries: Dict[Hashable, int] = field(default_factory=dict)
    weights: Dict[Hashable, Tuple[Weight, Weight]] = field(default_factory=dict)

    def add(self, label, mult, weight=None):
        assert mult > 0, f"stored multiplicities are positive, got {mult} for {label}"
        self.entries[label] = mult
        if weight is not None:
            self.weights[label] = weight

    def __getitem__(self, label):
        return self.entries.get(label, 0)

    def __len__(self):
        return len(self.entries)

    def items(self) -> List[Tuple[Hashable, int]]:
        return sorted(self.entries.items(), key=lambda kv: _label_key(kv[0]))

    def to_json(self):
        rows = []
        for label, mult in self.items():
            row = {"label": _label_json(label), "mult": str(mult)}
            if label in self.weights:
                mn, pq = self.weights[label]
                row["weight"] = {mn.basis.value: list(mn.coords), pq.basis.value: list(pq.coords)}
            rows.append(row)
        return {"bound": self.bound, "complete": self.complete, "entries": rows}

    def to_text(self):
        lines = [f"{_label_text(label)}: {mult}" for label, mult in self.items()]
        lines.append(f"bound {self.bound}, {'complete' if self.complete else 'incomplete'}")
        return "\n".join(lines)


def howe_enumerate(m: int, n: int, p: int, q: int, d: int, bound: int) -> List[GeneralizedPartition]:
    """
    generalized partitions of length d with lambda_{m+1} <= n, lambda_{d-p} >= -q
    and sum |lambda_i| <= bound, in graded-lex order
    """
    if bound < 0:
        raise ContextError(f"bound must be non-negative, got {bound}")
    if d == 0:
        return [Partition(())]
    found = [la for la in generalized_partitions(d, bound) if check_admissible(la, m, n, p, q)]
    return sorted(found, key=sort_key)


def _require_admissible(la, ctx: HoweContext, length: int):
    la = as_generalized(la)
    if la.length != length:
        raise ShapeError(f"{la.parts} must have length {length}")
    if length and not check_admissible(la, ctx.m, ctx.n, ctx.p, ctx.q):
        raise InadmissibleError(f"{la.parts} is not admissible for (m, n, p, q) = ({ctx.m}, {ctx.n}, {ctx.p}, {ctx.q})")
    return la


def branch(la, ctx: HoweContext, bound: int) -> DecompositionTable:
    """
    W^{Lambda(lambda)} restricted to gl(p|q) x gl(m|n):
    sum over (mu, nu) of C^lambda_{mu,nu} V^{mu~}_{m|n} (x) V^{-d1+nu^}_{p|q},
    enumerated for |mu| <= bound.
    """
    la = _require_admissible(la, ctx, ctx.d)
    if bound < 0:
        raise ContextError(f"bound must be non-negative, got {bound}")
    plus, _ = split_plus_minus(la)
    complete = (ctx.p + ctx.q == 0 or ctx.m + ctx.n == 0) and bound >= plus.size
    table = DecompositionTable(bound=bound, complete=complete)
    shift = -ctx.d * one_vector(ctx)
    for size in range(bound + 1):
        dual_size = size - la.size
        if dual_size < 0:
            continue
        for mu in partitions_of(size, ctx.d):
            if not hook_condition(mu, ctx.m, ctx.n):
                continue
            for nu_star in partitions_of(dual_size, ctx.d):
                if not hook_condition(nu_star, ctx.p, ctx.q):
                    continue
                nu = star(nu_star)
                c = lr_coefficient_generalized(la, mu, nu)
                if c:
                    weight = (tilde_weight(mu, ctx.m, ctx.n, ctx), shift + hat_weight(nu, ctx.p, ctx.q, ctx))
                    table.add((mu, nu), c, weight)
    return table


def branch_character(table: DecompositionTable, ctx: CharacterContext) -> GradedSeries:
    """sum of C * ch V^{mu~}_{m|n} * ch V^{-d1+nu^}_{p|q} over a branching table"""
    result = GradedSeries.zero(*character_variables(ctx), trunc=ctx.trunc)
    for (mu, nu), c in table.items():
        dual = char_finite_dual(star(nu), ctx.p, ctx.q, ctx.d, ctx.trunc)
        result = result + dual * char_finite(mu, ctx.m, ctx.n, ctx.trunc) * c
    return result


def tensor_completeness_ceiling(mu, nu, ctx: HoweContext) -> Optional[int]:
    """
    the largest shift d that can contribute to tensor_decompose(mu, nu), or None
    when contributions are unbounded
    """
    mu, nu = as_generalized(mu), as_generalized(nu)
    if ctx.p + ctx.q == 0:
        return 0
    if ctx.m + ctx.n == 0:
        return max(0, -(mu.size + nu.size))
    return None


def tensor_decompose(mu, nu, ctx: HoweContext, d_max: Optional[int] = None, threads: int = 1) -> DecompositionTable:
    """
    W^{Lambda(mu)} (x) W^{Lambda(nu)} = sum over (lambda, d) of
    C^lambda_{mu+d1_l, nu+d1_r} W^{Lambda(lambda - d1_{l+r})}, for pairs with
    lambda a partition of length l+r, (lambda - d1) admissible, mu+d1 and nu+d1
    partitions and lambda_{l+r} = 0 when d > 0. Enumerated for d <= d_max.
    """
    mu, nu = as_generalized(mu), as_generalized(nu)
    l, r = mu.length, nu.length
    if l + r == 0:
        raise ShapeError("tensor products need l + r >= 1")
    _require_admissible(mu, ctx, l)
    _require_admissible(nu, ctx, r)
    if d_max is None:
        d_max = getattr(ctx, "trunc", None)
        if d_max is None:
            raise ContextError("tensor_decompose needs d_max or a truncation in the context")
    if d_max < 0:
        raise ContextError(f"d_max must be non-negative, got {d_max}")

    length = l + r
    lowest = max(0, -(mu.parts[-1] if l else 0), -(nu.parts[-1] if r else 0))

    def shifted_terms(d):
        mu_d, nu_d = mu.shift(d), nu.shift(d)
        terms = []
        for la in partitions_of(mu_d.size + nu_d.size, length):
            if d > 0 and la.parts[-1] != 0:
                continue
            label = la.shift(-d)
            if not check_admissible(label, ctx.m, ctx.n, ctx.p, ctx.q):
                continue
            c = lr_coefficient(la, mu_d, nu_d)
            if c:
                terms.append((label, c))
        return terms

    ceiling = tensor_completeness_ceiling(mu, nu, ctx)
    table = DecompositionTable(bound=d_max, complete=ceiling is not None and d_max >= ceiling)
    for terms in parallel_map(shifted_terms, range(lowest, d_max + 1), threads):
        for label, c in terms:
            assert label not in table.entries, f"label {label.parts} reached by two shifts"
            table.add(label, c)
    return table


def tensor_character(table: DecompositionTable, ctx: CharacterContext, length: int) -> GradedSeries:
    """sum of mult * ch W^{Lambda(label)} over a tensor table whose labels have the given length"""
    wide = ctx.with_d(length)
    result = GradedSeries.zero(*character_variables(wide), trunc=ctx.trunc)
    for label, mult in table.items():
        result = result + char_W(label, wide) * mult
    return result
