# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Highest weights attached to (generalized) partitions.

Super weights are written in the basis of the ordered index set
(gl(p|q) indices first, then gl(m|n) indices), so a gl(m+p|n+q) weight is
the concatenation of a gl(p|q) weight and a gl(m|n) weight.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from howefock.combinat.partitions import (
    angle,
    as_generalized,
    as_partition,
    check_admissible,
    split_plus_minus,
    star,
    transpose,
)
from howefock.core.context import HoweContext
from howefock.core.exceptions import InadmissibleError, ShapeError

__all__ = [
    "Lambda_of",
    "Weight",
    "WeightBasis",
    "gl_d_weight",
    "hat_weight",
    "one_vector",
    "tilde_weight",
]


class WeightBasis(str, Enum):
    GL_D = "gl_d"
    GL_MN = "gl_m|n"
    GL_PQ = "gl_p|q"
    GL_SUPER = "gl_m+p|n+q"

    def arity(self, shape: HoweContext) -> int:
        return {
            WeightBasis.GL_D: shape.d,
            WeightBasis.GL_MN: shape.m + shape.n,
            WeightBasis.GL_PQ: shape.p + shape.q,
            WeightBasis.GL_SUPER: shape.super_rank,
        }[self]


@dataclass(frozen=True, eq=False)
class Weight:
    coords: Tuple[int, ...]
    basis: WeightBasis
    shape: HoweContext

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(v) for v in self.coords))
        object.__setattr__(self, "basis", WeightBasis(self.basis))
        shape = self.shape
        if type(shape) is not HoweContext:
            shape = HoweContext(m=shape.m, n=shape.n, p=shape.p, q=shape.q, d=shape.d)
            object.__setattr__(self, "shape", shape)
        expected = self.basis.arity(self.shape)
        if len(self.coords) != expected:
            raise ShapeError(f"a {self.basis.value} weight has {expected} coordinates, got {len(self.coords)}")

    @classmethod
    def from_array(cls, array, basis, shape):
        return cls(tuple(int(v) for v in np.asarray(array).tolist()), basis, shape)

    def array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=np.int64)

    def _check(self, other):
        if not isinstance(other, Weight) or other.basis != self.basis or other.shape != self.shape:
            raise ShapeError(f"cannot combine a {self.basis.value} weight with {other!r}")

    def __add__(self, other):
        self._check(other)
        return Weight.from_array(self.array() + other.array(), self.basis, self.shape)

    def __sub__(self, other):
        self._check(other)
        return Weight.from_array(self.array() - other.array(), self.basis, self.shape)

    def __rmul__(self, k: int):
        return Weight.from_array(k * self.array(), self.basis, self.shape)

    def __neg__(self):
        return Weight.from_array(-self.array(), self.basis, self.shape)

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.basis == other.basis and self.shape == other.shape and self.coords == other.coords

    def __hash__(self):
        return hash((self.coords, self.basis))

    def concat(self, mn: "Weight") -> "Weight":
        """a gl(p|q) weight followed by a gl(m|n) weight, as a gl(m+p|n+q) weight"""
        if self.basis != WeightBasis.GL_PQ or mn.basis != WeightBasis.GL_MN:
            raise ShapeError("concat joins a gl(p|q) weight with a gl(m|n) weight")
        return Weight(self.coords + mn.coords, WeightBasis.GL_SUPER, self.shape)

    def split(self) -> Tuple["Weight", "Weight"]:
        if self.basis != WeightBasis.GL_SUPER:
            raise ShapeError("only gl(m+p|n+q) weights split into blocks")
        cut = self.shape.p + self.shape.q
        return Weight(self.coords[:cut], WeightBasis.GL_PQ, self.shape), Weight(self.coords[cut:], WeightBasis.GL_MN, self.shape)

    def to_text(self) -> str:
        if self.basis == WeightBasis.GL_SUPER:
            pq, mn = self.split()
            return f"({', '.join(map(str, pq.coords))}; {', '.join(map(str, mn.coords))})"
        if self.basis in (WeightBasis.GL_MN, WeightBasis.GL_PQ):
            cut = self.shape.m if self.basis == WeightBasis.GL_MN else self.shape.p
            return f"({', '.join(map(str, self.coords[:cut]))}; {', '.join(map(str, self.coords[cut:]))})"
        return f"({', '.join(map(str, self.coords))})"

    def to_json(self):
        return {"basis": self.basis.value, "coords": list(self.coords)}


def one_vector(shape: HoweContext) -> Weight:
    """1 = (1, ..., 1, -1, ..., -1) with p ones and q minus ones"""
    return Weight((1,) * shape.p + (-1,) * shape.q, WeightBasis.GL_PQ, shape)


def gl_d_weight(la, shape: HoweContext) -> Weight:
    return Weight(as_generalized(la).parts, WeightBasis.GL_D, shape)


def _part(parts, i):
    """1-based part, zero past the end"""
    return parts[i - 1] if i <= len(parts) else 0


def tilde_weight(la, m: int, n: int, shape: HoweContext = None) -> Weight:
    """
    (lambda_1, ..., lambda_m; <lambda'_1 - m>, ..., <lambda'_n - m>) in the gl(m|n) basis.
    """
    la = as_partition(la)
    shape = shape if shape is not None else HoweContext(m=m, n=n)
    if (shape.m, shape.n) != (m, n):
        raise ShapeError(f"weight shape {shape} does not have m={m}, n={n}")
    parts = la.parts
    if len(parts) > m and parts[m] > n:
        raise InadmissibleError(f"lambda_{m + 1} = {parts[m]} > n = {n}: {parts} has no gl({m}|{n}) weight")
    conj = transpose(la).parts
    coords = [_part(parts, i) for i in range(1, m + 1)]
    coords += [angle(_part(conj, j) - m) for j in range(1, n + 1)]
    return Weight(coords, WeightBasis.GL_MN, shape)


def hat_weight(la, p: int, q: int, shape: HoweContext = None) -> Weight:
    """
    For non-positive lambda and mu = lambda*:
    -(<mu_p - q>, ..., <mu_1 - q>, mu'_q, ..., mu'_1) in the gl(p|q) basis.
    """
    la = as_generalized(la)
    shape = shape if shape is not None else HoweContext(p=p, q=q)
    if (shape.p, shape.q) != (p, q):
        raise ShapeError(f"weight shape {shape} does not have p={p}, q={q}")
    if any(v > 0 for v in la.parts):
        raise ShapeError(f"hat weight needs non-positive parts, got {la.parts}")
    d = la.length
    if p < d and la.part(d - p) < -q:
        raise InadmissibleError(f"lambda_{d - p} = {la.part(d - p)} < -q = {-q}: {la.parts} has no gl({p}|{q}) weight")
    mu = as_partition(star(la)).parts
    conj = transpose(mu).parts
    coords = [-angle(_part(mu, i) - q) for i in range(p, 0, -1)]
    coords += [-_part(conj, j) for j in range(q, 0, -1)]
    return Weight(coords, WeightBasis.GL_PQ, shape)


def Lambda_of(la, shape: HoweContext) -> Weight:
    """
    Lambda(lambda) = (-d 1 + hat(lambda^-); tilde(lambda^+)), the gl(m+p|n+q)
    highest weight paired with V^lambda_d in the Fock space.
    """
    la = as_generalized(la)
    if la.length != shape.d:
        raise ShapeError(f"lambda {la.parts} must have length d = {shape.d}")
    if not check_admissible(la, shape.m, shape.n, shape.p, shape.q):
        raise InadmissibleError(f"{la.parts} is not admissible for (m, n, p, q) = ({shape.m}, {shape.n}, {shape.p}, {shape.q})")
    plus, minus = split_plus_minus(la)
    pq = -shape.d * one_vector(shape) + hat_weight(minus, shape.p, shape.q, shape)
    mn = tilde_weight(plus, shape.m, shape.n, shape)
    return pq.concat(mn)
