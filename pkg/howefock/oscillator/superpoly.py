# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
The polynomial superalgebra C[x, y, eta, zeta] with exact rational coefficients.

A monomial is an exponent tuple over the generators of FockGenerators, in the
fixed normal order zeta, eta (fermions), then x, y (bosons); within each kind
generators are ordered by (superscript, subscript). Fermionic exponents are 0
or 1 and every sign from reordering is resolved when a product is formed.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from howefock.core.context import HoweContext
from howefock.core.exceptions import ContextError, ShapeError

__all__ = ["FockGenerators", "SuperPolynomial", "fock_generators"]

Monomial = Tuple[int, ...]

KINDS = ("zeta", "eta", "x", "y")
FERMIONIC = {"zeta": True, "eta": True, "x": False, "y": False}


class FockGenerators:
    """
    The ordered generators x_i^l, eta_j^l, y_r^l, zeta_s^l with subscripts in
    1..m, 1..n, 1..p, 1..q and superscripts l in 1..d.
    """

    def __init__(self, ctx: HoweContext):
        self.ctx = HoweContext(m=ctx.m, n=ctx.n, p=ctx.p, q=ctx.q, d=ctx.d)
        counts = {"zeta": ctx.q, "eta": ctx.n, "x": ctx.m, "y": ctx.p}
        labels = []
        for kind in KINDS:
            for sup in range(1, ctx.d + 1):
                for sub in range(1, counts[kind] + 1):
                    labels.append((kind, sub, sup))
        self.labels: Tuple[Tuple[str, int, int], ...] = tuple(labels)
        self.index: Dict[Tuple[str, int, int], int] = {label: pos for pos, label in enumerate(labels)}
        self.fermionic: Tuple[bool, ...] = tuple(FERMIONIC[kind] for kind, _, _ in labels)
        self.n_fermions = sum(self.fermionic)
        self.counts = counts

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, FockGenerators) and other.ctx == self.ctx

    def __hash__(self):
        return hash(self.ctx)

    def position(self, kind: str, sub: int, sup: int) -> int:
        if not 1 <= sub <= self.counts[kind] or not 1 <= sup <= self.ctx.d:
            raise ContextError(f"generator {kind}_{sub}^{sup} does not exist for {self.ctx}")
        return self.index[(kind, sub, sup)]

    def x(self, i, l):
        return self.position("x", i, l)

    def eta(self, j, l):
        return self.position("eta", j, l)

    def y(self, r, l):
        return self.position("y", r, l)

    def zeta(self, s, l):
        return self.position("zeta", s, l)

    def name(self, pos: int) -> str:
        kind, sub, sup = self.labels[pos]
        return f"{kind}{sub}^{sup}"


@lru_cache(maxsize=None)
def fock_generators(ctx: HoweContext) -> FockGenerators:
    return FockGenerators(ctx)


def _merge(gens: FockGenerators, a: Monomial, b: Monomial) -> Optional[Tuple[int, Monomial]]:
    """(sign, exponent) of the product a * b, or None when a fermion repeats"""
    parity = 0
    seen = 0
    # every fermion of b moves left past the fermions of a standing after it
    for pos in range(gens.n_fermions - 1, -1, -1):
        if b[pos]:
            if a[pos]:
                return None
            parity += seen
        seen += a[pos]
    exp = tuple(u + v for u, v in zip(a, b))
    return (-1 if parity % 2 else 1), exp


class SuperPolynomial:
    __slots__ = ("gens", "terms")

    def __init__(self, gens: FockGenerators, terms: Optional[Mapping[Monomial, Fraction]] = None):
        self.gens = gens
        clean = {}
        for exp, coef in (terms or {}).items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            exp = tuple(exp)
            if len(exp) != len(gens):
                raise ShapeError(f"monomial {exp} does not match {len(gens)} generators")
            if any(exp[pos] > 1 for pos in range(gens.n_fermions)) or any(v < 0 for v in exp):
                raise ShapeError(f"invalid exponents {exp}")
            clean[exp] = coef
        self.terms: Dict[Monomial, Fraction] = clean

    @classmethod
    def zero(cls, gens):
        return cls(gens)

    @classmethod
    def one(cls, gens):
        return cls(gens, {(0,) * len(gens): Fraction(1)})

    @classmethod
    def generator(cls, gens, pos: int):
        exp = [0] * len(gens)
        exp[pos] = 1
        return cls(gens, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, gens, exp: Monomial, coef=1):
        return cls(gens, {tuple(exp): Fraction(coef)})

    def _check(self, other):
        if not isinstance(other, SuperPolynomial) or other.gens != self.gens:
            raise ContextError("polynomials live on different generator sets")

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            terms[exp] = terms.get(exp, 0) + coef
        return SuperPolynomial(self.gens, terms)

    def __neg__(self):
        return SuperPolynomial(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SuperPolynomial(self.gens, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms: Dict[Monomial, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                merged = _merge(self.gens, ea, eb)
                if merged is None:
                    continue
                sign, exp = merged
                terms[exp] = terms.get(exp, 0) + sign * ca * cb
        return SuperPolynomial(self.gens, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    __hash__ = None

    def degrees(self) -> List[int]:
        return sorted({sum(exp) for exp in self.terms})

    def leading(self) -> Tuple[Monomial, Fraction]:
        """the largest monomial in normal order and its coefficient"""
        if not self.terms:
            raise ShapeError("the zero polynomial has no leading monomial")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def proportional_to(self, other: "SuperPolynomial") -> bool:
        """True when self = c * other for some non-zero rational c"""
        self._check(other)
        if self.is_zero() or other.is_zero() or self.terms.keys() != other.terms.keys():
            return False
        exp, coef = self.leading()
        ratio = coef / other.terms[exp]
        return all(c == ratio * other.terms[e] for e, c in self.terms.items())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coef in self:
            factors = []
            for pos, e in enumerate(exp):
                if e:
                    factors.append(self.gens.name(pos) if e == 1 else f"({self.gens.name(pos)})^{e}")
            mono = "*".join(factors)
            magnitude = abs(coef)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(body if coef > 0 else f"-{body}")
            else:
                pieces.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"SuperPolynomial({self.to_text()})"
