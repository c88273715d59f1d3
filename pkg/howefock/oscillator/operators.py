# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Differential operators on C[x, y, eta, zeta] and the action of
gl_d x gl(m+p|n+q) on it.

Derivations act from the left: d/d(eta) and multiplication by eta pick up a
factor -1 for every fermion standing before eta in normal order.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from howefock.core.context import HoweContext
from howefock.core.exceptions import ContextError
from howefock.oscillator.superpoly import FockGenerators, Monomial, SuperPolynomial, fock_generators

__all__ = [
    "AlgebraElement",
    "SuperOperator",
    "bracket",
    "phi",
    "phi_combination",
    "raising_elements",
    "sigma",
    "supercommutator",
]

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]


def _apply_letter(gens: FockGenerators, letter: Letter, exp: Monomial):
    """(coefficient, exponent) of a single multiplication or derivation applied to a monomial"""
    op, pos = letter
    if gens.fermionic[pos]:
        sign = -1 if sum(exp[:pos]) % 2 else 1
        if op == "mul":
            if exp[pos]:
                return None
            return sign, exp[:pos] + (1,) + exp[pos + 1 :]
        if not exp[pos]:
            return None
        return sign, exp[:pos] + (0,) + exp[pos + 1 :]
    if op == "mul":
        return 1, exp[:pos] + (exp[pos] + 1,) + exp[pos + 1 :]
    if not exp[pos]:
        return None
    return exp[pos], exp[:pos] + (exp[pos] - 1,) + exp[pos + 1 :]


class SuperOperator:
    """
    A finite sum of coefficient * word, where a word is a product of
    multiplications ("mul", pos) and derivations ("der", pos) applied right to left.
    """

    __slots__ = ("gens", "terms")

    def __init__(self, gens: FockGenerators, terms: Sequence[Tuple[Fraction, Word]] = ()):
        self.gens = gens
        merged: Dict[Word, Fraction] = {}
        for coef, word in terms:
            word = tuple(word)
            merged[word] = merged.get(word, 0) + Fraction(coef)
        self.terms: List[Tuple[Fraction, Word]] = [(c, w) for w, c in merged.items() if c != 0]

    @classmethod
    def identity(cls, gens):
        return cls(gens, [(Fraction(1), ())])

    @classmethod
    def zero(cls, gens):
        return cls(gens)

    def parity(self) -> int:
        parities = {sum(1 for _, pos in word if self.gens.fermionic[pos]) % 2 for _, word in self.terms}
        assert len(parities) <= 1, "operator is not homogeneous"
        return parities.pop() if parities else 0

    def apply(self, poly: SuperPolynomial) -> SuperPolynomial:
        if poly.gens != self.gens:
            raise ContextError("operator and polynomial live on different generator sets")
        out: Dict[Monomial, Fraction] = {}
        for coef, word in self.terms:
            for exp, c in poly.terms.items():
                value = coef * c
                for letter in reversed(word):
                    step = _apply_letter(self.gens, letter, exp)
                    if step is None:
                        value = 0
                        break
                    factor, exp = step
                    value *= factor
                if value:
                    out[exp] = out.get(exp, 0) + value
        return SuperPolynomial(self.gens, out)

    __call__ = apply

    def __add__(self, other):
        return SuperOperator(self.gens, self.terms + other.terms)

    def __neg__(self):
        return SuperOperator(self.gens, [(-c, w) for c, w in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """composition self o other, or scaling by a number"""
        if isinstance(other, (int, Fraction)):
            return SuperOperator(self.gens, [(c * other, w) for c, w in self.terms])
        return SuperOperator(self.gens, [(ca * cb, wa + wb) for ca, wa in self.terms for cb, wb in other.terms])

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def omega(self) -> "SuperOperator":
        """the *-structure: reverse every word and swap each multiplication with its derivation"""
        swap = {"mul": "der", "der": "mul"}
        return SuperOperator(self.gens, [(c, tuple((swap[op], pos) for op, pos in reversed(w))) for c, w in self.terms])

    def __repr__(self):
        parts = []
        for c, w in self.terms:
            letters = " ".join(("" if op == "mul" else "d/d") + self.gens.name(pos) for op, pos in w)
            parts.append(f"{c}*[{letters}]")
        return "SuperOperator(" + " + ".join(parts) + ")"


def supercommutator(a: SuperOperator, b: SuperOperator) -> SuperOperator:
    """[a, b] = ab - (-1)^{|a||b|} ba"""
    sign = -1 if a.parity() * b.parity() else 1
    return a * b - (b * a) * sign


@dataclass(frozen=True)
class AlgebraElement:
    """
    A basis element: e_ij of gl_d (kind "gl_d") or E^A_B of gl(m+p|n+q) (kind "super"),
    with 1-based row and column indices.
    """

    kind: str
    row: int
    col: int

    @classmethod
    def e(cls, i, j):
        return cls("gl_d", i, j)

    @classmethod
    def E(cls, a, b):
        return cls("super", a, b)

    def check(self, ctx: HoweContext):
        top = ctx.d if self.kind == "gl_d" else ctx.super_rank
        if self.kind not in ("gl_d", "super") or not (1 <= self.row <= top and 1 <= self.col <= top):
            raise ContextError(f"{self} is out of range for {ctx}")

    def parity(self, ctx: HoweContext) -> int:
        if self.kind == "gl_d":
            return 0
        return (ctx.index_parity(self.row) + ctx.index_parity(self.col)) % 2

    def to_text(self):
        if self.kind == "gl_d":
            return f"e_{self.row}{self.col}"
        return f"E^{self.row}_{self.col}"


def _pq_generator(gens: FockGenerators, index: int, l: int) -> int:
    p = gens.ctx.p
    return gens.y(index, l) if index <= p else gens.zeta(index - p, l)


def _mn_generator(gens: FockGenerators, index: int, l: int) -> int:
    m = gens.ctx.m
    return gens.x(index, l) if index <= m else gens.eta(index - m, l)


@lru_cache(maxsize=None)
def phi(element: AlgebraElement, ctx: HoweContext) -> SuperOperator:
    """
    The differential operator realizing element on the Fock space.

    gl_d acts by sum x^i d/dx^j + eta^i d/deta^j - y^j d/dy^i - zeta^j d/dzeta^i.
    The gl(p|q) block acts by -(-1)^[b] sum d/dY_a Y_b, which carries the twist
    by -d times the supertrace; the gl(m|n) block by sum X_u d/dX_v; the
    off-diagonal blocks by double derivations and by -(-1)^[b] X_u Y_b.
    """
    ctx = HoweContext(m=ctx.m, n=ctx.n, p=ctx.p, q=ctx.q, d=ctx.d)
    element.check(ctx)
    gens = fock_generators(ctx)
    d = ctx.d
    terms: List[Tuple[Fraction, Word]] = []

    if element.kind == "gl_d":
        i, j = element.row, element.col
        for sub in range(1, ctx.m + 1):
            terms.append((Fraction(1), (("mul", gens.x(sub, i)), ("der", gens.x(sub, j)))))
        for sub in range(1, ctx.n + 1):
            terms.append((Fraction(1), (("mul", gens.eta(sub, i)), ("der", gens.eta(sub, j)))))
        for sub in range(1, ctx.p + 1):
            terms.append((Fraction(-1), (("mul", gens.y(sub, j)), ("der", gens.y(sub, i)))))
        for sub in range(1, ctx.q + 1):
            terms.append((Fraction(-1), (("mul", gens.zeta(sub, j)), ("der", gens.zeta(sub, i)))))
        return SuperOperator(gens, terms)

    a, b = element.row, element.col
    pq = ctx.p + ctx.q
    sign_b = -1 if ctx.index_parity(b) else 1
    for l in range(1, d + 1):
        if a <= pq and b <= pq:
            word = (("der", _pq_generator(gens, a, l)), ("mul", _pq_generator(gens, b, l)))
            terms.append((Fraction(-sign_b), word))
        elif a > pq and b > pq:
            word = (("mul", _mn_generator(gens, a - pq, l)), ("der", _mn_generator(gens, b - pq, l)))
            terms.append((Fraction(1), word))
        elif a <= pq:
            word = (("der", _pq_generator(gens, a, l)), ("der", _mn_generator(gens, b - pq, l)))
            terms.append((Fraction(1), word))
        else:
            word = (("mul", _mn_generator(gens, a - pq, l)), ("mul", _pq_generator(gens, b, l)))
            terms.append((Fraction(-sign_b), word))
    return SuperOperator(gens, terms)


def phi_combination(combination: Sequence[Tuple[int, AlgebraElement]], ctx: HoweContext) -> SuperOperator:
    gens = fock_generators(HoweContext(m=ctx.m, n=ctx.n, p=ctx.p, q=ctx.q, d=ctx.d))
    result = SuperOperator.zero(gens)
    for coef, element in combination:
        result = result + phi(element, ctx) * coef
    return result


def bracket(x: AlgebraElement, y: AlgebraElement, ctx: HoweContext) -> List[Tuple[int, AlgebraElement]]:
    """
    The bracket of two basis elements as a combination of basis elements.
    Elements of gl_d and gl(m+p|n+q) commute.
    """
    x.check(ctx)
    y.check(ctx)
    if x.kind != y.kind:
        return []
    out = []
    if x.kind == "gl_d":
        if x.col == y.row:
            out.append((1, AlgebraElement.e(x.row, y.col)))
        if y.col == x.row:
            out.append((-1, AlgebraElement.e(y.row, x.col)))
        return out
    sign = -1 if x.parity(ctx) * y.parity(ctx) else 1
    if x.col == y.row:
        out.append((1, AlgebraElement.E(x.row, y.col)))
    if x.row == y.col:
        out.append((-sign, AlgebraElement.E(y.row, x.col)))
    return out


def sigma(element: AlgebraElement, ctx: HoweContext) -> Tuple[int, AlgebraElement]:
    """
    The anti-linear anti-involution defining the real form:
    e_ij -> e_ji, E^a_b -> (-1)^{[a]+[b]} E^b_a on the gl(p|q) block,
    E^r_s -> E^s_r on the gl(m|n) block, and -(-1)^{[a]} E^s_a for the
    off-diagonal blocks, a being the gl(p|q) index.
    """
    element.check(ctx)
    transposed = AlgebraElement(element.kind, element.col, element.row)
    if element.kind == "gl_d":
        return 1, transposed
    pq = ctx.p + ctx.q
    a, b = element.row, element.col
    if a <= pq and b <= pq:
        return (-1 if (ctx.index_parity(a) + ctx.index_parity(b)) % 2 else 1), transposed
    if a > pq and b > pq:
        return 1, transposed
    pq_index = a if a <= pq else b
    return (1 if ctx.index_parity(pq_index) else -1), transposed


def raising_elements(ctx: HoweContext) -> List[AlgebraElement]:
    """e_ij with i < j and E^A_B with A < B"""
    out = [AlgebraElement.e(i, j) for i in range(1, ctx.d + 1) for j in range(i + 1, ctx.d + 1)]
    out += [AlgebraElement.E(a, b) for a in range(1, ctx.super_rank + 1) for b in range(a + 1, ctx.super_rank + 1)]
    return out
