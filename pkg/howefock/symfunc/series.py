# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Sparse multivariate Laurent series with exact integer coefficients,
truncated by an auxiliary grading.

A series lives on an ordered tuple of symbols. Each symbol is graded or not;
the degree of a monomial is the sum of |exponent| over graded symbols,
measured relative to an optional exponent offset (the "shift") that carries
prefactors outside the grading. trunc=None marks an exact polynomial.
"""

from collections import defaultdict
from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from howefock.core.exceptions import SeriesMismatchError, ShapeError, TruncationMismatchError

__all__ = ["GradedSeries", "VariableSet", "alphabet"]

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class VariableSet:
    """
    The alphabet name1, ..., name<count>. exponent_sign = -1 makes monomials
    built from this set use the inverse variables.
    """

    name: str
    count: int
    exponent_sign: int = 1
    graded: bool = True

    def __post_init__(self):
        if self.count < 0:
            raise ShapeError(f"variable set {self.name} needs a non-negative count, got {self.count}")
        if self.exponent_sign not in (1, -1):
            raise ShapeError(f"exponent_sign must be +1 or -1, got {self.exponent_sign}")

    @property
    def symbols(self) -> Tuple[str, ...]:
        return tuple(f"{self.name}{i}" for i in range(1, self.count + 1))

    def inverse(self):
        return replace(self, exponent_sign=-self.exponent_sign)

    def ungraded(self):
        return replace(self, graded=False)

    def monomial(self, exponents: Sequence[int]) -> Dict[str, int]:
        """exponents of x_1..x_k (before applying exponent_sign) as a symbol map"""
        if len(exponents) > self.count:
            raise ShapeError(f"{len(exponents)} exponents for {self.count} variables {self.name}")
        return {s: self.exponent_sign * e for s, e in zip(self.symbols, exponents) if e}


def alphabet(*varsets: VariableSet) -> Tuple[Tuple[str, ...], Tuple[bool, ...]]:
    """merge variable sets into (symbols, graded flags), keeping first-seen order"""
    symbols: List[str] = []
    graded: List[bool] = []
    seen = {}
    for vs in varsets:
        for s in vs.symbols:
            if s in seen:
                if graded[seen[s]] != vs.graded:
                    raise SeriesMismatchError(f"symbol {s} is graded in one variable set and not in another")
                continue
            seen[s] = len(symbols)
            symbols.append(s)
            graded.append(vs.graded)
    return tuple(symbols), tuple(graded)


def _check_single_sign(symbols, mask, *term_maps):
    """every graded symbol keeps one exponent sign across the factors of a truncated product"""
    for i in mask:
        signs = {e[i] > 0 for terms in term_maps for e in terms if e[i] != 0}
        if len(signs) > 1:
            raise SeriesMismatchError(f"graded symbol {symbols[i]} carries exponents of both signs in a truncated product")


def _combined_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is not None and b is not None and a != b:
        raise TruncationMismatchError(f"cannot combine series truncated at {a} and {b}")
    return a if a is not None else b


class GradedSeries:
    __slots__ = ("symbols", "graded", "terms", "trunc", "shift")

    def __init__(
        self,
        symbols: Sequence[str],
        graded: Sequence[bool],
        terms: Optional[Mapping[Exponent, int]] = None,
        trunc: Optional[int] = None,
        shift: Optional[Sequence[int]] = None,
    ):
        self.symbols = tuple(symbols)
        self.graded = tuple(bool(g) for g in graded)
        if len(self.symbols) != len(self.graded):
            raise ShapeError("symbols and graded flags differ in length")
        if len(set(self.symbols)) != len(self.symbols):
            raise ShapeError(f"repeated symbols in {self.symbols}")
        if trunc is not None and trunc < 0:
            raise TruncationMismatchError(f"truncation must be non-negative, got {trunc}")
        self.trunc = trunc

        shift = tuple(shift) if shift is not None else (0,) * len(self.symbols)
        # ungraded offsets are ordinary exponents
        fold = tuple(0 if g else s for s, g in zip(shift, self.graded))
        self.shift = tuple(s if g else 0 for s, g in zip(shift, self.graded))

        clean = {}
        for exp, coef in (terms or {}).items():
            if coef == 0:
                continue
            exp = tuple(exp)
            if len(exp) != len(self.symbols):
                raise ShapeError(f"exponent {exp} does not match symbols {self.symbols}")
            if any(fold):
                exp = tuple(e + f for e, f in zip(exp, fold))
            if trunc is not None and self.degree(exp) > trunc:
                continue
            clean[exp] = clean.get(exp, 0) + int(coef)
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # ------------------------------------------------------------------ builders

    @classmethod
    def zero(cls, *varsets: VariableSet, trunc: Optional[int] = None):
        symbols, graded = alphabet(*varsets)
        return cls(symbols, graded, {}, trunc)

    @classmethod
    def one(cls, *varsets: VariableSet, trunc: Optional[int] = None):
        symbols, graded = alphabet(*varsets)
        return cls(symbols, graded, {(0,) * len(symbols): 1}, trunc)

    @classmethod
    def monomial(cls, varsets: Sequence[VariableSet], exponents: Mapping[str, int], coef: int = 1, trunc: Optional[int] = None):
        symbols, graded = alphabet(*varsets)
        unknown = set(exponents) - set(symbols)
        if unknown:
            raise ShapeError(f"symbols {sorted(unknown)} are not in the variable sets")
        return cls(symbols, graded, {tuple(exponents.get(s, 0) for s in symbols): coef}, trunc)

    @classmethod
    def geometric(cls, varsets: Sequence[VariableSet], exponents: Mapping[str, int], trunc: int):
        """1 / (1 - m) = 1 + m + m^2 + ... truncated at trunc, for a monomial m of positive degree"""
        if trunc is None:
            raise TruncationMismatchError("a geometric series needs a truncation")
        base = cls.monomial(varsets, exponents, trunc=None)
        (step,) = base.terms.keys()
        unit = base.degree(step)
        if unit == 0:
            raise SeriesMismatchError(f"geometric series of the degree zero monomial {dict(exponents)}")
        terms = {tuple(e * k for e in step): 1 for k in range(trunc // unit + 1)}
        return cls(base.symbols, base.graded, terms, trunc)

    @classmethod
    def binomial(cls, varsets: Sequence[VariableSet], exponents: Mapping[str, int], trunc: Optional[int] = None):
        """1 + m"""
        base = cls.monomial(varsets, exponents, trunc=None)
        (step,) = base.terms.keys()
        return cls(base.symbols, base.graded, {(0,) * len(step): 1, step: 1}, trunc)

    # ------------------------------------------------------------------ grading

    def degree(self, exp: Exponent) -> int:
        return sum(abs(e) for e, g in zip(exp, self.graded) if g)

    def degree_of_absolute(self, exp: Exponent) -> int:
        return self.degree(tuple(e - s for e, s in zip(exp, self.shift)))

    def truncated(self, trunc: int):
        if self.trunc is not None and trunc > self.trunc:
            raise TruncationMismatchError(f"series known up to degree {self.trunc} cannot be truncated at {trunc}")
        return GradedSeries(self.symbols, self.graded, self.terms, trunc, self.shift)

    def with_trunc(self, trunc: Optional[int]):
        """attach a truncation to an exact polynomial (identity when already equal)"""
        if self.trunc == trunc:
            return self
        return self.truncated(trunc)

    def with_prefactor(self, exponents: Mapping[str, int]):
        """multiply by a monomial carried outside the grading"""
        missing = [s for s in exponents if s not in self.symbols]
        if missing:
            raise ShapeError(f"prefactor symbols {missing} are not in the series")
        # the constructor folds the ungraded part of the offset into the terms
        shift = tuple(s + exponents.get(sym, 0) for sym, s in zip(self.symbols, self.shift))
        return GradedSeries(self.symbols, self.graded, self.terms, self.trunc, shift)

    # ------------------------------------------------------------------ alignment

    def _reindex(self, symbols: Sequence[str]) -> Tuple[Dict[Exponent, int], Exponent]:
        position = [self.symbols.index(s) if s in self.symbols else None for s in symbols]
        terms = {tuple(exp[i] if i is not None else 0 for i in position): c for exp, c in self.terms.items()}
        shift = tuple(self.shift[i] if i is not None else 0 for i in position)
        return terms, shift

    def _align(self, other: "GradedSeries"):
        symbols = list(self.symbols)
        graded = list(self.graded)
        for s, g in zip(other.symbols, other.graded):
            if s in symbols:
                if graded[symbols.index(s)] != g:
                    raise SeriesMismatchError(f"symbol {s} is graded in one series and not in the other")
            else:
                symbols.append(s)
                graded.append(g)
        if tuple(symbols) == self.symbols and tuple(symbols) == other.symbols:
            return self.symbols, self.graded, (self.terms, self.shift), (other.terms, other.shift)
        return tuple(symbols), tuple(graded), self._reindex(symbols), other._reindex(symbols)

    def reordered(self, symbols: Sequence[str]):
        """the same series presented on the given symbol order (a superset of the current symbols)"""
        missing = set(self.symbols) - set(symbols)
        if missing:
            raise ShapeError(f"reordering drops symbols {sorted(missing)}")
        terms, shift = self._reindex(symbols)
        graded = []
        for s in symbols:
            graded.append(self.graded[self.symbols.index(s)] if s in self.symbols else True)
        return GradedSeries(symbols, graded, terms, self.trunc, shift)

    # ------------------------------------------------------------------ arithmetic

    def _as_series(self, other):
        if isinstance(other, GradedSeries):
            return other
        if isinstance(other, int):
            return GradedSeries(self.symbols, self.graded, {(0,) * len(self.symbols): other} if other else {}, None)
        return NotImplemented

    def __add__(self, other):
        other = self._as_series(other)
        if other is NotImplemented:
            return other
        symbols, graded, (ta, sa), (tb, sb) = self._align(other)
        trunc = _combined_trunc(self.trunc, other.trunc)
        if sa != sb:
            if not tb:
                sb = sa
            elif not ta:
                sa = sb
            else:
                raise SeriesMismatchError(f"cannot add series with prefactors {sa} and {sb}")
        terms = defaultdict(int, ta)
        for exp, c in tb.items():
            terms[exp] += c
        return GradedSeries(symbols, graded, terms, trunc, sa)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self.__add__(other)

    def __neg__(self):
        return GradedSeries(self.symbols, self.graded, {e: -c for e, c in self.terms.items()}, self.trunc, self.shift)

    def __sub__(self, other):
        other = self._as_series(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedSeries(self.symbols, self.graded, {e: c * other for e, c in self.terms.items()}, self.trunc, self.shift)
        if not isinstance(other, GradedSeries):
            return NotImplemented
        symbols, graded, (ta, sa), (tb, sb) = self._align(other)
        trunc = _combined_trunc(self.trunc, other.trunc)
        shift = tuple(a + b for a, b in zip(sa, sb))
        mask = [i for i, g in enumerate(graded) if g]
        if trunc is not None:
            _check_single_sign(symbols, mask, ta, tb)
        deg_b = {e: sum(abs(e[i]) for i in mask) for e in tb}
        terms = defaultdict(int)
        for ea, ca in ta.items():
            da = sum(abs(ea[i]) for i in mask)
            for eb, cb in tb.items():
                if trunc is not None and da + deg_b[eb] > trunc:
                    continue
                terms[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
        return GradedSeries(symbols, graded, terms, trunc, shift)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise SeriesMismatchError("negative powers are not supported")
        result = GradedSeries(self.symbols, self.graded, {(0,) * len(self.symbols): 1}, self.trunc)
        for _ in range(k):
            result = result * self
        return result

    # ------------------------------------------------------------------ comparison

    def absolute_terms(self) -> Dict[Exponent, int]:
        return {tuple(e + s for e, s in zip(exp, self.shift)): c for exp, c in self.terms.items()}

    def __eq__(self, other):
        if isinstance(other, int):
            return self.absolute_terms() == ({(0,) * len(self.symbols): other} if other else {})
        if not isinstance(other, GradedSeries):
            return NotImplemented
        if self.trunc != other.trunc:
            raise TruncationMismatchError(f"cannot compare series truncated at {self.trunc} and {other.trunc}")
        symbols, _, (ta, sa), (tb, sb) = self._align(other)
        abs_a = {tuple(e + s for e, s in zip(exp, sa)): c for exp, c in ta.items()}
        abs_b = {tuple(e + s for e, s in zip(exp, sb)): c for exp, c in tb.items()}
        return abs_a == abs_b

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exponents) -> int:
        """coefficient of an absolute exponent given as a symbol map or a tuple in symbol order"""
        if isinstance(exponents, Mapping):
            exp = tuple(exponents.get(s, 0) for s in self.symbols)
        else:
            exp = tuple(exponents)
        rel = tuple(e - s for e, s in zip(exp, self.shift))
        return self.terms.get(rel, 0)

    def items_absolute(self) -> List[Tuple[Exponent, int]]:
        """(absolute exponent, coefficient) pairs, by degree then lexicographically descending"""
        items = [(tuple(e + s for e, s in zip(exp, self.shift)), c, self.degree(exp)) for exp, c in self.terms.items()]
        items.sort(key=lambda t: (t[2], tuple(-v for v in t[0])))
        return [(e, c) for e, c, _ in items]

    def leading_exponent(self, order: Optional[Sequence[str]] = None) -> Optional[Exponent]:
        """lexicographically largest absolute exponent, read in the given symbol order"""
        if not self.terms:
            return None
        order = tuple(order) if order is not None else self.symbols
        index = [self.symbols.index(s) if s in self.symbols else None for s in order]
        best = None
        for exp in self.absolute_terms():
            key = tuple(exp[i] if i is not None else 0 for i in index)
            if best is None or key > best:
                best = key
        return best

    def first_difference(self, other: "GradedSeries") -> Optional[Dict[str, object]]:
        """the first absolute exponent (by degree, then lex) where two series differ"""
        symbols, graded, (ta, sa), (tb, sb) = self._align(other)
        abs_a = {tuple(e + s for e, s in zip(exp, sa)): c for exp, c in ta.items()}
        abs_b = {tuple(e + s for e, s in zip(exp, sb)): c for exp, c in tb.items()}
        keys = [k for k in set(abs_a) | set(abs_b) if abs_a.get(k, 0) != abs_b.get(k, 0)]
        if not keys:
            return None

        def order(k):
            return (sum(abs(v - s) for v, s, g in zip(k, sa, graded) if g), tuple(-v for v in k))

        first = min(keys, key=order)
        return {
            "monomial": _format_monomial(symbols, first) or "1",
            "left": abs_a.get(first, 0),
            "right": abs_b.get(first, 0),
        }

    # ------------------------------------------------------------------ output

    def to_text(self) -> str:
        pieces = []
        for exp, coef in self.items_absolute():
            mono = _format_monomial(self.symbols, exp)
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
        text = " ".join(pieces) if pieces else "0"
        if self.trunc is not None:
            text += f" + O(deg {self.trunc + 1})"
        return text

    def __repr__(self):
        return f"GradedSeries({self.to_text()})"

    def to_json(self) -> Dict[str, object]:
        return {
            "vars": list(self.symbols),
            "graded": list(self.graded),
            "trunc": self.trunc,
            "shift": list(self.shift),
            "terms": [{"exp": list(exp), "coef": str(coef)} for exp, coef in self.items_absolute()],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, object]):
        symbols = tuple(payload["vars"])
        graded = tuple(payload.get("graded", [True] * len(symbols)))
        shift = tuple(payload.get("shift", [0] * len(symbols)))
        terms = {}
        for term in payload["terms"]:
            exp = tuple(int(v) - s for v, s in zip(term["exp"], shift))
            terms[exp] = int(term["coef"])
        return cls(symbols, graded, terms, payload.get("trunc"), shift)


def _format_monomial(symbols: Iterable[str], exp: Exponent) -> str:
    factors = []
    for s, e in zip(symbols, exp):
        if e == 0:
            continue
        factors.append(s if e == 1 else f"{s}^{e}")
    return "*".join(factors)
