# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

"""
Partitions and generalized partitions of a declared length d.

All positional access is 1-based. Trailing zeros are significant: two
partitions are equal only if their declared lengths agree.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from howefock.core.exceptions import ShapeError

__all__ = [
    "GeneralizedPartition",
    "Partition",
    "SkewShape",
    "angle",
    "as_generalized",
    "as_partition",
    "check_admissible",
    "contains",
    "depth",
    "generalized_partitions",
    "parse_parts",
    "partitions_of",
    "partitions_up_to",
    "sort_key",
    "split_plus_minus",
    "star",
    "transpose",
]

_PARTS_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


@dataclass(frozen=True, eq=False)
class GeneralizedPartition:
    """
    A weakly decreasing finite sequence of integers with declared length d = len(parts).
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(v) for v in self.parts)
        object.__setattr__(self, "parts", parts)
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ShapeError(f"parts must be weakly decreasing, got {parts}")

    def __eq__(self, other):
        if not isinstance(other, GeneralizedPartition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"{type(self).__name__}({self.parts})"

    @property
    def length(self):
        return len(self.parts)

    @property
    def size(self):
        """sum of the parts"""
        return sum(self.parts)

    @property
    def abs_size(self):
        """sum of the absolute values of the parts"""
        return sum(abs(v) for v in self.parts)

    def part(self, i):
        """the i-th part, 1-based"""
        if not 1 <= i <= len(self.parts):
            raise ShapeError(f"index {i} outside 1..{len(self.parts)} of {self.parts}")
        return self.parts[i - 1]

    def is_partition(self):
        return all(v >= 0 for v in self.parts)

    def pad(self, d):
        """extend with zeros to declared length d"""
        if d < len(self.parts):
            raise ShapeError(f"cannot pad {self.parts} to shorter length {d}")
        if self.parts and self.parts[-1] < 0:
            raise ShapeError(f"padding {self.parts} with zeros breaks monotonicity")
        return type(self)(self.parts + (0,) * (d - len(self.parts)))

    def trim(self):
        """drop trailing zeros"""
        parts = list(self.parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return type(self)(tuple(parts))

    def shift(self, k):
        """lambda + k * (1, ..., 1)"""
        return GeneralizedPartition(tuple(v + k for v in self.parts)).normalized()

    def normalized(self):
        """return a Partition when all parts are non-negative"""
        if self.is_partition() and not isinstance(self, Partition):
            return Partition(self.parts)
        return self

    def to_text(self):
        return ",".join(str(v) for v in self.parts)

    def to_json(self):
        return {"parts": list(self.parts)}


@dataclass(frozen=True, eq=False)
class Partition(GeneralizedPartition):
    """
    A generalized partition with non-negative parts.
    """

    def __post_init__(self):
        super().__post_init__()
        if self.parts and self.parts[-1] < 0:
            raise ShapeError(f"partition parts must be non-negative, got {self.parts}")


@dataclass(frozen=True)
class SkewShape:
    """
    The skew diagram outer/inner; shorter shapes are compared as if padded by zeros.
    """

    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ShapeError(f"{self.inner.parts} is not contained in {self.outer.parts}")

    @property
    def size(self):
        return self.outer.size - self.inner.size


def as_partition(value) -> Partition:
    """coerce a sequence or generalized partition with non-negative parts to a Partition"""
    if isinstance(value, Partition):
        return value
    parts = value.parts if isinstance(value, GeneralizedPartition) else tuple(value)
    return Partition(parts)


def as_generalized(value) -> GeneralizedPartition:
    if isinstance(value, GeneralizedPartition):
        return value
    return GeneralizedPartition(tuple(value)).normalized()


def parse_parts(text: str) -> GeneralizedPartition:
    """
    parse "2,1,-1" into a generalized partition; the empty string is the empty partition
    """
    if text is None or text.strip() == "":
        return Partition(())
    if not _PARTS_RE.match(text):
        raise ShapeError(f"cannot parse {text!r} as a comma separated list of integers")
    return GeneralizedPartition(tuple(int(v) for v in text.split(","))).normalized()


def angle(r: int) -> int:
    """<r> = r if r is a positive integer, 0 otherwise"""
    return max(r, 0)


def transpose(la) -> Partition:
    la = as_partition(la)
    if not la.parts or la.parts[0] == 0:
        return Partition(())
    return Partition(tuple(sum(1 for v in la.parts if v >= j) for j in range(1, la.parts[0] + 1)))


def star(la) -> GeneralizedPartition:
    la = as_generalized(la)
    return GeneralizedPartition(tuple(-v for v in reversed(la.parts))).normalized()


def split_plus_minus(la) -> Tuple[Partition, GeneralizedPartition]:
    la = as_generalized(la)
    plus = Partition(tuple(max(v, 0) for v in la.parts))
    minus = GeneralizedPartition(tuple(min(v, 0) for v in la.parts)).normalized()
    return plus, minus


def depth(la) -> int:
    return sum(1 for v in as_generalized(la).parts if v > 0)


def check_admissible(la, m: int, n: int, p: int, q: int) -> bool:
    """
    lambda_{m+1} <= n and lambda_{d-p} >= -q, each condition holding
    automatically when m >= d (resp. p >= d).
    """
    la = as_generalized(la)
    d = la.length
    if d < 1:
        raise ShapeError("admissibility needs a generalized partition of length d >= 1")
    upper = m >= d or la.part(m + 1) <= n
    lower = p >= d or la.part(d - p) >= -q
    return upper and lower


def contains(outer, inner) -> bool:
    outer, inner = as_partition(outer).parts, as_partition(inner).parts
    width = max(len(outer), len(inner))
    outer = outer + (0,) * (width - len(outer))
    inner = inner + (0,) * (width - len(inner))
    return all(a >= b for a, b in zip(outer, inner))


@lru_cache(maxsize=None)
def _partitions(size: int, max_length: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if size == 0:
        return ((),)
    if max_length == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions(size - first, max_length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(size: int, max_length: int, max_part: Optional[int] = None, pad: bool = True) -> Iterator[Partition]:
    """
    partitions of size with at most max_length non-zero parts, in reverse lexicographic order;
    padded to declared length max_length unless pad is False
    """
    if size < 0:
        return
    bound = size if max_part is None else max_part
    for parts in _partitions(size, max_length, bound):
        if pad:
            parts = parts + (0,) * (max_length - len(parts))
        yield Partition(parts)


def partitions_up_to(size: int, max_length: int, pad: bool = True) -> Iterator[Partition]:
    for s in range(size + 1):
        yield from partitions_of(s, max_length, pad=pad)


def generalized_partitions(d: int, bound: int) -> Iterator[GeneralizedPartition]:
    """
    all generalized partitions of length d with sum of |parts| <= bound
    """

    def extend(prefix, upper, budget):
        if len(prefix) == d:
            yield GeneralizedPartition(tuple(prefix)).normalized()
            return
        for v in range(min(upper, budget), -budget - 1, -1):
            yield from extend(prefix + [v], v, budget - abs(v))

    if d == 0:
        yield Partition(())
        return
    yield from extend([], bound, bound)


def sort_key(la: Sequence[int]):
    """graded-lex order: total |parts|, then larger sum first, then lexicographically ascending"""
    parts = tuple(la)
    return (sum(abs(v) for v in parts), -sum(parts), parts)
