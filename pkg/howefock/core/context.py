# Copyright (c) 2024 Pin-Yen Huang.
# Licensed under the MIT License.

from dataclasses import dataclass

from .exceptions import ContextError


@dataclass(frozen=True)
class HoweContext:
    """
    The sizes (m, n, p, q, d) of the dual pair (gl_d, gl(m+p|n+q)).

    The super index set is ordered as in the basis {v_A}: first the p even and
    q odd indices of gl(p|q), then the m even and n odd indices of gl(m|n).
    """

    m: int = 0
    n: int = 0
    p: int = 0
    q: int = 0
    d: int = 0

    def __post_init__(self):
        for key in ("m", "n", "p", "q", "d"):
            value = getattr(self, key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ContextError(f"{key} must be a non-negative integer, got {value!r}")

    @property
    def super_rank(self):
        return self.m + self.p + self.n + self.q

    def index_parity(self, index):
        """Z2-degree [A] of a 1-based super index A."""
        if not 1 <= index <= self.super_rank:
            raise ContextError(f"super index {index} out of range 1..{self.super_rank}")
        if index <= self.p:
            return 0
        if index <= self.p + self.q:
            return 1
        if index <= self.p + self.q + self.m:
            return 0
        return 1

    def block(self, index):
        """'pq' for indices of the gl(p|q) block, 'mn' for the gl(m|n) block."""
        self.index_parity(index)
        return "pq" if index <= self.p + self.q else "mn"

    def with_d(self, d):
        return type(self)(**{**self.__dict__, "d": d})
