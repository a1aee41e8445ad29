"""Exact integer combinatorics: binomials with the vanishing convention and
bounded-composition counting by two independent methods."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SearchSpaceTooLarge

_ENUM_GUARD = 10 ** 8


def binom(a: int, b: int) -> int:
    """C(a, b), with C(a, b) = 0 whenever a < b, a < 0 or b < 0."""
    if b < 0 or a < b or a < 0:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class BoundedCompositionQuery:
    """Count integer tuples of given length with per-coordinate bounds
    lower[i] <= x_i <= upper[i] and fixed total."""

    length: int
    total: int
    lower: tuple
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(self.lower))
        object.__setattr__(self, "upper", tuple(self.upper))
        if len(self.lower) != self.length or len(self.upper) != self.length:
            raise ValueError("bounds must match the query length")
        if any(l > u for l, u in zip(self.lower, self.upper)):
            raise ValueError("lower bound exceeds upper bound")

    @classmethod
    def uniform(cls, length, total, lo, hi):
        return cls(length, total, (lo,) * length, (hi,) * length)


def _count_enumerate(q: BoundedCompositionQuery) -> int:
    space = 1
    for l, u in zip(q.lower, q.upper):
        space *= u - l + 1
        if space > _ENUM_GUARD:
            raise SearchSpaceTooLarge(f"{space} > {_ENUM_GUARD} states")
    lo_suffix = [0] * (q.length + 1)
    hi_suffix = [0] * (q.length + 1)
    for i in reversed(range(q.length)):
        lo_suffix[i] = lo_suffix[i + 1] + q.lower[i]
        hi_suffix[i] = hi_suffix[i + 1] + q.upper[i]

    def rec(i, remaining):
        if i == q.length:
            return 1 if remaining == 0 else 0
        if remaining < lo_suffix[i] or remaining > hi_suffix[i]:
            return 0
        total = 0
        for v in range(q.lower[i], q.upper[i] + 1):
            total += rec(i + 1, remaining - v)
        return total

    return rec(0, q.total)


def _count_inclusion_exclusion(q: BoundedCompositionQuery) -> int:
    # shift to 0 <= y_i <= c_i, then alternate over the coordinates pushed
    # past their cap: the same N(t, i)-style terms as the uniform case
    shifted = q.total - sum(q.lower)
    caps = [u - l for l, u in zip(q.lower, q.upper)]
    n = q.length
    total = 0
    for mask in range(1 << n):
        over = shifted
        bits = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                over -= caps[i] + 1
                bits += 1
            m >>= 1
            i += 1
        if over >= 0:
            total += (-1) ** bits * binom(over + n - 1, n - 1)
    return total


def count_compositions(q: BoundedCompositionQuery, method: str = "both") -> int:
    """Count solutions; method 'enumerate', 'inclusion_exclusion', or 'both'
    (runs both and asserts agreement)."""
    if method == "enumerate":
        return _count_enumerate(q)
    if method == "inclusion_exclusion":
        return _count_inclusion_exclusion(q)
    if method == "both":
        ie = _count_inclusion_exclusion(q)
        en = _count_enumerate(q)
        assert ie == en, f"method disagreement: enumerate {en} != I-E {ie}"
        return en
    raise ValueError(f"unknown method {method!r}")
