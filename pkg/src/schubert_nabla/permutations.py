"""
Permutations of {1, ..., n} in one-line notation.

Products follow ``(u * v)(i) = u(v(i))``, so ``w * s(k)`` swaps the entries of
``w`` in positions k, k+1 while ``s(k) * w`` swaps the values k, k+1.

>>> w0 = Permutation((3, 2, 1))
>>> w0 * s(1, 3)
Permutation(values=(2, 3, 1))
>>> s(1, 3) * w0
Permutation(values=(3, 1, 2))
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "Permutation", "LevelCounts", "PermutationParseError",
    "identity", "s", "longest", "compose", "length", "code", "right_descents",
    "iter_reduced_words", "reduced_words", "reduced_word_count",
    "level_counts", "all_permutations", "permutations_of_length", "from_code",
    "parse_permutation",
]


class PermutationParseError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n; ``values[i - 1]`` is w(i)."""
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __len__(self):
        return len(self.values)

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.values))
        return ",".join(map(str, self.values))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.values, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return length(self)

    def code(self) -> tuple[int, ...]:
        return code(self)

    def right_descents(self) -> frozenset[int]:
        return right_descents(self)

    def times_s(self, k: int) -> Permutation:
        """Right multiplication by s_k (swap positions k, k+1)."""
        vals = list(self.values)
        vals[k - 1], vals[k] = vals[k], vals[k - 1]
        return Permutation(tuple(vals))

    def s_times(self, k: int) -> Permutation:
        """Left multiplication by s_k (swap values k, k+1)."""
        swap = {k: k + 1, k + 1: k}
        return Permutation(tuple(swap.get(v, v) for v in self.values))


@dataclass(frozen=True)
class LevelCounts:
    n: int
    counts: tuple[int, ...]  # counts[l] = |S_n(l)|

    def __getitem__(self, ell: int) -> int:
        # convenient for the multiplicity formula, which reads counts[-1] as 0
        if ell < 0 or ell >= len(self.counts):
            return 0
        return self.counts[ell]

    def __len__(self):
        return len(self.counts)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def s(k: int, n: int) -> Permutation:
    """The simple transposition s_k in S_n."""
    if not 1 <= k < n:
        raise ValueError(f"s_{k} is not a generator of S_{n}")
    return identity(n).times_s(k)


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def compose(u: Permutation, v: Permutation) -> Permutation:
    if u.n != v.n:
        raise ValueError(f"degree mismatch: S_{u.n} vs S_{v.n}")
    return Permutation(tuple(u.values[x - 1] for x in v.values))


def length(w: Permutation) -> int:
    vals = w.values
    return sum(1 for i, j in itertools.combinations(range(len(vals)), 2)
               if vals[i] > vals[j])


def code(w: Permutation) -> tuple[int, ...]:
    """Lehmer code: entry j counts k > j with w(k) < w(j)."""
    vals = w.values
    return tuple(sum(1 for b in vals[j + 1:] if b < a) for j, a in enumerate(vals))


def from_code(c: tuple[int, ...]) -> Permutation:
    """Inverse of :func:`code` on staircase vectors."""
    n = len(c)
    remaining = list(range(1, n + 1))
    vals = []
    for j, cj in enumerate(c):
        if not 0 <= cj <= n - 1 - j:
            raise ValueError(f"not a staircase vector: {c}")
        vals.append(remaining.pop(cj))
    return Permutation(tuple(vals))


def right_descents(w: Permutation) -> frozenset[int]:
    vals = w.values
    return frozenset(k for k in range(1, len(vals)) if vals[k - 1] > vals[k])


def iter_reduced_words(w: Permutation) -> Iterator[tuple[int, ...]]:
    """
    Yield every reduced word of ``w`` by peeling right descents.

    Depth-first, so memory stays O(length) even when there are
    hundreds of thousands of words.
    """
    def peel(vals: list[int], suffix: tuple[int, ...]):
        found = False
        for k in range(1, len(vals)):
            if vals[k - 1] > vals[k]:
                found = True
                vals[k - 1], vals[k] = vals[k], vals[k - 1]
                yield from peel(vals, (k,) + suffix)
                vals[k - 1], vals[k] = vals[k], vals[k - 1]
        if not found:
            yield suffix

    yield from peel(list(w.values), ())


def reduced_words(w: Permutation) -> frozenset[tuple[int, ...]]:
    return frozenset(iter_reduced_words(w))


@lru_cache(maxsize=None)
def _reduced_word_count(vals: tuple[int, ...]) -> int:
    total = 0
    for k in range(1, len(vals)):
        if vals[k - 1] > vals[k]:
            nxt = list(vals)
            nxt[k - 1], nxt[k] = nxt[k], nxt[k - 1]
            total += _reduced_word_count(tuple(nxt))
    return total or 1


def reduced_word_count(w: Permutation) -> int:
    """|R(w)|, memoized on the permutation."""
    return _reduced_word_count(w.values)


def all_permutations(n: int) -> list[Permutation]:
    """S_n in ascending lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def _levels(n: int) -> tuple[tuple[Permutation, ...], ...]:
    buckets: list[list[Permutation]] = [[] for _ in range(math.comb(n, 2) + 1)]
    for w in all_permutations(n):
        buckets[length(w)].append(w)
    return tuple(tuple(b) for b in buckets)


def permutations_of_length(n: int, ell: int) -> tuple[Permutation, ...]:
    """S_n(ell) in ascending lexicographic order; empty when out of range."""
    if ell < 0 or ell > math.comb(n, 2):
        return ()
    return _levels(n)[ell]


def level_counts(n: int) -> LevelCounts:
    """Mahonian numbers, as coefficients of prod_{i=1}^{n} (1 + q + ... + q^{i-1})."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [1]
    for i in range(1, n + 1):
        out = [0] * (len(coeffs) + i - 1)
        for d, c in enumerate(coeffs):
            for e in range(i):
                out[d + e] += c
        coeffs = out
    return LevelCounts(n, tuple(coeffs))


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """
    Parse "2,3,1" or the compact form "231" (only for n <= 9).

    >>> parse_permutation("2,3,1")
    Permutation(values=(2, 3, 1))
    """
    text = text.strip()
    if not text:
        raise PermutationParseError("empty permutation")
    try:
        if "," in text:
            vals = [int(t) for t in text.split(",")]
        else:
            if len(text) > 9:
                raise PermutationParseError(
                    f"compact form only supports n <= 9; use commas: {text!r}")
            vals = [int(ch) for ch in text]
    except ValueError as exc:
        raise PermutationParseError(f"cannot parse {text!r}: {exc}") from None
    size = len(vals) if n is None else n
    if n is not None and len(vals) != n:
        raise PermutationParseError(f"expected {n} entries, got {len(vals)} in {text!r}")
    seen = set()
    for v in vals:
        if not 1 <= v <= size:
            raise PermutationParseError(f"value {v} out of range 1..{size}")
        if v in seen:
            raise PermutationParseError(f"value {v} repeated")
        seen.add(v)
    return Permutation(tuple(vals))
