"""
Schubert polynomials of S_n and the staircase space W they span.

The table is built top-down from the staircase monomial for the longest
element: whenever S_w is known and s_k * w is shorter, S_{s_k * w} is the
divided difference N_k S_w. Every permutation is reached, most of them along
several paths, and all paths must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .permutations import (
    Permutation, iter_reduced_words, longest, permutations_of_length,
    right_descents,
)
from .polynomials import (
    Poly, divided_difference, evaluate_all_ones, leading_term, nabla,
    term_order_key,
)
from .linalg import IntMatrix

__all__ = [
    "SchubertTable", "SchubertConstructionError", "WeightBasis",
    "staircase", "build_schubert_table", "nabla_schubert_expansion",
    "check_proposition1", "expand_in_schubert_basis", "weight_basis",
    "change_of_basis", "j_involution", "macdonald_check",
    "leading_term_convention", "in_staircase",
]


class SchubertConstructionError(RuntimeError):
    """Two construction paths produced different polynomials."""


def staircase(n: int) -> tuple[int, ...]:
    return tuple(n - j for j in range(1, n + 1))


def in_staircase(exps: tuple[int, ...]) -> bool:
    n = len(exps)
    return all(0 <= a <= n - j for j, a in enumerate(exps, 1))


@dataclass(frozen=True)
class SchubertTable:
    n: int
    table: dict[Permutation, Poly]
    _by_leading: dict[tuple[int, ...], Permutation] = field(
        default_factory=dict, repr=False, compare=False)

    def __getitem__(self, w: Permutation) -> Poly:
        if w.n != self.n:
            raise ValueError(f"{w} is not in S_{self.n}")
        return self.table[w]

    def __len__(self):
        return len(self.table)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.table)

    def items(self):
        return self.table.items()

    def by_leading_exponent(self) -> dict[tuple[int, ...], Permutation]:
        if not self._by_leading:
            lead = {}
            for w, f in self.table.items():
                e, c = leading_term(f)
                if c != 1 or e in lead:
                    raise SchubertConstructionError(
                        f"leading term of S_{w} is not a fresh monic monomial")
                lead[e] = w
            self._by_leading.update(lead)
        return self._by_leading


def build_schubert_table(n: int) -> SchubertTable:
    if n < 1:
        raise ValueError("n must be positive")
    w0 = longest(n)
    top = Poly.monomial(staircase(n))
    table: dict[Permutation, Poly] = {w0: top}
    frontier = [w0]
    for _ in range(math.comb(n, 2)):
        nxt: dict[Permutation, None] = {}
        for w in frontier:
            f = table[w]
            pos = {v: i for i, v in enumerate(w.values)}
            for k in range(1, n):
                # s_k * w is shorter iff k+1 sits left of k in w
                if pos[k + 1] < pos[k]:
                    u = w.s_times(k)
                    g = divided_difference(f, k)
                    seen = table.get(u)
                    if seen is None:
                        table[u] = g
                        nxt[u] = None
                    elif seen != g:
                        raise SchubertConstructionError(
                            f"S_{u} differs between paths (via N_{k} from S_{w})")
        frontier = list(nxt)
    if len(table) != math.factorial(n):
        raise SchubertConstructionError(f"reached {len(table)} of {math.factorial(n)} permutations")

    # top level against the explicit form: staircase with exponent n-k lowered by one
    for k in range(1, n):
        exps = list(staircase(n))
        exps[n - k - 1] -= 1
        if table[w0.times_s(k)] != Poly.monomial(tuple(exps)):
            raise SchubertConstructionError(f"S_(w0 s_{k}) is not the expected monomial")
    return SchubertTable(n, table)


def nabla_schubert_expansion(table: SchubertTable, w: Permutation) -> list[tuple[Permutation, int]]:
    """Pairs (w * s_k, k) over the right descents k of w."""
    return [(w.times_s(k), k) for k in sorted(right_descents(w))]


def check_proposition1(table: SchubertTable, w: Permutation) -> bool:
    """Whether nabla(S_w) == sum over right descents k of k * S_{w s_k}."""
    rhs = Poly.zero(table.n)
    for u, k in nabla_schubert_expansion(table, w):
        rhs = rhs + table[u] * k
    return nabla(table[w]) == rhs


def expand_in_schubert_basis(table: SchubertTable, f: Poly) -> dict[Permutation, int]:
    """
    Coordinates of f (an element of W) in the Schubert basis.

    Peels off leading terms; this relies only on the leading terms being
    distinct and monic, not on any identity for nabla.
    """
    lead = table.by_leading_exponent()
    out: dict[Permutation, int] = {}
    rest = f
    while rest:
        e, c = leading_term(rest)
        w = lead.get(e)
        if w is None:
            raise ValueError(f"monomial {e} is outside W for n={table.n}")
        out[w] = c
        rest = rest - table[w] * c
    return out


@dataclass(frozen=True)
class WeightBasis:
    """Staircase monomials of degree ell, largest first under the term order."""
    n: int
    ell: int
    monomials: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def index(self) -> dict[tuple[int, ...], int]:
        return {e: i for i, e in enumerate(self.monomials)}

    def coordinates(self, f: Poly) -> list[int]:
        idx = self.index()
        out = [0] * len(self.monomials)
        for e, c in f.terms.items():
            if e not in idx:
                raise ValueError(f"{e} is not in W_{self.ell} for n={self.n}")
            out[idx[e]] = c
        return out


@lru_cache(maxsize=None)
def weight_basis(n: int, ell: int) -> WeightBasis:
    top = math.comb(n, 2)
    if not 0 <= ell <= top:
        raise ValueError(f"degree {ell} outside 0..{top}")

    def compositions(j: int, remaining: int):
        # position j (1-based) allows exponents 0..n-j
        if j == n:
            if remaining == 0:
                yield (0,)
            return
        cap = n - j
        rest_cap = (n - j) * (n - j - 1) // 2
        for a in range(max(0, remaining - rest_cap), min(cap, remaining) + 1):
            for tail in compositions(j + 1, remaining - a):
                yield (a,) + tail

    monos = sorted(compositions(1, ell), key=term_order_key, reverse=True)
    return WeightBasis(n, ell, tuple(monos))


def change_of_basis(table: SchubertTable, ell: int) -> IntMatrix:
    """
    Row i holds the monomial coordinates of the i-th Schubert polynomial of
    degree ell (permutations in lex order); columns follow weight_basis.
    """
    basis = weight_basis(table.n, ell)
    return IntMatrix.from_rows(
        [basis.coordinates(table[w]) for w in permutations_of_length(table.n, ell)],
        cols=len(basis))


def j_involution(f: Poly, n: int | None = None) -> Poly:
    """J(prod x_j^a_j) = (-1)^(sum a_j) prod x_j^(n-j-a_j)."""
    n = f.n if n is None else n
    if n != f.n:
        raise ValueError(f"polynomial lives in n={f.n}, not n={n}")
    stair = staircase(n)
    out = {}
    for e, c in f.terms.items():
        if not in_staircase(e):
            raise ValueError(f"monomial {e} lies outside the staircase for n={n}")
        out[tuple(s - a for s, a in zip(stair, e))] = -c if sum(e) % 2 else c
    return Poly(n, out)


def macdonald_check(table: SchubertTable, w: Permutation) -> tuple[int, int]:
    """(sum over reduced words of a_1*...*a_k, k! * S_w(1, ..., 1))."""
    word_sum = sum(math.prod(a) for a in iter_reduced_words(w))
    k = w.length()
    return word_sum, math.factorial(k) * evaluate_all_ones(table[w])


def leading_term_convention(table: SchubertTable) -> dict[str, int]:
    """
    Count how many S_w have leading exponent code(w) and how many have
    code(w^-1). The two conventions agree on involutions.
    """
    counts = {"total": 0, "code_w": 0, "code_w_inverse": 0}
    for w, f in table.items():
        e, _ = leading_term(f)
        counts["total"] += 1
        counts["code_w"] += e == w.code()
        counts["code_w_inverse"] += e == w.inverse().code()
    return counts
