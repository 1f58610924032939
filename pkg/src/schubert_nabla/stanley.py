"""
Stanley's level-to-level matrices M_l, their products between symmetric
levels, and the product formula for the determinant.

Rows and columns are always ordered by ascending one-line notation
(:func:`level_index`); the sign of a determinant depends on that choice and is
reported, never asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .linalg import IntMatrix, determinant, mat_mul
from .permutations import Permutation, level_counts, permutations_of_length
from .polynomials import nabla
from .schubert import SchubertTable, expand_in_schubert_basis

__all__ = [
    "LevelIndex", "level_index", "m_matrix", "m_matrix_via_nabla", "m_tilde",
    "stanley_rhs", "theorem_exponents", "StanleyReport", "verify_stanley",
]


@dataclass(frozen=True)
class LevelIndex:
    n: int
    ell: int
    perms: tuple[Permutation, ...]

    def __len__(self):
        return len(self.perms)

    def position(self) -> dict[Permutation, int]:
        return {w: i for i, w in enumerate(self.perms)}


def level_index(n: int, ell: int) -> LevelIndex:
    return LevelIndex(n, ell, permutations_of_length(n, ell))


def _check_level(n: int, ell: int):
    top = math.comb(n, 2)
    if not 1 <= ell <= top:
        raise ValueError(f"M_{ell} undefined for n={n}: need 1 <= l <= {top}")


def _check_half(n: int, ell: int):
    top = math.comb(n, 2)
    if not 0 <= ell <= top - ell:
        raise ValueError(f"need 0 <= l <= C(n,2) - l, got l={ell}, n={n}")


@lru_cache(maxsize=None)
def m_matrix(n: int, ell: int) -> IntMatrix:
    """Entry [u, v] is k when v = u * s_k, else 0."""
    _check_level(n, ell)
    rows = level_index(n, ell - 1)
    cols = level_index(n, ell).position()
    out = [[0] * len(cols) for _ in range(len(rows))]
    for i, u in enumerate(rows.perms):
        for k in range(1, n):
            v = u.times_s(k)
            j = cols.get(v)
            if j is not None:
                out[i][j] = k
    return IntMatrix.from_rows(out, cols=len(cols))


def m_matrix_via_nabla(table: SchubertTable, ell: int) -> IntMatrix:
    """
    Matrix of nabla: W_l -> W_{l-1} in the Schubert basis, found by expanding
    nabla(S_v) through leading terms.
    """
    n = table.n
    _check_level(n, ell)
    rows = level_index(n, ell - 1).position()
    cols = level_index(n, ell)
    out = [[0] * len(cols) for _ in range(len(rows))]
    for j, v in enumerate(cols.perms):
        for u, c in expand_in_schubert_basis(table, nabla(table[v])).items():
            if u not in rows:
                raise ValueError(f"nabla(S_{v}) has a component S_{u} off level {ell - 1}")
            out[rows[u]][j] = c
    return IntMatrix.from_rows(out, cols=len(cols))


def m_tilde(n: int, ell: int) -> IntMatrix:
    """M_{l+1} M_{l+2} ... M_{C(n,2)-l}, evaluated left to right."""
    _check_half(n, ell)
    top = math.comb(n, 2)
    prod = IntMatrix.identity(len(permutations_of_length(n, ell)))
    for lev in range(ell + 1, top - ell + 1):
        prod = mat_mul(prod, m_matrix(n, lev))
    return prod


def theorem_exponents(n: int, ell: int) -> list[int]:
    """m_k = |S_n(k)| - |S_n(k-1)| for k = 0..ell, asserted nonnegative."""
    counts = level_counts(n)
    exps = [counts[k] - counts[k - 1] for k in range(ell + 1)]
    if any(m < 0 for m in exps):
        raise ArithmeticError(f"negative multiplicity in {exps} for n={n}")
    return exps


def stanley_rhs(n: int, ell: int) -> int:
    """prod_k ((l-k+1)(l-k+2)...(C(n,2)-l-k))^{m_k}."""
    _check_half(n, ell)
    top = math.comb(n, 2)
    total = 1
    for k, m in enumerate(theorem_exponents(n, ell)):
        total *= math.prod(range(ell - k + 1, top - ell - k + 1)) ** m
    return total


@dataclass(frozen=True)
class StanleyReport:
    n: int
    ell: int
    det_abs: int
    rhs: int
    sign: int

    @property
    def equal(self) -> bool:
        return self.det_abs == self.rhs

    def to_json(self) -> dict:
        return {"n": self.n, "ell": self.ell, "det_abs": str(self.det_abs),
                "rhs": str(self.rhs), "equal": self.equal, "sign": self.sign}


def verify_stanley(n: int, ell: int) -> StanleyReport:
    det = determinant(m_tilde(n, ell))
    return StanleyReport(n, ell, abs(det), stanley_rhs(n, ell), -1 if det < 0 else 1)
