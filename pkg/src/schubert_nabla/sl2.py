"""
The irreducible sl2 modules V_k on polynomials of degree <= k in one
variable, and the tensor product V_{n-1} x V_{n-2} x ... x V_0 identified
with the staircase space W via x_1^a_1 ... x_n^a_n <-> x^a_1 x ... x x^a_n.

Matrices act on column vectors: column j holds the image of the j-th basis
vector. On V_k the basis is x^0, x^1, ..., x^k, so F (which lowers degree)
sits above the diagonal and E below it. On W the basis runs degree by degree,
each degree in :func:`~schubert_nabla.schubert.weight_basis` order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .linalg import IntMatrix, determinant, mat_mul
from .permutations import level_counts
from .polynomials import Poly
from .schubert import weight_basis

__all__ = [
    "RepOperator", "TensorOperator", "rep_operator", "commutator",
    "tensor_block", "tensor_operator", "tensor_f", "tensor_e", "tensor_h",
    "tensor_j", "w_basis", "operator_matrix", "Decomposition",
    "multiplicities", "irreducible_scalar", "falling_product",
    "nabla_j_determinant", "MAX_FULL_TENSOR_N",
]

OPERATORS = ("F", "H", "E", "J")

# full n! x n! matrices beyond this are refused; use tensor_block instead
MAX_FULL_TENSOR_N = 6


@dataclass(frozen=True)
class RepOperator:
    k: int
    which: str
    matrix: IntMatrix


@dataclass(frozen=True)
class TensorOperator:
    n: int
    which: str
    matrix: IntMatrix


@lru_cache(maxsize=None)
def rep_operator(k: int, which: str) -> RepOperator:
    """
    sigma_k(F) x^j = j x^(j-1), sigma_k(H) x^j = (2j-k) x^j,
    sigma_k(E) x^j = (k-j) x^(j+1), rho_k(J) x^j = (-1)^j x^(k-j).
    """
    if k < 0:
        raise ValueError("highest weight must be nonnegative")
    if which not in OPERATORS:
        raise ValueError(f"unknown operator {which!r}")
    m = [[0] * (k + 1) for _ in range(k + 1)]
    for j in range(k + 1):
        if which == "F" and j > 0:
            m[j - 1][j] = j
        elif which == "H":
            m[j][j] = 2 * j - k
        elif which == "E" and j < k:
            m[j + 1][j] = k - j
        elif which == "J":
            m[k - j][j] = -1 if j % 2 else 1
    return RepOperator(k, which, IntMatrix.from_rows(m))


def commutator(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return mat_mul(a, b) - mat_mul(b, a)


def _target_degree(n: int, which: str, ell: int) -> int:
    return {"F": ell - 1, "H": ell, "E": ell + 1, "J": math.comb(n, 2) - ell}[which]


def tensor_block(n: int, which: str, ell: int) -> IntMatrix:
    """
    The W_ell -> W_target block of sigma_W(F|H|E) or rho_W(J), built from
    the factor matrices rep_operator(n - j, .) on each tensor slot j.

    Rows follow weight_basis(n, target), columns weight_basis(n, ell). A block
    whose target degree falls outside 0..C(n,2) has zero rows.
    """
    if which not in OPERATORS:
        raise ValueError(f"unknown operator {which!r}")
    src = weight_basis(n, ell)
    tgt_deg = _target_degree(n, which, ell)
    if not 0 <= tgt_deg <= math.comb(n, 2):
        return IntMatrix.zeros(0, len(src))
    tgt = weight_basis(n, tgt_deg).index()
    factors = [rep_operator(n - j, which).matrix for j in range(1, n + 1)]
    out = [[0] * len(src) for _ in range(len(tgt))]
    for col, a in enumerate(src.monomials):
        if which == "J":
            image = {(): 1}
            for j, aj in enumerate(a):
                fm = factors[j]
                image = {e + (i,): c * fm[i, aj]
                         for e, c in image.items()
                         for i in range(fm.rows) if fm[i, aj]}
        else:
            # Lie algebra acts as a derivation: sum over slots
            image = {}
            for j, aj in enumerate(a):
                fm = factors[j]
                for i in range(fm.rows):
                    c = fm[i, aj]
                    if c:
                        e = a[:j] + (i,) + a[j + 1:]
                        image[e] = image.get(e, 0) + c
        for e, c in image.items():
            if c:
                out[tgt[e]][col] += c
    return IntMatrix.from_rows(out, cols=len(src))


def w_basis(n: int) -> list[tuple[int, ...]]:
    """All staircase monomials, degree by degree."""
    return [e for ell in range(math.comb(n, 2) + 1) for e in weight_basis(n, ell)]


def _offsets(n: int) -> list[int]:
    offs, acc = [], 0
    for ell in range(math.comb(n, 2) + 1):
        offs.append(acc)
        acc += len(weight_basis(n, ell))
    return offs


def tensor_operator(n: int, which: str, allow_large: bool = False) -> TensorOperator:
    """The full n! x n! matrix, assembled from degree blocks."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_FULL_TENSOR_N and not allow_large:
        raise ValueError(f"full tensor operators are limited to n <= {MAX_FULL_TENSOR_N}")
    size = math.factorial(n)
    offs = _offsets(n)
    out = [[0] * size for _ in range(size)]
    for ell in range(math.comb(n, 2) + 1):
        blk = tensor_block(n, which, ell)
        if blk.rows == 0:
            continue
        r0 = offs[_target_degree(n, which, ell)]
        c0 = offs[ell]
        for i in range(blk.rows):
            row = out[r0 + i]
            for j, x in enumerate(blk.row(i)):
                if x:
                    row[c0 + j] = x
    return TensorOperator(n, which, IntMatrix.from_rows(out, cols=size))


def tensor_f(n: int) -> TensorOperator:
    return tensor_operator(n, "F")


def tensor_e(n: int) -> TensorOperator:
    return tensor_operator(n, "E")


def tensor_h(n: int) -> TensorOperator:
    return tensor_operator(n, "H")


def tensor_j(n: int) -> TensorOperator:
    return tensor_operator(n, "J")


def operator_matrix(n: int, op: Callable[[Poly], Poly]) -> IntMatrix:
    """Matrix of a linear map W -> W given on polynomials, in the w_basis order."""
    basis = w_basis(n)
    idx = {e: i for i, e in enumerate(basis)}
    out = [[0] * len(basis) for _ in basis]
    for col, e in enumerate(basis):
        for e2, c in op(Poly.monomial(e)).terms.items():
            if e2 not in idx:
                raise ValueError(f"image monomial {e2} is outside W")
            out[idx[e2]][col] = c
    return IntMatrix.from_rows(out, cols=len(basis))


@dataclass(frozen=True)
class Decomposition:
    """W as a sum of V_{C(n,2)-2k} with multiplicity m_k."""
    n: int
    parts: tuple[tuple[int, int], ...]  # (k, m_k)

    def highest_weight(self, k: int) -> int:
        return math.comb(self.n, 2) - 2 * k

    @property
    def dimension(self) -> int:
        return sum(m * (self.highest_weight(k) + 1) for k, m in self.parts)

    @property
    def dim_check(self) -> bool:
        return self.dimension == math.factorial(self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "decomposition": [{"highest_weight": self.highest_weight(k), "multiplicity": m}
                              for k, m in self.parts],
            "dim_check": self.dim_check,
        }


def multiplicities(n: int) -> Decomposition:
    counts = level_counts(n)
    top = math.comb(n, 2)
    parts = tuple((k, counts[k] - counts[k - 1]) for k in range(top // 2 + 1))
    if any(m < 0 for _, m in parts):
        raise ArithmeticError(f"negative multiplicity for n={n}: {parts}")
    return Decomposition(n, parts)


def falling_product(lo: int, hi: int) -> int:
    """lo * (lo+1) * ... * hi; 1 when the range is empty."""
    return math.prod(range(lo, hi + 1))


def irreducible_scalar(n: int, ell: int, k: int) -> int:
    """
    Coefficient of x^(l-k) in F^(C(n,2)-2l) J x^(l-k) inside V_{C(n,2)-2k},
    computed by applying the matrices.
    """
    top = math.comb(n, 2)
    if not 0 <= k <= ell <= top - ell:
        raise ValueError(f"need 0 <= k <= l <= C(n,2) - l; got k={k}, l={ell}, n={n}")
    weight = top - 2 * k
    j_mat = rep_operator(weight, "J").matrix
    f_mat = rep_operator(weight, "F").matrix
    vec = IntMatrix.from_rows([[int(i == ell - k)] for i in range(weight + 1)])
    vec = mat_mul(j_mat, vec)
    for _ in range(top - 2 * ell):
        vec = mat_mul(f_mat, vec)
    return vec[ell - k, 0]


def nabla_j_determinant(n: int, ell: int) -> int:
    """det of F^(C(n,2)-2l) composed with J on W_l, in the monomial basis."""
    top = math.comb(n, 2)
    if not 0 <= ell <= top - ell:
        raise ValueError(f"need 0 <= l <= C(n,2) - l; got l={ell}, n={n}")
    m = tensor_block(n, "J", ell)
    for deg in range(top - ell, ell, -1):
        m = mat_mul(tensor_block(n, "F", deg), m)
    return determinant(m)
