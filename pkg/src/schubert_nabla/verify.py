"""
Verification suites. Each suite yields :class:`Check` records; the CLI
renders them and maps any failure to exit code 1.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .linalg import determinant, mat_mul
from .permutations import Permutation, all_permutations, longest
from .polynomials import Poly, divided_difference, leading_term, nabla
from .schubert import (
    build_schubert_table, change_of_basis, check_proposition1, j_involution,
    macdonald_check, weight_basis,
)
from .sl2 import (
    commutator, irreducible_scalar, multiplicities, operator_matrix,
    rep_operator, tensor_operator,
)
from .stanley import (
    level_index, m_matrix, m_matrix_via_nabla, m_tilde, stanley_rhs, verify_stanley,
)

__all__ = [
    "Check", "SUITES", "random_poly", "weak_order_leq", "run_suite",
    "prop1_checks", "macdonald_checks", "basis_checks", "lemma2_checks",
    "sl2_checks", "stanley_checks", "DEFAULT_SEED",
]

DEFAULT_SEED = 20180813


@dataclass
class Check:
    name: str
    witness: str
    passed: bool
    values: dict[str, object] = field(default_factory=dict)

    def to_json(self) -> dict:
        # big ints go out as decimal strings
        vals = {k: str(v) if isinstance(v, int) and not isinstance(v, bool) else v
                for k, v in self.values.items()}
        return {"name": self.name, "witness": self.witness, "passed": self.passed, **vals}


def random_poly(rng: random.Random, n: int, max_degree: int = 6, max_terms: int = 8,
                coeff_range: int = 9) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        exps = [0] * n
        for _ in range(deg):
            exps[rng.randrange(n)] += 1
        terms[tuple(exps)] = rng.randint(-coeff_range, coeff_range)
    return Poly(n, terms)


def weak_order_leq(u: Permutation, v: Permutation) -> bool:
    """u <= v in right weak order, by search over upward covers u -> u s_k."""
    target = v.length()
    frontier = {u}
    for _ in range(target - u.length()):
        frontier = {w.times_s(k) for w in frontier for k in range(1, w.n)
                    if w.values[k - 1] < w.values[k]}
    return v in frontier


def prop1_checks(n: int, seed: int = DEFAULT_SEED) -> Iterator[Check]:
    table = build_schubert_table(n)
    for w in all_permutations(n):
        yield Check("prop1", str(w), check_proposition1(table, w))


def macdonald_checks(n: int, seed: int = DEFAULT_SEED, full_sweep_max: int = 5,
                     samples: int = 20) -> Iterator[Check]:
    table = build_schubert_table(n)
    if n <= full_sweep_max:
        perms = all_permutations(n)
    else:
        rng = random.Random(seed)
        pool = all_permutations(n)
        perms = [longest(n)] + rng.sample(pool, min(samples, len(pool)))
    for w in perms:
        words, evaluated = macdonald_check(table, w)
        yield Check("macdonald", str(w), words == evaluated,
                    {"word_sum": words, "k_factorial_eval": evaluated})


def basis_checks(n: int, seed: int = DEFAULT_SEED) -> Iterator[Check]:
    table = build_schubert_table(n)
    for ell in range(math.comb(n, 2) + 1):
        det = determinant(change_of_basis(table, ell))
        leads = [leading_term(table[w])[0] for w in table if w.length() == ell]
        bijective = (len(set(leads)) == len(leads)
                     and set(leads) == set(weight_basis(n, ell).monomials))
        yield Check("basis", f"l={ell}", abs(det) == 1 and bijective,
                    {"det": det, "leading_bijection": bijective})


def lemma2_checks(n: int, seed: int = DEFAULT_SEED, samples: int = 100) -> Iterator[Check]:
    rng = random.Random(seed)
    for i in range(1, n):
        bad = None
        for t in range(samples):
            f = random_poly(rng, n)
            if nabla(divided_difference(f, i)) != divided_difference(nabla(f), i):
                bad = t
                break
        yield Check("lemma2", f"i={i}" if bad is None else f"i={i},sample={bad}",
                    bad is None, {"samples": samples})


def sl2_checks(n: int, seed: int = DEFAULT_SEED, max_k: int = 10,
               full_tensor_max: int = 5) -> Iterator[Check]:
    for k in range(max_k + 1):
        f, h, e, j = (rep_operator(k, w).matrix for w in "FHEJ")
        ok = (commutator(h, e) == e.scaled(2) and commutator(h, f) == f.scaled(-2)
              and commutator(e, f) == h)
        j2 = mat_mul(j, j) == type(j).identity(k + 1).scaled(-1 if k % 2 else 1)
        yield Check("sl2.rep", f"V_{k}", ok and j2)
    if n <= full_tensor_max:
        f, h, e, j = (tensor_operator(n, w).matrix for w in "FHEJ")
        yield Check("sl2.tensor_commutators", f"n={n}",
                    commutator(h, e) == e.scaled(2) and commutator(h, f) == f.scaled(-2)
                    and commutator(e, f) == h)
        yield Check("sl2.tensor_f_is_nabla", f"n={n}", f == operator_matrix(n, nabla))
        yield Check("sl2.tensor_j_is_J", f"n={n}", j == operator_matrix(n, j_involution))
    dec = multiplicities(n)
    yield Check("sl2.dimension", f"n={n}", dec.dim_check,
                {"dimension": dec.dimension, "n_factorial": math.factorial(n)})
    for ell in range(math.comb(n, 2) // 2 + 1):
        prod = math.prod(abs(irreducible_scalar(n, ell, k)) ** m
                         for k, m in dec.parts if k <= ell)
        rhs = stanley_rhs(n, ell)
        yield Check("sl2.scalar_product", f"l={ell}", prod == rhs,
                    {"product": prod, "rhs": rhs})


def stanley_checks(n: int, seed: int = DEFAULT_SEED, mmatrix_max: int = 5,
                   weak_order_max: int = 4) -> Iterator[Check]:
    top = math.comb(n, 2)
    for ell in range(top // 2 + 1):
        rep = verify_stanley(n, ell)
        yield Check("stanley", f"l={ell}", rep.equal,
                    {"det_abs": rep.det_abs, "rhs": rep.rhs, "sign": rep.sign})
    if n <= mmatrix_max:
        table = build_schubert_table(n)
        for ell in range(1, top + 1):
            yield Check("stanley.m_matrix_via_nabla", f"l={ell}",
                        m_matrix(n, ell) == m_matrix_via_nabla(table, ell))
    if n <= weak_order_max:
        for ell in range(top // 2 + 1):
            mt = m_tilde(n, ell)
            rows = level_index(n, ell).perms
            cols = level_index(n, top - ell).perms
            ok = all((mt[i, j] != 0) == weak_order_leq(u, v)
                     for i, u in enumerate(rows) for j, v in enumerate(cols))
            yield Check("stanley.weak_order_support", f"l={ell}", ok)


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "prop1": prop1_checks,
    "macdonald": macdonald_checks,
    "basis": basis_checks,
    "lemma2": lemma2_checks,
    "sl2": sl2_checks,
    "stanley": stanley_checks,
}


def run_suite(name: str, n: int, seed: int = DEFAULT_SEED) -> list[Check]:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key](n, seed=seed)]
    return list(SUITES[name](n, seed=seed))
