"""
Brute-force reference implementations. Deliberately naive and independent of
the package code paths they are compared against.
"""

import itertools
import math

from hypothesis import strategies as st

from schubert_nabla.permutations import Permutation
from schubert_nabla.polynomials import Poly


def inversions(values):
    return sum(1 for i in range(len(values)) for j in range(i + 1, len(values))
               if values[i] > values[j])


def perm_product(word, n):
    """s_{a1} s_{a2} ... s_{ak} as a one-line tuple, composing as functions."""
    w = list(range(1, n + 1))
    for a in word:
        # right-multiplying by s_a swaps positions a, a+1
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def brute_reduced_words(values):
    """All generator sequences of the right length whose product is w."""
    n = len(values)
    k = inversions(values)
    return {word for word in itertools.product(range(1, n), repeat=k)
            if perm_product(word, n) == tuple(values)}


def brute_level_counts(n):
    counts = [0] * (math.comb(n, 2) + 1)
    for p in itertools.permutations(range(1, n + 1)):
        counts[inversions(p)] += 1
    return tuple(counts)


def naive_matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def cofactor_det(m):
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j, x in enumerate(m[0]):
        if x:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
    return total


def weak_order_reachable(n):
    """Pairs (u, v) with u <= v in right weak order, by transitive closure."""
    perms = list(itertools.permutations(range(1, n + 1)))
    up = {p: set() for p in perms}
    for p in perms:
        for k in range(1, n):
            if p[k - 1] < p[k]:
                q = list(p)
                q[k - 1], q[k] = q[k], q[k - 1]
                up[p].add(tuple(q))
    reach = {}
    for p in sorted(perms, key=inversions, reverse=True):
        r = {p}
        for q in up[p]:
            r |= reach[q]
        reach[p] = r
    return {(p, q) for p in perms for q in reach[p]}


def sympy_divided_difference(f: Poly, i: int) -> Poly:
    """(f - s_i f) / (x_i - x_{i+1}) through sympy's exact polynomial division."""
    import sympy
    xs = sympy.symbols(f"x1:{f.n + 1}")
    expr = sympy.Add(*(c * sympy.Mul(*(x ** a for x, a in zip(xs, e)))
                       for e, c in f.terms.items()))
    swapped = expr.subs({xs[i - 1]: xs[i], xs[i]: xs[i - 1]}, simultaneous=True)
    q, r = sympy.div(sympy.Poly(expr - swapped, *xs), sympy.Poly(xs[i - 1] - xs[i], *xs))
    assert r.is_zero
    return Poly(f.n, {m: int(c) for m, c in q.terms() if c})


def permutations(min_n=1, max_n=6):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda v: Permutation(tuple(v))))


def polys(n, max_degree=6, max_terms=8, coeff=20):
    exps = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(
        lambda e: sum(e) <= max_degree).map(tuple)
    return st.dictionaries(exps, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: Poly(n, d))


def polys_any_n(min_n=2, max_n=5, **kw):
    return st.integers(min_n, max_n).flatmap(lambda n: polys(n, **kw))
