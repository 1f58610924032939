"""
Sparse polynomials in x_1, ..., x_n with integer coefficients.

Terms live in a dict from exponent tuples to nonzero ints. Values are treated
as immutable; every operation returns a new :class:`Poly`.

>>> f = Poly.monomial((2, 1, 0))
>>> print(nabla(f))
2*x1*x2 + x1^2
>>> print(divided_difference(f, 1))
x1*x2
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

__all__ = [
    "Poly", "add", "scale", "swap_action", "divided_difference",
    "partial_derivative", "nabla", "evaluate_all_ones", "leading_term",
    "term_order_key",
]

Exponents = tuple[int, ...]


def term_order_key(exps: Exponents) -> Exponents:
    """Sort key for pure lex with x_n > x_{n-1} > ... > x_1."""
    return exps[::-1]


class Poly:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] = ()):
        if n < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for n={n}")
            acc[exps] = acc.get(exps, 0) + int(c)
        self.n = n
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponents, int]) -> Poly:
        # trusted constructor: terms already validated and zero-free
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, c: int, n: int) -> Poly:
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exps: Exponents, coeff: int = 1) -> Poly:
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, j: int, n: int) -> Poly:
        exps = [0] * n
        exps[j - 1] = 1
        return cls._raw(n, {tuple(exps): 1})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponents, int]]:
        """Terms in canonical (descending) order."""
        for e in sorted(self._terms, key=term_order_key, reverse=True):
            yield e, self._terms[e]

    def coefficient(self, exps: Exponents) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        if isinstance(other, int):
            return self == Poly.constant(other, self.n)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: Poly):
        if self.n != other.n:
            raise ValueError(f"ring mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other: Poly) -> Poly:
        if isinstance(other, int):
            other = Poly.constant(other, self.n)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            if not other:
                return Poly.zero(self.n)
            return Poly._raw(self.n, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        result = Poly.constant(1, self.n)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        return f"Poly({self.n}, {dict(self.items())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = "*".join(
                f"x{j}" if a == 1 else f"x{j}^{a}"
                for j, a in enumerate(e, 1) if a)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def to_json(self) -> list[dict]:
        """Coefficients as decimal strings so big integers survive JSON."""
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> Poly:
        return cls(n, [(tuple(t["exponents"]), int(t["coeff"])) for t in data])


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def scale(c: int, f: Poly) -> Poly:
    return f * c


def _check_index(i: int, hi: int, what: str):
    if not 1 <= i <= hi:
        raise IndexError(f"{what} index {i} out of range 1..{hi}")


def swap_action(f: Poly, i: int) -> Poly:
    """s_i . f: exchange x_i and x_{i+1}."""
    _check_index(i, f.n - 1, "swap")
    out = {}
    for e, c in f._terms.items():
        e2 = list(e)
        e2[i - 1], e2[i] = e2[i], e2[i - 1]
        out[tuple(e2)] = c
    return Poly._raw(f.n, out)


def divided_difference(f: Poly, i: int) -> Poly:
    """
    Newton divided difference (f - s_i f) / (x_i - x_{i+1}).

    Works monomial by monomial: with p, q the exponents of x_i, x_{i+1},

        (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p) / (x_i - x_{i+1})
            = sum_{t=0}^{p-q-1} x_i^{q+t} x_{i+1}^{p-1-t}     (p > q)

    and the p < q case is the negative of the swapped one. Symmetric
    monomials (p == q) contribute nothing.
    """
    _check_index(i, f.n - 1, "divided difference")
    a, b = i - 1, i
    out: dict[Exponents, int] = {}
    for e, c in f._terms.items():
        p, q = e[a], e[b]
        if p == q:
            continue
        if p < q:
            p, q, c = q, p, -c
        base = list(e)
        for t in range(p - q):
            base[a] = q + t
            base[b] = p - 1 - t
            key = tuple(base)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
    return Poly._raw(f.n, out)


def partial_derivative(f: Poly, j: int) -> Poly:
    _check_index(j, f.n, "variable")
    out: dict[Exponents, int] = {}
    for e, c in f._terms.items():
        a = e[j - 1]
        if a:
            e2 = list(e)
            e2[j - 1] = a - 1
            out[tuple(e2)] = c * a
    return Poly._raw(f.n, out)


def nabla(f: Poly) -> Poly:
    """Sum of all first partial derivatives."""
    out: dict[Exponents, int] = {}
    for e, c in f._terms.items():
        for j, a in enumerate(e):
            if a:
                e2 = list(e)
                e2[j] = a - 1
                key = tuple(e2)
                v = out.get(key, 0) + c * a
                if v:
                    out[key] = v
                else:
                    del out[key]
    return Poly._raw(f.n, out)


def evaluate_all_ones(f: Poly) -> int:
    return sum(f._terms.values())


def leading_term(f: Poly) -> tuple[Exponents, int]:
    """Largest term under pure lex with x_n > ... > x_1."""
    if not f._terms:
        raise ValueError("zero polynomial has no leading term")
    e = max(f._terms, key=term_order_key)
    return e, f._terms[e]
