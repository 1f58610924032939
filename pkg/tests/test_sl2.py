import math

import pytest

from schubert_nabla.linalg import IntMatrix, mat_mul
from schubert_nabla.polynomials import Poly, nabla
from schubert_nabla.schubert import j_involution, weight_basis
from schubert_nabla.sl2 import (
    MAX_FULL_TENSOR_N, commutator, falling_product, irreducible_scalar,
    multiplicities, operator_matrix, rep_operator, tensor_block, tensor_e,
    tensor_f, tensor_h, tensor_j, w_basis,
)
from schubert_nabla.stanley import stanley_rhs


def apply(op: IntMatrix, j: int) -> list[int]:
    """Image of the basis vector x^j as a coefficient list."""
    return [op[i, j] for i in range(op.rows)]


def test_rep_examples():
    f2 = rep_operator(2, "F").matrix
    assert apply(f2, 2) == [0, 2, 0]
    assert apply(f2, 1) == [1, 0, 0]
    assert apply(f2, 0) == [0, 0, 0]
    assert apply(rep_operator(2, "J").matrix, 1) == [0, -1, 0]
    for which, expected in [("F", 0), ("H", 0), ("E", 0), ("J", 1)]:
        assert rep_operator(0, which).matrix.to_rows() == [[expected]]


@pytest.mark.parametrize("k", range(0, 11))
def test_rep_shapes_and_relations(k):
    f, h, e, j = (rep_operator(k, w).matrix for w in "FHEJ")
    for r in range(k + 1):
        for c in range(k + 1):
            # basis x^0..x^k, columns are inputs: F lowers degree, E raises it
            if f[r, c]:
                assert r == c - 1
            if e[r, c]:
                assert r == c + 1
            if h[r, c]:
                assert r == c
            if j[r, c]:
                assert r == k - c and j[r, c] == (-1) ** c
    assert commutator(h, e) == e.scaled(2)
    assert commutator(h, f) == f.scaled(-2)
    assert commutator(e, f) == h
    assert mat_mul(j, j) == IntMatrix.identity(k + 1).scaled((-1) ** k)


def test_rep_rejects():
    with pytest.raises(ValueError):
        rep_operator(-1, "F")
    with pytest.raises(ValueError):
        rep_operator(2, "X")


@pytest.mark.parametrize("n", range(1, 6))
def test_tensor_commutators(n):
    f, h, e = tensor_f(n).matrix, tensor_h(n).matrix, tensor_e(n).matrix
    assert f.shape == (math.factorial(n),) * 2
    assert commutator(h, e) == e.scaled(2)
    assert commutator(h, f) == f.scaled(-2)
    assert commutator(e, f) == h


@pytest.mark.parametrize("n", range(1, 6))
def test_tensor_f_is_nabla(n):
    assert tensor_f(n).matrix == operator_matrix(n, nabla)


@pytest.mark.parametrize("n", range(1, 6))
def test_tensor_j_is_involution(n):
    assert tensor_j(n).matrix == operator_matrix(n, j_involution)


def test_tensor_f_trivial():
    assert tensor_f(1).matrix.to_rows() == [[0]]


def test_tensor_j_n3_on_staircase():
    basis = w_basis(3)
    col = basis.index((2, 1, 0))
    j = tensor_j(3).matrix
    image = {basis[r]: j[r, col] for r in range(j.rows) if j[r, col]}
    assert image == {(0, 0, 0): -1}


@pytest.mark.parametrize("n", range(1, 6))
def test_weight_spaces(n):
    top = math.comb(n, 2)
    for ell in range(top + 1):
        h = tensor_block(n, "H", ell)
        size = len(weight_basis(n, ell))
        assert h == IntMatrix.identity(size).scaled(2 * ell - top)
        assert tensor_block(n, "F", ell).rows == (len(weight_basis(n, ell - 1)) if ell else 0)
        assert tensor_block(n, "J", ell).rows == len(weight_basis(n, top - ell))


def test_blocks_agree_with_polynomials_n7():
    # n = 7 is past the full-matrix cap; blocks are still available
    n, ell = 7, 10
    with pytest.raises(ValueError):
        tensor_f(7)
    assert MAX_FULL_TENSOR_N == 6
    blk = tensor_block(n, "F", ell)
    src, tgt = weight_basis(n, ell), weight_basis(n, ell - 1)
    for col, e in enumerate(src.monomials[:25]):
        assert [blk[r, col] for r in range(blk.rows)] == tgt.coordinates(nabla(Poly.monomial(e)))


@pytest.mark.parametrize("n, parts", [
    (2, ((0, 1),)), (3, ((0, 1), (1, 1))), (4, ((0, 1), (1, 2), (2, 2), (3, 1))),
])
def test_multiplicities_examples(n, parts):
    dec = multiplicities(n)
    assert dec.parts == parts
    assert dec.dim_check


@pytest.mark.parametrize("n", range(1, 9))
def test_multiplicities_dimension(n):
    dec = multiplicities(n)
    assert all(m >= 0 for _, m in dec.parts)
    assert sum(m * (math.comb(n, 2) - 2 * k + 1) for k, m in dec.parts) == math.factorial(n)


def test_multiplicities_json():
    assert multiplicities(3).to_json() == {
        "n": 3,
        "decomposition": [{"highest_weight": 3, "multiplicity": 1},
                          {"highest_weight": 1, "multiplicity": 1}],
        "dim_check": True,
    }


def test_irreducible_scalar_examples():
    assert irreducible_scalar(3, 1, 1) == 1
    assert irreducible_scalar(3, 1, 0) == -2
    with pytest.raises(ValueError):
        irreducible_scalar(3, 1, 2)


@pytest.mark.parametrize("n", range(2, 8))
def test_irreducible_scalar_closed_form(n):
    top = math.comb(n, 2)
    for ell in range(top // 2 + 1):
        for k in range(ell + 1):
            val = irreducible_scalar(n, ell, k)
            assert abs(val) == falling_product(ell - k + 1, top - ell - k)
            assert abs(val) == math.factorial(top - ell - k) // math.factorial(ell - k)
            assert val == (-1) ** (ell - k) * abs(val)
        # l == k: full falling product of the top power
        assert abs(irreducible_scalar(n, ell, ell)) == math.factorial(top - 2 * ell)


@pytest.mark.parametrize("n", range(1, 7))
def test_scalars_reproduce_theorem(n):
    dec = multiplicities(n)
    for ell in range(math.comb(n, 2) // 2 + 1):
        prod = math.prod(abs(irreducible_scalar(n, ell, k)) ** m for k, m in dec.parts if k <= ell)
        assert prod == stanley_rhs(n, ell)
