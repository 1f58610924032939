import itertools
import math

import pytest
from hypothesis import given

from schubert_nabla.permutations import (
    Permutation, PermutationParseError, code, compose, from_code, identity,
    iter_reduced_words, length, level_counts, longest, parse_permutation,
    reduced_word_count, reduced_words, right_descents, s,
)

from oracles import brute_level_counts, brute_reduced_words, inversions, perm_product, permutations

P = lambda text: parse_permutation(text)  # noqa: E731


def test_compose_convention():
    assert compose(P("321"), s(1, 3)) == P("231")
    assert compose(s(1, 3), P("321")) == P("312")
    w = P("2413")
    assert compose(w, identity(4)) == w
    assert compose(identity(4), w) == w


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))


@given(permutations(2, 6))
def test_left_and_right_multiplication_by_generator(w):
    for k in range(1, w.n):
        assert w * s(k, w.n) == w.times_s(k)
        assert s(k, w.n) * w == w.s_times(k)


@pytest.mark.parametrize("text, expected", [("1234", 0), ("321", 3), ("2413", 3)])
def test_length(text, expected):
    assert length(P(text)) == expected == inversions(P(text).values)


@pytest.mark.parametrize("text, expected", [
    ("123", (0, 0, 0)), ("321", (2, 1, 0)), ("231", (1, 1, 0)),
])
def test_code(text, expected):
    assert code(P(text)) == expected


@pytest.mark.parametrize("text, expected", [
    ("123", set()), ("321", {1, 2}), ("231", {2}),
])
def test_right_descents(text, expected):
    assert right_descents(P(text)) == expected


@given(permutations(1, 6))
def test_descents_change_length_by_one(w):
    ell = w.length()
    for k in range(1, w.n):
        delta = -1 if k in w.right_descents() else 1
        assert w.times_s(k).length() == ell + delta


@pytest.mark.parametrize("n", range(1, 7))
def test_code_is_bijection_onto_staircase(n):
    codes = set()
    for w in itertools.permutations(range(1, n + 1)):
        w = Permutation(w)
        c = code(w)
        assert sum(c) == length(w)
        assert all(0 <= a <= n - j for j, a in enumerate(c, 1))
        assert from_code(c) == w
        codes.add(c)
    assert len(codes) == math.factorial(n)


def test_reduced_words_small():
    assert reduced_words(identity(3)) == {()}
    assert reduced_words(P("321")) == {(1, 2, 1), (2, 1, 2)}
    assert len(reduced_words(longest(4))) == 16


@pytest.mark.parametrize("n", range(1, 5))
def test_reduced_words_match_brute_force(n):
    for vals in itertools.permutations(range(1, n + 1)):
        w = Permutation(vals)
        words = reduced_words(w)
        assert words == brute_reduced_words(vals)
        assert reduced_word_count(w) == len(words)
        for word in words:
            assert len(word) == w.length()
            assert perm_product(word, n) == vals


def test_reduced_word_count_w0_n6():
    assert reduced_word_count(longest(6)) == 292864
    assert sum(1 for _ in iter_reduced_words(longest(5))) == 768


@pytest.mark.parametrize("n, expected", [
    (1, (1,)), (3, (1, 2, 2, 1)), (4, (1, 3, 5, 6, 5, 3, 1)),
])
def test_level_counts(n, expected):
    assert level_counts(n).counts == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_level_counts_against_enumeration(n):
    counts = level_counts(n).counts
    assert counts == brute_level_counts(n)
    assert counts == counts[::-1]
    assert sum(counts) == math.factorial(n)


def test_level_counts_large_n_palindromic():
    counts = level_counts(12).counts
    assert counts == counts[::-1] and sum(counts) == math.factorial(12)


@pytest.mark.parametrize("text, values", [
    ("2,3,1", (2, 3, 1)), ("231", (2, 3, 1)), (" 1 ", (1,)),
    ("10,9,8,7,6,5,4,3,2,1", tuple(range(10, 0, -1))),
])
def test_parse(text, values):
    assert parse_permutation(text).values == values


@pytest.mark.parametrize("text, fragment", [
    ("2,2,1", "value 2 repeated"), ("0,1", "value 0"), ("1,4,2", "value 4"),
    ("", "empty"), ("a,b", "cannot parse"), ("1234567890", "compact"),
])
def test_parse_rejects(text, fragment):
    with pytest.raises(PermutationParseError, match=fragment):
        parse_permutation(text)


def test_parse_checks_degree():
    with pytest.raises(PermutationParseError):
        parse_permutation("21", n=3)


def test_permutation_validates():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    assert str(P("2,3,1")) == "231"
    assert P("231").inverse() == P("312")
