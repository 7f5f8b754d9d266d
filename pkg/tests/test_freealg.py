from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncdiff import freealg as fa

N = 2
words = st.lists(st.integers(1, N), max_size=4).map(tuple)
elems = st.dictionaries(words, st.integers(-3, 3).filter(bool).map(Fraction), max_size=4)


@given(elems, elems, elems)
def test_associative_algebra(a, b, c):
    assert fa.mul(fa.mul(a, b), c) == fa.mul(a, fa.mul(b, c))
    assert fa.mul(fa.add(a, b), c) == fa.add(fa.mul(a, c), fa.mul(b, c))
    assert fa.sub(a, a) == {}
    assert fa.mul(fa.one(), a) == a


def test_noncommutative():
    assert fa.commutator(fa.x(1), fa.x(2)) == {(1, 2): 1, (2, 1): -1}


def test_degrees():
    assert fa.degree((1, 2, 1), N) == (2, 1)
    assert fa.dsub(fa.dadd((1, 0), (0, 2)), fa.unit_vector(2, N)) == (1, 1)
    parts = fa.homogeneous_parts({(1,): 1, (2,): 2, (1, 2): 1}, N)
    assert set(parts) == {(1, 0), (0, 1), (1, 1)}


def test_index_checks():
    with pytest.raises(fa.IndexOutOfRange):
        fa.check_indices(fa.x(3), N)


def test_bicharacter_trivial_and_colour():
    t = fa.Bicharacter.trivial_for(N)
    assert fa.beta_commutator(fa.x(1), fa.x(2), t, N) == fa.commutator(fa.x(1), fa.x(2))
    c = fa.Bicharacter.colour(N)
    g, d = (1, 0), (0, 1)
    assert c.value(g, d) * c.value(d, g) == 1
    assert c.value(g, g) == 1


@given(words, words)
def test_bicharacter_multiplicative(u, v):
    b = fa.Bicharacter.symbolic(N)
    du, dv = fa.degree(u, N), fa.degree(v, N)
    w = (1, 2)
    dw = fa.degree(w, N)
    assert b.value(fa.dadd(du, dv), dw) == b.value(du, dw) * b.value(dv, dw)
    assert b.value(dw, fa.dadd(du, dv)) == b.value(dw, du) * b.value(dw, dv)


@given(elems, elems)
def test_sigma_is_algebra_map(a, b):
    beta = fa.Bicharacter.symbolic(N)
    g = (1, -1)
    s = lambda e: fa.sigma_apply(g, e, beta, N)
    assert s(fa.mul(a, b)) == fa.mul(s(a), s(b))


def test_words():
    assert list(fa.all_words(2, 2)) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert fa.leading_monomial({(2,): 1, (1, 2): 3, (2, 1): 1}) == (1, 2)
    assert fa.is_scalar_element({(): 5}) and not fa.is_scalar_element(fa.x(1))
