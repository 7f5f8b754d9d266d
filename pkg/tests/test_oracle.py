from fractions import Fraction
from math import comb

from hypothesis import given, strategies as st

from ncdiff import oracle
from ncdiff.diffops import Del, Lam


@given(st.integers(0, 4), st.integers(0, 4))
def test_shuffles_counted_and_valid(r, s):
    sh = oracle.shuffles(r, s)
    taus = list(sh)
    assert len(taus) == comb(r + s, r) == len(set(taus))
    assert all(oracle.is_shuffle(t, r) for t in taus)


def test_place_interleaves():
    assert oracle.place((1, 3, 2), ("a", "b", "c")) == ("a", "c", "b")


def test_word_enumeration():
    assert oracle.count_words(2, 3) == 1 + 2 + 4 + 8
    assert len(list(oracle.words_up_to(2, 3))) == 15


def test_eval_del_by_picks():
    # del_{(1,2)}^{(1,1)} picks an x1 before an x2 and deletes both
    assert oracle.eval_del((1, 2), ((), ()), (1, 2), 2) == {(): 1}
    assert oracle.eval_del((1, 2), ((), ()), (2, 1), 2) == {}
    assert oracle.eval_del((1,), ((2,),), (1, 1), 2) == {(2, 1): 1, (1, 2): 1}


def test_evaluate_and_equal():
    lam = {Lam((1,)): Fraction(1)}
    one_del = {Del((1,), ((1,),)): Fraction(1)}
    # lambda_{x1} and x -> x1 * del_1(...) differ on x2
    v = oracle.eval_equal(lam, one_del, lambda op, a: oracle.evaluate(op, a, 2), 3, 2)
    assert not v.equal and v.witness == ()
    assert oracle.kills_words({}, lambda op, a: oracle.evaluate(op, a, 2), [0, 1, 2], 2).equal


def test_exact_rank():
    assert oracle.exact_rank([[1, 2], [2, 4]]) == 1
    assert oracle.exact_rank([[1, 0], [0, Fraction(1, 3)]]) == 2
    assert oracle.exact_rank([]) == 0


def test_independence_certificate():
    fam = [{Lam((1,)): Fraction(1)}, {Lam((2,)): Fraction(1)}, {Lam((1,)): Fraction(2)}]
    rep = oracle.independence_certificate(fam, [(), (1,)], lambda op, a: oracle.evaluate(op, a, 2))
    assert not rep.independent


def test_rng_determinism():
    a = oracle.random_element(oracle.rng_for(7), 2, 3)
    b = oracle.random_element(oracle.rng_for(7), 2, 3)
    assert a == b
