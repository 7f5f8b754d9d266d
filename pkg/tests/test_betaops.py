import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncdiff import betaops as bo
from ncdiff import diffops as do
from ncdiff import freealg as fa
from ncdiff.catalog import rkey, rop, rword
from ncdiff.diffops import Del, Lam, op_sub

N = 2
F1 = Fraction(1)
SYM = bo.BetaContext.symbolic(N)
COL = bo.BetaContext.colour(N)
TRIV = bo.BetaContext(fa.Bicharacter.trivial_for(N))
seeds = st.integers(0, 10**6)


def test_flags():
    assert COL.colour_compatible and not SYM.colour_compatible
    with pytest.raises(bo.FlagRequired):
        SYM.require_colour("rho swap")


def test_beta_derivation_rule():
    # del_{beta,1}^1 (x2 x1) = q(e2, e1)^{-1}-twisted placement of the removed x1
    k = Del((1,), ((),))
    val = bo.beta_del_apply(k, {(2, 1): F1}, SYM)
    assert set(val) == {(2,)}
    assert bo.beta_del_apply(k, {(1, 2): F1}, SYM) == {(2,): F1}


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_trivial_twist_is_classical(seed):
    rng = random.Random(seed)
    p, q = rop(rng), rop(rng)
    a = {rword(rng, 4): F1}
    assert TRIV.eval(TRIV.calc.compose(p, q), a) == do.apply(do.compose(p, q, N), a, N)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_twisted_compose_is_composition(seed):
    rng = random.Random(seed)
    p, q = rop(rng, 2, 2, lams=False), rop(rng, 1, 2)
    pq = bo.beta_compose(p, q, SYM)
    for L in range(4):
        for u in fa.all_words(N, L):
            a = {u: F1}
            assert SYM.eval(pq, a) == SYM.eval(p, SYM.eval(q, a))


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_leibniz_and_swaps(seed):
    rng = random.Random(seed)
    k = rkey(rng, rng.randint(1, 3))
    u, v = rword(rng, 3), rword(rng, 3)
    assert bo.leibniz_split(k.I, k.A, u, v, COL) == COL.calc.del_word(k.I, k.A, u + v)
    c = rword(rng, 2)
    lhs = COL.calc.bracket({k: F1}, {Lam(c): F1})
    assert bo.beta_equal(lhs, bo.swap_operator(bo.lambda_swap(k.I, k.A, c, COL), "lambda", COL), COL)
    lhs = COL.calc.bracket({k: F1}, bo.beta_rho({c: F1}, COL))
    assert bo.beta_equal(lhs, bo.swap_operator(bo.rho_swap(k.I, k.A, c, COL), "rho", COL), COL)


def test_rho_swap_needs_colour():
    with pytest.raises(bo.FlagRequired):
        bo.rho_swap((1,), ((),), (2,), SYM)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_shuffle_order_drop(seed):
    rng = random.Random(seed)
    k1, k2 = rkey(rng, rng.randint(1, 2)), rkey(rng, rng.randint(1, 2))
    d = op_sub(SYM.calc.compose({k1: F1}, {k2: F1}), bo.beta_shuffle_top(k1.I, k1.A, k2.I, k2.A, SYM))
    assert bo.beta_order(d, SYM) <= len(k1.I) + len(k2.I) - 1


def test_goingup_holds():
    assert bo.beta_goingup((1,), (2,), ((1,),), ((),), (2,), SYM).holds
    assert bo.beta_goingup((1, 2), (1,), ((), (2,)), ((1,),), (1, 2), COL).holds


def test_d0_product():
    a, b, u, v = (1,), (2,), (2,), (1,)
    c, au, vb = bo.d0_beta_product((a, b), (u, v), SYM)
    assert (au, vb) == ((1, 2), (1, 2))
    one = F1
    lhs = SYM.calc.compose(bo.d0_beta_operator(one, a, b, SYM), bo.d0_beta_operator(one, u, v, SYM))
    for L in range(4):
        for w in fa.all_words(N, L):
            assert SYM.eval(lhs, {w: one}) == SYM.eval(bo.d0_beta_operator(c, au, vb, SYM), {w: one})
