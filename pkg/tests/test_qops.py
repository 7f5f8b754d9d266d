import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ncdiff import freealg as fa
from ncdiff import oracle
from ncdiff.catalog import counterexample_gamma, qone, qsub, rqkey, rword
from ncdiff.qops import QCalculus, QDelKey, QKey, default_q_bound, q_equal, qdel, qlam, qrho, qsigma

N = 2
F1 = Fraction(1)
SYM = QCalculus(N, fa.Bicharacter.symbolic(N))
COL = QCalculus(N, fa.Bicharacter.colour(N))
seeds = st.integers(0, 10**6)


def test_q_integers():
    q21 = SYM.beta.entries[1][0]
    d = QDelKey((1,), ((0, 1),), ((),))
    assert SYM.del_apply(d, {(1, 1, 1): F1}) == {(1, 1): 1 + q21 + q21 * q21}


def test_sigma_acts_by_grading():
    s = qsigma((1, 0), N)
    q11, q12 = SYM.beta.entries[0][0], SYM.beta.entries[0][1]
    out = SYM.apply(s, {(1, 2): F1})
    assert out == {(1, 2): q11 * q12} or out == {(1, 2): SYM.b((1, 0), (1, 1))}


def test_lambda_rho_sigma_compose():
    op = SYM.compose(qlam({(1,): F1}, N), SYM.compose(qrho({(2,): F1}, N), qsigma((0, 1), N)))
    assert SYM.apply(op, {(): F1}) == {(1, 2): F1}
    assert all(isinstance(k, QKey) for k in op)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_compose_is_composition(seed):
    rng = random.Random(seed)
    p = qone(rqkey(rng, rng.randint(1, 2)), p=rword(rng, 1))
    q = qone(rqkey(rng, 1), q=rword(rng, 1), g=(rng.randint(-1, 1), rng.randint(-1, 1)))
    pq = SYM.compose(p, q)
    for u in oracle.words_up_to(N, 3):
        a = {u: F1}
        assert SYM.apply(pq, a) == SYM.apply(p, SYM.apply(q, a))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_shuffle_order_drop(seed):
    rng = random.Random(seed)
    d1, d2 = rqkey(rng, rng.randint(1, 2)), rqkey(rng, rng.randint(1, 2))
    diff = qsub(SYM.compose(qone(d1), qone(d2)), SYM.shuffle_top(d1.I, d1.K, d1.A, d2.I, d2.K, d2.A))
    assert SYM.order_bound(diff) <= len(d1.I) + len(d2.I) - 1


def test_counterexample_bracket_is_not_order_zero():
    d1 = qone(QDelKey((1,), ((1, 0),), ((),)))
    d2 = qone(QDelKey((1,), ((0, 1),), ((),)))
    for g in counterexample_gamma(COL):
        br = COL.commutator_gamma(d1, d2, g)
        assert not q_equal(br, {}, COL.beta, 4).equal


def test_default_bound():
    assert default_q_bound(qdel((1, 2), ((0, 0), (0, 0)), ((1,), ()), N)) == 2 + 1 + 2
