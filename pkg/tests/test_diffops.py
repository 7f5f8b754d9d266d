import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncdiff import diffops as do
from ncdiff import oracle
from ncdiff.catalog import level_three_relation, rkey, rop
from ncdiff.diffops import Del, Lam, op_add, op_scale, op_sub

N = 2
CL = do.calculus(N)
F1 = Fraction(1)
words = st.lists(st.integers(1, N), max_size=3).map(tuple)
seeds = st.integers(0, 10**6)
ev = lambda op, a: oracle.evaluate(op, a, N)


def test_worked_values():
    c = {(1, 2): F1, (2, 1): -F1}
    assert do.del_apply(Del((1, 2), ((), ())), c, N) == {(): F1}
    assert do.del_apply(Del((1,), ((2,),)), {(1, 1): F1}, N) == {(2, 1): F1, (1, 2): F1}


def test_del_key_validation_and_multilinearity():
    with pytest.raises(ValueError):
        do.del_key((1, 2), ((),))
    op = do.del_key((1,), ({(1,): Fraction(2), (2,): F1},))
    assert op == {Del((1,), ((1,),)): Fraction(2), Del((1,), ((2,),)): F1}


@settings(max_examples=40, deadline=None)
@given(seeds, words)
def test_apply_matches_pick_semantics(seed, u):
    k = rkey(random.Random(seed), random.Random(seed).randint(1, 3))
    assert do.del_apply(k, {u: F1}, N) == oracle.eval_del(k.I, k.A, u, N)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_compose_is_composition(seed):
    rng = random.Random(seed)
    p, q = rop(rng), rop(rng)
    pq = do.compose(p, q, N)
    for u in oracle.words_up_to(N, 4):
        a = {u: F1}
        assert do.apply(pq, a, N) == do.apply(p, do.apply(q, a, N), N)


def test_rho_elimination():
    a = {(1, 2): F1}
    op = do.eliminate_rho(a, N)
    for u in oracle.words_up_to(N, 3):
        assert do.apply(op, {u: F1}, N) == {u + (1, 2): F1}


def test_orders():
    assert do.order({}, N) == -1
    assert do.order({Lam((1,)): F1}, N) == 0
    # order is read off the rho-free canonical form, where rho_{x1} needs Del keys
    assert do.order(do.eliminate_rho({(1,): F1}, N), N) == 1
    assert do.order({Del((1, 2), ((), ())): F1}, N) == 2


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_canonical_idempotent_and_sound(seed):
    rng = random.Random(seed)
    phi = do.compose(rop(rng), rop(rng, 1), N)
    c = CL.canonical(phi)
    assert CL.canonical(c.to_normal()) == c
    assert oracle.eval_equal(c.to_normal(), phi, ev, 5, N).equal


def test_known_level_two_relation():
    rel = op_add({Del((1, 2), ((2, 1), ())): F1}, {Del((1, 2), ((1, 2), ())): -F1},
                 op_scale(CL.compose({Lam((2,)): F1}, {Del((2,), ((),)): F1}), -1),
                 {Del((2,), ((2,),)): F1})
    assert CL.canonical(rel).is_zero()
    assert CL.equal(rel, {})


def test_level_three_relation_is_zero_but_nontrivial():
    rel = level_three_relation()
    assert len(rel) == 6
    assert oracle.kills_words(rel, ev, range(8), N).equal
    assert CL.equal(rel, {})


def test_equal_detects_difference():
    a = {Del((1, 1, 2), ((), (2,), ())): F1}
    b = {Del((1, 1, 2), ((), (), (2,))): F1}
    assert not CL.equal(a, b)
    assert CL.equal(a, dict(a))


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_shuffle_top_order_drop(seed):
    rng = random.Random(seed)
    k1, k2 = rkey(rng, rng.randint(1, 2)), rkey(rng, rng.randint(1, 2))
    diff = op_sub(do.compose({k1: F1}, {k2: F1}, N), do.shuffle_top(k1.I, k1.A, k2.I, k2.A))
    assert do.order(diff, N) <= len(k1.I) + len(k2.I) - 1


def test_ps_form_truncation():
    phi = op_add({Del((1,), ((2,),)): F1}, {Lam((1,)): Fraction(3)})
    const, coeffs = do.ps_form(phi, 3, N)
    approx = do.ps_operator(const, coeffs)
    assert oracle.kills_words(op_sub(phi, approx), ev, range(4), N).equal
    with pytest.raises(ValueError):
        do.ps_form(phi, -1, N)


def test_d0_witness():
    probe, val = do.d0_witness([(F1, (1,), ())], N)
    assert probe == (1, 2) and val == {(1, 1, 2): F1}
    assert do.d0_witness([], N)[1] == {}
    with pytest.raises(ValueError):
        do.d0_witness([(F1, (1,), (2,)), (-F1, (1,), (2,))], N)


def test_inner_derivation_decomposition():
    terms = [(F1, (1, 2), ()), (-F1, (), (1, 2)), (Fraction(2), (2,), ()), (Fraction(-2), (), (2,))]
    parts = do.decompose_inner_derivation(terms, N)
    assert sorted((c, tuple(a)) for c, a in parts) == [(F1, ((1, 2),)), (Fraction(2), ((2,),))]
    with pytest.raises(do.NotADerivation):
        do.decompose_inner_derivation([(F1, (1,), ())], N)


def test_reduce_element_to_scalar():
    a = {(1, 2): Fraction(3), (2,): F1}
    k, c = do.reduce_element_to_scalar(a)
    assert k == Del((1, 2), ((), ())) and c == 3
    assert do.del_apply(k, a, N) == {(): Fraction(3)}
    with pytest.raises(do.ElementIsScalar):
        do.reduce_element_to_scalar({(): F1})


def test_simplicity_reduce():
    assert do.simplicity_reduce({Lam(()): F1}, N) == []
    steps = do.simplicity_reduce({Lam((1,)): F1}, N)
    assert len(steps) == 1 and set(steps[0].result) == {Lam(())}
    # an operator whose commutators with every Del(i, 1) vanish after one step
    steps = do.simplicity_reduce(op_sub({Lam((1, 2)): F1}, CL.rho({(1, 2): F1})), N)
    assert any(len(s.index) == 2 for s in steps)
    with pytest.raises(ValueError):
        do.simplicity_reduce({}, N)
