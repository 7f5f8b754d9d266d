"""Named identities, each checked on seeded random instances.

Every entry pairs a name with a short description of the statement it
checks and a trial function.  A trial draws one random instance and returns
None when the identity holds there, or a witness describing the failure.
Operator equality is canonical-form equality for classical and twisted
operators and evaluation equality for quantum ones.

Where a displayed formula turned out to disagree with composition the entry
uses the corrected form; the literal forms are kept in the library
(``*_printed`` helpers) and exercised by the test suite.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional

from . import betaops as bo
from . import diffops as do
from . import freealg as fa
from . import oracle
from . import qops as qo
from .diffops import Calculus, Del, Lam, op_add, op_scale, op_sub
from .freealg import Bicharacter, add_into
from .qops import QCalculus, QDelKey, QKey

N = 2


@dataclass
class Identity:
    name: str
    anchor: str
    trials: int
    trial: Callable[[random.Random], Optional[object]]


CATALOG: Dict[str, Identity] = {}


def identity(name: str, anchor: str, trials: int = 10):
    def deco(fn):
        CATALOG[name] = Identity(name, anchor, trials, fn)
        return fn
    return deco


# ------------------------------------------------------------------ shared

_CLASSICAL = Calculus(N)
_SYM = bo.BetaContext.symbolic(N)
_COL = bo.BetaContext.colour(N)
_QSYM = QCalculus(N, Bicharacter.symbolic(N))
_QCOL = QCalculus(N, Bicharacter.colour(N))


def rword(rng, m=2, lo=0):
    return oracle.random_word(rng, N, m, lo)


def rindex(rng, r):
    return tuple(rng.randint(1, N) for _ in range(r))


def rkey(rng, r, d=2) -> Del:
    return Del(rindex(rng, r), tuple(rword(rng, d) for _ in range(r)))


def rop(rng, maxr=2, terms=3, lams=True) -> do.Operator:
    op: do.Operator = {}
    for _ in range(rng.randint(1, terms)):
        c = Fraction(rng.choice([-2, -1, 1, 2, 3]))
        if lams and rng.random() < 0.3:
            add_into(op, Lam(rword(rng)), c)
        else:
            add_into(op, rkey(rng, rng.randint(1, maxr)), c)
    return op


def rgrade(rng):
    return tuple(rng.randint(-1, 1) for _ in range(N))


def rqkey(rng, r) -> QDelKey:
    return QDelKey(rindex(rng, r), tuple(rgrade(rng) for _ in range(r)), tuple(rword(rng) for _ in range(r)))


def one(k) -> do.Operator:
    return {k: Fraction(1)}


def qone(d: Optional[QDelKey], p=(), q=(), g=None) -> qo.QOperator:
    return {QKey(tuple(p), tuple(q), d, g or (0,) * N): Fraction(1)}


def same(calc: Calculus, a, b, what=None, L=6):
    ca, cb = calc.canonical(a), calc.canonical(b)
    if ca == cb:
        return None
    if max(ca.order, cb.order) >= 3:
        # top levels from three up have no unique normal form; decide on words
        v = oracle.eval_equal(a, b, calc.apply, L, calc.n)
        return None if v.equal else (what or f"differ on {fa.format_word(v.witness)}")
    return what or "canonical forms differ"


def q_same(calc: QCalculus, a, b, L=5, what=None):
    v = oracle.eval_equal(a, b, calc.apply, L, N)
    return None if v.equal else (what or f"differ on {fa.format_word(v.witness)}")


def qsub(a, b):
    out = dict(a)
    for k, c in b.items():
        add_into(out, k, -c)
    return out


def gsum(K):
    g = (0,) * N
    for x in K:
        g = tuple(p + q for p, q in zip(g, x))
    return g


# ---------------------------------------------------------------- freealg

@identity("beta-commutator-rules", "twisted commutator of a product, in either slot")
def _bcomm(rng):
    beta = Bicharacter.symbolic(N)
    a, b, c = rword(rng, 3), rword(rng, 3), rword(rng, 3)
    A, B, C = ({w: Fraction(1)} for w in (a, b, c))
    d = lambda w: fa.degree(w, N)
    bc = lambda x, y: fa.beta_commutator(x, y, beta, N)
    lhs = bc(fa.mul(A, B), C)
    rhs = fa.add(fa.scale(fa.mul(bc(A, C), B), beta.value(d(b), d(c))), fa.mul(A, bc(B, C)))
    lhs2 = bc(C, fa.mul(A, B))
    rhs2 = fa.add(fa.mul(bc(C, A), B), fa.scale(fa.mul(A, bc(C, B)), beta.value(d(c), d(a))))
    return None if lhs == rhs and lhs2 == rhs2 else (a, b, c)


@identity("beta-bimultiplicative", "bicharacter is multiplicative in each argument")
def _bimult(rng):
    beta = Bicharacter.symbolic(N)
    g, h, d = (tuple(rng.randint(-2, 2) for _ in range(N)) for _ in range(3))
    ok = beta.value(fa.dadd(g, h), d) == beta.value(g, d) * beta.value(h, d) and \
        beta.value(d, fa.dadd(g, h)) == beta.value(d, g) * beta.value(d, h)
    return None if ok else (g, h, d)


@identity("sigma-automorphism", "grading map respects products")
def _sigma_auto(rng):
    beta = Bicharacter.symbolic(N)
    g = rgrade(rng)
    a, b = oracle.random_element(rng, N, 3), oracle.random_element(rng, N, 3)
    s = lambda x: fa.sigma_apply(g, x, beta, N)
    return None if s(fa.mul(a, b)) == fa.mul(s(a), s(b)) else (g, a, b)


@identity("monic-monomial-probe", "a x1^d x2 b determines the pair (a, b)", trials=3)
def _monic(rng):
    words = list(oracle.words_up_to(N, rng.randint(2, 4)))
    d = max(len(w) for w in words)
    probe = (1,) * d + (2,)
    seen = {}
    for a in words:
        for b in words[:15]:
            w = a + probe + b
            if w in seen and seen[w] != (a, b):
                return (a, b, seen[w])
            seen[w] = (a, b)
    return None


# ---------------------------------------------------------------- diffops

@identity("del-closed-form", "higher operator on words of matching index sequence and on shorter words")
def _del_closed(rng):
    r = rng.randint(1, 3)
    k = rkey(rng, r)
    val = do.del_apply(k, {k.I: Fraction(1)}, N)
    if val != {tuple(itertools.chain.from_iterable(k.A)): Fraction(1)}:
        return ("matching", k)
    for L in range(r):
        for u in fa.all_words(N, L):
            if do.del_apply(k, {u: Fraction(1)}, N):
                return ("short", k, u)
    u = rword(rng, 6)
    if _CLASSICAL.del_word(k.I, k.A, u) != oracle.eval_del(k.I, k.A, u, N):
        return ("oracle", k, u)
    return None


@identity("leibniz-concatenation", "higher operator on a product splits over concatenations of the index tuple")
def _leibniz(rng):
    k = rkey(rng, rng.randint(1, 3))
    a, b = rword(rng, 3), rword(rng, 3)
    out: fa.Element = {}
    for p in range(len(k.I) + 1):
        left = _CLASSICAL.del_word(k.I[:p], k.A[:p], a)
        right = _CLASSICAL.del_word(k.I[p:], k.A[p:], b)
        for u, c in left.items():
            for v, e in right.items():
                add_into(out, u + v, c * e)
    return None if out == _CLASSICAL.del_word(k.I, k.A, a + b) else (k, a, b)


@identity("rho-elimination", "right multiplication as left multiplication minus inner derivations")
def _rho_elim(rng):
    a = oracle.random_element(rng, N, 3)
    op = do.eliminate_rho(a, N)
    for w in oracle.words_up_to(N, 4):
        if do.apply(op, {w: Fraction(1)}, N) != fa.mul({w: Fraction(1)}, a):
            return (a, w)
    return None


@identity("left-mul-rewrite", "left multiplication pulled inside a higher operator")
def _left_mul(rng):
    a, k = rword(rng, 2), rkey(rng, rng.randint(1, 2))
    lhs = do.left_mul_normalize(a, k, N)
    rhs = {Lam(a): Fraction(1)}
    v = oracle.eval_equal(lhs, rhs, lambda op, x: do.apply(lhs, x, N) if op is lhs
                          else fa.mul({a: Fraction(1)}, do.del_apply(k, x, N)), 5, N)
    return None if v.equal else (a, k, v.witness)


@identity("compose-soundness", "symbolic composition acts as functional composition")
def _compose(rng):
    p, q = rop(rng), rop(rng)
    c = do.compose(p, q, N)
    for w in oracle.words_up_to(N, 5):
        a = {w: Fraction(1)}
        if oracle.evaluate(c, a, N) != oracle.evaluate(p, oracle.evaluate(q, a, N), N):
            return (p, q, w)
    return None


@identity("from-commutators", "operator rebuilt from its value at 1 and its commutators with generators")
def _from_comm(rng):
    phi = rop(rng)
    calc = _CLASSICAL
    parts = {t: calc.commutator(phi, {Lam((t,)): Fraction(1)}) for t in range(1, N + 1)}
    const = calc.apply(phi, {(): Fraction(1)})
    psi = do.from_commutators({t: P for t, P in parts.items() if P}, const, N)
    return same(calc, psi, phi, ("rebuild", phi))


@identity("product-order-one", "product of two first-order operators")
def _prod11(rng):
    i, j = rng.randint(1, N), rng.randint(1, N)
    a1, a2 = rword(rng, 2), rword(rng, 2)
    lhs = do.compose(one(Del((i,), (a1,))), one(Del((j,), (a2,))), N)
    rhs = op_add(one(Del((i, j), (a1, a2))), one(Del((j, i), (a2, a1))),
                 do.del_key((j,), (do.del_apply(Del((i,), (a1,)), {a2: Fraction(1)}, N),))
                 if do.del_apply(Del((i,), (a1,)), {a2: Fraction(1)}, N) else {})
    return same(_CLASSICAL, lhs, rhs, (i, j, a1, a2))


def product_2x2_terms(i1, i2, a1, a2, j1, j2, b1, b2, printed: bool = False) -> do.Operator:
    """The column-notation expansion of Del((i1,i2),(a1,a2)) Del((j1,j2),(b1,b2)).

    Six shuffle terms and the lower terms where parts of the left operator
    act on entries of the right one.  ``printed=True`` leaves out the term
    (Del((i1,i2),(a1,a2))(b1), b2 | j1, j2), as in the displayed fourteen-term
    version.
    """
    d = lambda I, A, w: do.del_apply(Del(tuple(I), tuple(A)), {w: Fraction(1)}, N)
    W = lambda w: {w: Fraction(1)}
    cols = [
        ((a1, a2, b1, b2), (i1, i2, j1, j2)),
        ((a1, b1, a2, b2), (i1, j1, i2, j2)),
        ((b1, a1, a2, b2), (j1, i1, i2, j2)),
        ((a1, b1, b2, a2), (i1, j1, j2, i2)),
        ((b1, a1, b2, a2), (j1, i1, j2, i2)),
        ((b1, b2, a1, a2), (j1, j2, i1, i2)),
    ]
    out: do.Operator = {}
    for A, I in cols:
        add_into(out, Del(I, A), Fraction(1))
    lower = [
        ((W(a1), d([i2], [a2], b1), W(b2)), (i1, j1, j2)),
        ((W(a1), W(b1), d([i2], [a2], b2)), (i1, j1, j2)),
        ((W(b1), W(a1), d([i2], [a2], b2)), (j1, i1, j2)),
        ((d([i1], [a1], b1), W(a2), W(b2)), (j1, i2, j2)),
        ((d([i1], [a1], b1), W(b2), W(a2)), (j1, j2, i2)),
        ((W(b1), d([i1], [a1], b2), W(a2)), (j1, j2, i2)),
        ((d([i1], [a1], b1), d([i2], [a2], b2)), (j1, j2)),
        ((W(b1), d([i1, i2], [a1, a2], b2)), (j1, j2)),
    ]
    if not printed:
        lower.append(((d([i1, i2], [a1, a2], b1), W(b2)), (j1, j2)))
    for A, I in lower:
        if all(A):
            out = op_add(out, do.del_key(I, A))
    return out


def _rand_2x2(rng):
    return (rng.randint(1, N), rng.randint(1, N), rword(rng, 2), rword(rng, 2),
            rng.randint(1, N), rng.randint(1, N), rword(rng, 2), rword(rng, 2))


@identity("product-dels-2x2", "product of two second-order operators, full column expansion", trials=5)
def _prod22(rng):
    i1, i2, a1, a2, j1, j2, b1, b2 = args = _rand_2x2(rng)
    lhs = do.compose(one(Del((i1, i2), (a1, a2))), one(Del((j1, j2), (b1, b2))), N)
    return same(_CLASSICAL, lhs, product_2x2_terms(*args), args)


def product_1xs_terms(i, a, J, B) -> do.Operator:
    """Del(i, a) Del(J, B): insert (i, a) anywhere, or apply Del(i, a) to one entry of B."""
    out: do.Operator = {}
    s = len(J)
    for l in range(s + 1):
        add_into(out, Del(J[:l] + (i,) + J[l:], B[:l] + (a,) + B[l:]), Fraction(1))
    for l in range(s):
        v = do.del_apply(Del((i,), (a,)), {B[l]: Fraction(1)}, N)
        if v:
            out = op_add(out, do.del_key(J, [{w: Fraction(1)} for w in B[:l]] + [v] + [{w: Fraction(1)} for w in B[l + 1:]]))
    return out


def product_rx1_terms(I, A, j, b) -> do.Operator:
    """Del(I, A) Del(j, b): insert (j, b) anywhere, or let a block I[p..p+s] act on b."""
    out: do.Operator = {}
    r = len(I)
    for l in range(r + 1):
        add_into(out, Del(I[:l] + (j,) + I[l:], A[:l] + (b,) + A[l:]), Fraction(1))
    for p in range(r):
        for e in range(p + 1, r + 1):
            v = do.del_apply(Del(I[p:e], A[p:e]), {b: Fraction(1)}, N)
            if v:
                entries = [{w: Fraction(1)} for w in A[:p]] + [v] + [{w: Fraction(1)} for w in A[e:]]
                out = op_add(out, do.del_key(I[:p] + (j,) + I[e:], entries))
    return out


@identity("product-dels-1xs", "first-order operator times a higher operator, column expansion", trials=8)
def _prod1s(rng):
    i, a = rng.randint(1, N), rword(rng, 2)
    k = rkey(rng, rng.randint(1, 3))
    lhs = do.compose(one(Del((i,), (a,))), one(k), N)
    return same(_CLASSICAL, lhs, product_1xs_terms(i, a, k.I, k.A), (i, a, k))


@identity("product-dels-rx1", "higher operator times a first-order operator, column expansion", trials=8)
def _prodr1(rng):
    j, b = rng.randint(1, N), rword(rng, 2)
    k = rkey(rng, rng.randint(1, 3))
    lhs = do.compose(one(k), one(Del((j,), (b,))), N)
    return same(_CLASSICAL, lhs, product_rx1_terms(k.I, k.A, j, b), (k, j, b))


@identity("shuffle-top-part", "product of higher operators is the shuffle sum plus lower order")
def _shuffle(rng):
    r, s = rng.randint(1, 2), rng.randint(1, 2)
    k1, k2 = rkey(rng, r), rkey(rng, s)
    diff = op_sub(do.compose(one(k1), one(k2), N), do.shuffle_top(k1.I, k1.A, k2.I, k2.A))
    return None if do.order(diff, N) <= r + s - 1 else (k1, k2)


@identity("symmetric-relation", "symmetrized higher operator differs from the chain of first-order ones by lower order", trials=6)
def _symmetric(rng):
    r = rng.randint(2, 3)
    ks = [rkey(rng, 1) for _ in range(r)]
    I, A = tuple(k.I[0] for k in ks), tuple(k.A[0] for k in ks)
    diff = op_sub(do.symmetric_sum(I, A), do.iterated(ks, N))
    return None if do.order(diff, N) <= r - 1 else ks


def commutator_lambda_rhs(I, A, a):
    """sum over j >= 2 of lambda_{Del(I[:j-1])(a)} Del(I[j-1:]) plus lambda_{Del(I)(a)}."""
    calc = _CLASSICAL
    out: do.Operator = {}
    r = len(I)
    for p in range(1, r + 1):
        for w, c in calc.del_word(I[:p], A[:p], a).items():
            op = {Lam(w): Fraction(1)} if p == r else calc.compose({Lam(w): Fraction(1)}, one(Del(I[p:], A[p:])))
            out = op_add(out, op_scale(op, c))
    return out


def commutator_rho_rhs(I, A, a):
    """sum over j >= 2 of rho_{Del(I[j-1:])(a)} Del(I[:j-1]) plus rho_{Del(I)(a)}."""
    calc = _CLASSICAL
    out: do.Operator = {}
    r = len(I)
    for p in range(0, r):
        v = calc.del_word(I[p:], A[p:], a)
        if not v:
            continue
        op = calc.rho(v) if p == 0 else calc.compose(calc.rho(v), one(Del(I[:p], A[:p])))
        out = op_add(out, op)
    return out


@identity("commutator-lambda", "commutator of a higher operator with a left multiplication")
def _comm_lam(rng):
    k, a = rkey(rng, rng.randint(1, 3)), rword(rng, 3)
    lhs = _CLASSICAL.commutator(one(k), {Lam(a): Fraction(1)})
    return same(_CLASSICAL, lhs, commutator_lambda_rhs(k.I, k.A, a), (k, a))


@identity("commutator-rho", "commutator of a higher operator with a right multiplication")
def _comm_rho(rng):
    k, a = rkey(rng, rng.randint(1, 3)), rword(rng, 3)
    lhs = _CLASSICAL.commutator(one(k), _CLASSICAL.rho({a: Fraction(1)}))
    return same(_CLASSICAL, lhs, commutator_rho_rhs(k.I, k.A, a), (k, a))


@identity("commuting-dels", "commutator of higher operators of orders r and t has order at most r + t - 1")
def _commuting(rng):
    k1, k2 = rkey(rng, rng.randint(1, 2)), rkey(rng, rng.randint(1, 2))
    c = do.op_commutator(one(k1), one(k2), N)
    return None if do.order(c, N) <= len(k1.I) + len(k2.I) - 1 else (k1, k2)


@identity("order-subadditive", "order of a product of Del combinations is at most the sum of the orders")
def _subadd(rng):
    # a multiplication part can raise the level: lambda_a Del(i, w) needs level 2
    p, q = rop(rng, lams=False), rop(rng, lams=False)
    return None if do.order(do.compose(p, q, N), N) <= do.order(p, N) + do.order(q, N) else (p, q)


@identity("multilinearity", "higher operator is linear in each tuple entry")
def _multilin(rng):
    r = rng.randint(1, 3)
    I = rindex(rng, r)
    A = [{rword(rng): Fraction(1)} for _ in range(r)]
    p = rng.randrange(r)
    b1, b2 = rword(rng), rword(rng)
    c1, c2 = Fraction(rng.randint(1, 3)), Fraction(rng.randint(-3, -1))
    A[p] = fa.add(fa.scale({b1: Fraction(1)}, c1), fa.scale({b2: Fraction(1)}, c2))
    lhs = do.del_key(I, A)
    A1, A2 = list(A), list(A)
    A1[p], A2[p] = {b1: Fraction(1)}, {b2: Fraction(1)}
    rhs = op_add(op_scale(do.del_key(I, A1), c1), op_scale(do.del_key(I, A2), c2))
    v = oracle.eval_equal(lhs, rhs, lambda op, x: oracle.evaluate(op, x, N), 5, N)
    return None if v.equal else (I, A)


@identity("known-relation", "a four-term relation among order-two and order-one operators vanishes", trials=1)
def _known(rng):
    calc = _CLASSICAL
    rel = op_add(one(Del((1, 2), ((2, 1), ()))), op_scale(one(Del((1, 2), ((1, 2), ()))), -1),
                 op_scale(calc.compose({Lam((2,)): Fraction(1)}, one(Del((2,), ((),)))), -1),
                 one(Del((2,), ((2,),))))
    return None if calc.canonical(rel).is_zero() else "relation does not vanish"


@identity("canonical-idempotent", "canonical form is stable under re-normalization")
def _idem(rng):
    c = _CLASSICAL.canonical(do.compose(rop(rng), rop(rng, 1), N))
    return None if _CLASSICAL.canonical(c.to_normal()) == c else c


@identity("canonical-vs-evaluation", "canonical equality agrees with evaluation equality", trials=10)
def _canon_eval(rng):
    calc = _CLASSICAL
    p = do.compose(rop(rng), rop(rng, 1), N)
    if rng.random() < 0.5:
        k = rkey(rng, 3)
        q = op_add(p, calc.defect(k.I, k.A), op_scale(one(k), -1),
                   one(Del(k.I, ((), (), tuple(itertools.chain.from_iterable(k.A))))))
    else:
        q = op_add(p, rop(rng, 1, 1))
    c1, c2 = calc.canonical(p), calc.canonical(q)
    L = max(c1.order, c2.order, 0) + max(do._max_degree(c1), do._max_degree(c2)) + 2
    ev = oracle.eval_equal(p, q, lambda op, x: oracle.evaluate(op, x, N), min(L, 7), N).equal
    return None if (c1 == c2) == ev else (p, q)


@identity("goingup", "moving a tuple entry one slot right costs an inserted commutator slot")
def _goingup(rng):
    I, J = rindex(rng, rng.randint(1, 2)), rindex(rng, rng.randint(1, 2))
    A, B = tuple(rword(rng) for _ in I), tuple(rword(rng) for _ in J)
    w = rword(rng, 2)
    g = bo.beta_goingup(I, J, A, B, w, bo.BetaContext(Bicharacter.trivial_for(N)))
    return None if g.holds else (I, J, A, B, w)


@identity("ps-form", "truncated power-series coefficients reproduce the operator on short words", trials=6)
def _ps(rng):
    phi = rop(rng)
    const, coeffs = do.ps_form(phi, 4, N)
    res = op_sub(phi, do.ps_operator(const, coeffs))
    ok = oracle.kills_words(res, lambda op, x: do.apply(op, x, N), range(5), N).equal
    return None if ok else phi


@identity("d0-injectivity", "left-right multiplication sums are detected by the probe x1^d x2", trials=20)
def _d0(rng):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        terms[(rword(rng, 3), rword(rng, 3))] = Fraction(rng.choice([-2, -1, 1, 2]))
    lst = [(c, a, b) for (a, b), c in terms.items()]
    probe, value = do.d0_witness(lst, N)
    direct = do.apply(do.d0_operator(lst, N), {probe: Fraction(1)}, N)
    return None if value and value == direct else lst


@identity("derivation-criterion", "an order-zero operator is a derivation iff it acts on generators as one", trials=10)
def _der_crit(rng):
    pairs = [(Fraction(rng.choice([-2, 1, 3])), rword(rng, 2, 1)) for _ in range(rng.randint(1, 3))]
    terms = []
    for c, a in pairs:
        terms += [(c, a, ()), (-c, (), a)]
    if rng.random() < 0.5:
        terms.append((Fraction(1), rword(rng, 2, 1), rword(rng, 2, 1)))
    op = do.d0_operator(terms, N)
    is_der = True
    for r in oracle.words_up_to(N, 2):
        for s in oracle.words_up_to(N, 2):
            lhs = do.apply(op, {r + s: Fraction(1)}, N)
            rhs = fa.add(fa.mul(do.apply(op, {r: Fraction(1)}, N), {s: Fraction(1)}),
                         fa.mul({r: Fraction(1)}, do.apply(op, {s: Fraction(1)}, N)))
            is_der = is_der and lhs == rhs
    collected = [(c, a, b) for (a, b), c in do._tensor(terms).items()]
    return None if is_der == do.is_derivation_d0(collected, N) else terms


@identity("inner-derivations", "a derivation of order zero is a sum of inner derivations", trials=10)
def _inner(rng):
    pairs: Dict = {}
    for _ in range(rng.randint(1, 3)):
        add_into(pairs, rword(rng, 3, 1), Fraction(rng.choice([-2, -1, 1, 2])))
    terms = []
    for a, c in pairs.items():
        terms += [(c, a, ()), (-c, (), a)]
    got = do.decompose_inner_derivation(terms, N)
    rebuilt = []
    for c, a in got:
        w = next(iter(a))
        rebuilt += [(c, w, ()), (-c, (), w)]
    return None if do._tensor(rebuilt) == do._tensor(terms) else (terms, got)


@identity("module-simple", "a nonconstant element is sent to a nonzero scalar by one higher operator", trials=20)
def _module_simple(rng):
    a: fa.Element = {}
    while not a or fa.is_scalar_element(a):
        a = oracle.random_element(rng, N, 4, 4)
    k, c = do.reduce_element_to_scalar(a)
    val = do.del_apply(k, a, N)
    return None if val == {(): c} and c else (a, k, c)


@identity("simplicity-descent", "commutators reduce any nonzero operator to a unit", trials=4)
def _simple(rng):
    phi = rop(rng, 2, 2)
    if _CLASSICAL.canonical(phi).is_zero():
        return None
    steps = do.simplicity_reduce(phi, N)
    last = _CLASSICAL.canonical(steps[-1].result if steps else phi)
    return None if last.order == 0 and do._max_degree(last) == 0 and not last.is_zero() else phi


@identity("freeness-order-one", "first-order operators with word coefficients and lambda_1 are independent", trials=1)
def _free1(rng):
    words = list(oracle.words_up_to(N, 2))
    fam = [one(Del((i,), (w,))) for i in range(1, N + 1) for w in words] + [{Lam(()): Fraction(1)}]
    probes = [w + (i,) for w in oracle.words_up_to(N, 2) for i in range(1, N + 1)] + [()]
    rep = oracle.independence_certificate(fam, probes, lambda op, x: do.apply(op, x, N))
    return None if rep.independent else rep


@identity("freeness-fixed-length", "rho_q lambda_p Del(I, A) with |I| = 2 are independent", trials=3)
def _free2(rng):
    calc = _CLASSICAL
    fam, seen = [], set()
    while len(fam) < 6:
        p, q, k = rword(rng, 1), rword(rng, 1), rkey(rng, 2, 1)
        if (p, q, k) in seen:
            continue
        seen.add((p, q, k))
        fam.append(calc.compose(calc.rho({q: Fraction(1)}), calc.compose({Lam(p): Fraction(1)}, one(k))))
    probes = list(oracle.words_up_to(N, 4))
    rep = oracle.independence_certificate(fam, probes, lambda op, x: do.apply(op, x, N))
    return None if rep.independent else rep


def level_three_relation():
    """A nonzero combination of level-three keys with I = (1, 2, 1) that is the zero operator."""
    I = (1, 2, 1)
    terms = [(((), (1, 1, 2), ()), 1), (((), (1, 2), (1,)), -1), (((), (2, 1), (1,)), 1),
             (((), (2, 1, 1), ()), -1), (((1,), (1, 2), ()), -1), (((1,), (2, 1), ()), 1)]
    return {Del(I, A): Fraction(c) for A, c in terms}


@identity("fixed-length-relation", "level-three keys with one index sequence are not independent", trials=1)
def _lvl3(rng):
    rel = level_three_relation()
    v = oracle.kills_words(rel, lambda op, x: do.apply(op, x, N), range(9), N)
    return None if v.equal else v.witness


@identity("centre-step", "an operator commuting with every generator is a right multiplication")
def _centre(rng):
    a = oracle.random_element(rng, N, 3)
    phi = _CLASSICAL.rho(a)
    for t in range(1, N + 1):
        if not _CLASSICAL.canonical(_CLASSICAL.commutator(phi, {Lam((t,)): Fraction(1)})).is_zero():
            return ("hypothesis", a)
    return same(_CLASSICAL, phi, do.eliminate_rho(do.apply(phi, {(): Fraction(1)}, N), N), a)


# ------------------------------------------------------------------- beta

@identity("beta-degeneration", "trivial bicharacter reproduces the classical calculus")
def _bdegen(rng):
    ctx = bo.BetaContext(Bicharacter.trivial_for(N))
    p, q = rop(rng), rop(rng)
    return None if ctx.calc.canonical(ctx.calc.compose(p, q)) == _CLASSICAL.canonical(do.compose(p, q, N)) else (p, q)


@identity("beta-left-derivation", "twisted first-order operator obeys the twisted Leibniz law")
def _bleft(rng):
    ctx = _SYM
    i, a = rng.randint(1, N), rword(rng, 2)
    r, s = rword(rng, 3), rword(rng, 3)
    k = Del((i,), (a,))
    lhs = bo.beta_del_apply(k, {r + s: Fraction(1)}, ctx)
    f = ctx.b(ctx.calc.kdeg((i,), (a,)), fa.degree(r, N))
    rhs = fa.add(fa.mul(bo.beta_del_apply(k, {r: Fraction(1)}, ctx), {s: Fraction(1)}),
                 fa.scale(fa.mul({r: Fraction(1)}, bo.beta_del_apply(k, {s: Fraction(1)}, ctx)), f))
    return None if lhs == rhs else (k, r, s)


@identity("beta-rho", "twisted right multiplication in normal form")
def _brho(rng):
    a = rword(rng, 3)
    op = bo.beta_rho({a: Fraction(1)}, _SYM)
    for w in oracle.words_up_to(N, 4):
        if _SYM.eval(op, {w: Fraction(1)}) != bo.beta_rho_apply(a, {w: Fraction(1)}, _SYM):
            return (a, w)
    return None


@identity("beta-inner", "left minus twisted right multiplication as a sum of first-order operators")
def _binner(rng):
    a = rword(rng, 3)
    lhs = op_sub({Lam(a): Fraction(1)}, bo.beta_rho({a: Fraction(1)}, _SYM))
    v = oracle.eval_equal(lhs, bo.beta_inner(a, _SYM), _SYM.eval, 4, N)
    return None if v.equal else a


@identity("beta-inner-derivation", "left minus twisted right multiplication is a twisted derivation")
def _binnerder(rng):
    ctx = _SYM
    a = rword(rng, 2, 1)
    op = bo.beta_inner(a, ctx)
    r, s = rword(rng, 3), rword(rng, 3)
    lhs = ctx.eval(op, {r + s: Fraction(1)})
    f = ctx.b(fa.degree(a, N), fa.degree(r, N))
    rhs = fa.add(fa.mul(ctx.eval(op, {r: Fraction(1)}), {s: Fraction(1)}),
                 fa.scale(fa.mul({r: Fraction(1)}, ctx.eval(op, {s: Fraction(1)})), f))
    return None if lhs == rhs else (a, r, s)


@identity("beta-d0-product", "twisted tensor product matches composition of order-zero operators")
def _bd0(rng):
    ctx = _SYM
    a, b, u, v = (rword(rng, 2) for _ in range(4))
    c, au, vb = bo.d0_beta_product((a, b), (u, v), ctx)
    lhs = ctx.calc.compose(bo.d0_beta_operator(Fraction(1), a, b, ctx), bo.d0_beta_operator(Fraction(1), u, v, ctx))
    v = oracle.eval_equal(lhs, bo.d0_beta_operator(c, au, vb, ctx), ctx.calc.apply, 5, N)
    return None if v.equal else ((a, b, u, v), v.witness)


@identity("beta-closed-form", "twisted higher operator on words of matching index sequence")
def _bclosed(rng):
    k = rkey(rng, rng.randint(1, 3))
    val = bo.beta_del_apply(k, {k.I: Fraction(1)}, _SYM)
    ok = val == {tuple(itertools.chain.from_iterable(k.A)): Fraction(1)}
    for L in range(len(k.I)):
        for u in fa.all_words(N, L):
            ok = ok and not bo.beta_del_apply(k, {u: Fraction(1)}, _SYM)
    u = rword(rng, 6)
    ok = ok and _SYM.calc.del_word(k.I, k.A, u) == oracle.eval_del(k.I, k.A, u, N, _SYM.beta)
    return None if ok else k


@identity("beta-order-one-rules", "twisted commutators of a first-order operator with multiplications and another first-order operator")
def _bord1(rng):
    i, j, a, b = rng.randint(1, N), rng.randint(1, N), rword(rng, 2), rword(rng, 2)
    k = Del((i,), (a,))
    for ctx in (_SYM, _COL):
        lhs = ctx.calc.bracket(one(k), {Lam(b): Fraction(1)})
        rhs = {Lam(w): c for w, c in ctx.calc.del_word((i,), (a,), b).items()}
        if same(ctx.calc, lhs, rhs):
            return ("lambda", k, b)
    ctx = _COL
    lhs = ctx.calc.bracket(one(k), bo.beta_rho({b: Fraction(1)}, ctx))
    if same(ctx.calc, lhs, bo.beta_rho(ctx.calc.del_word((i,), (a,), b), ctx)):
        return ("rho", k, b)
    lhs = ctx.calc.bracket(one(k), one(Del((j,), (b,))))
    if same(ctx.calc, lhs, bo.order_one_bracket(i, a, j, b, ctx)):
        return ("bracket", k, j, b)
    return None


@identity("beta-lambda-swap", "twisted commutator of a higher operator with a left multiplication")
def _blswap(rng):
    k, b = rkey(rng, rng.randint(1, 3)), rword(rng, 3)
    for ctx in (_SYM, _COL):
        lhs = ctx.calc.bracket(one(k), {Lam(b): Fraction(1)})
        if same(ctx.calc, lhs, bo.swap_operator(bo.lambda_swap(k.I, k.A, b, ctx), "lambda", ctx)):
            return (k, b)
    return None


@identity("beta-rho-swap", "twisted commutator of a higher operator with a twisted right multiplication")
def _brswap(rng):
    ctx = _COL
    k, b = rkey(rng, rng.randint(1, 3)), rword(rng, 3)
    lhs = ctx.calc.bracket(one(k), bo.beta_rho({b: Fraction(1)}, ctx))
    return same(ctx.calc, lhs, bo.swap_operator(bo.rho_swap(k.I, k.A, b, ctx), "rho", ctx), (k, b))


@identity("beta-leibniz", "twisted higher operator on a product splits with twist scalars")
def _bleib(rng):
    k, a, b = rkey(rng, rng.randint(1, 3)), rword(rng, 3), rword(rng, 3)
    for ctx in (_SYM, _COL):
        if bo.leibniz_split(k.I, k.A, a, b, ctx) != ctx.calc.del_word(k.I, k.A, a + b):
            return (k, a, b)
    return None


@identity("beta-shuffle", "twisted product is the scaled shuffle sum plus lower order")
def _bshuf(rng):
    r, s = rng.randint(1, 2), rng.randint(1, 2)
    k1, k2 = rkey(rng, r), rkey(rng, s)
    for ctx in (_SYM, _COL):
        d = op_sub(ctx.calc.compose(one(k1), one(k2)), bo.beta_shuffle_top(k1.I, k1.A, k2.I, k2.A, ctx))
        if ctx.calc.order(d) > r + s - 1:
            return (k1, k2)
    return None


@identity("beta-commutator-order", "twisted commutator of higher operators drops the order under the colour condition")
def _bcommord(rng):
    r, s = rng.randint(1, 2), rng.randint(1, 2)
    k1, k2 = rkey(rng, r), rkey(rng, s)
    ctx = _COL
    return None if ctx.calc.order(ctx.calc.bracket(one(k1), one(k2))) <= r + s - 1 else (k1, k2)


@identity("beta-goingup", "twisted version of moving a tuple entry one slot right")
def _bgoing(rng):
    I, J = rindex(rng, rng.randint(1, 2)), rindex(rng, rng.randint(1, 2))
    A, B = tuple(rword(rng) for _ in I), tuple(rword(rng) for _ in J)
    w = rword(rng, 2)
    for ctx in (_SYM, _COL):
        if not bo.beta_goingup(I, J, A, B, w, ctx).holds:
            return (I, J, A, B, w)
    return None


@identity("beta-symmetric", "scaled symmetrization differs from the twisted chain by lower order", trials=6)
def _bsym(rng):
    ks = [rkey(rng, 1) for _ in range(rng.randint(2, 3))]
    I, A = tuple(k.I[0] for k in ks), tuple(k.A[0] for k in ks)
    for ctx in (_SYM, _COL):
        d = op_sub(bo.beta_symmetric_sum(I, A, ctx), bo.chain(ks, ctx))
        if ctx.calc.order(d) > len(ks) - 1:
            return ks
    return None


@identity("beta-canonical", "twisted canonical form is idempotent and matches evaluation")
def _bcanon(rng):
    ctx = _SYM
    p = ctx.calc.compose(rop(rng), rop(rng))
    c = ctx.calc.canonical(p)
    if ctx.calc.canonical(c.to_normal()) != c:
        return ("idempotence", p)
    return None if oracle.eval_equal(p, c.to_normal(), ctx.eval, 5, N).equal else ("evaluation", p)


@identity("beta-order-subadditive", "twisted composition of Del combinations respects the order filtration")
def _bsub(rng):
    ctx = _SYM
    p, q = rop(rng, lams=False), rop(rng, lams=False)
    return None if ctx.calc.order(ctx.calc.compose(p, q)) <= ctx.calc.order(p) + ctx.calc.order(q) else (p, q)


# ---------------------------------------------------------------- quantum

@identity("q-closed-form", "quantum higher operator on words of matching index sequence")
def _qclosed(rng):
    calc = _QSYM
    r = rng.randint(1, 3)
    d = rqkey(rng, r)
    want = Fraction(1)
    for j in range(r):
        for s in range(j + 1, r):
            want = want * calc.b(d.K[j], calc.e[d.I[s]])
    val = calc.del_apply(d, {d.I: Fraction(1)})
    if val != {tuple(itertools.chain.from_iterable(d.A)): want}:
        return ("matching", d)
    for L in range(r):
        for u in fa.all_words(N, L):
            if calc.del_apply(d, {u: Fraction(1)}):
                return ("short", d, u)
    u = rword(rng, 6)
    if calc.del_word(d.I, d.K, d.A, u) != oracle.eval_qdel(d.I, d.K, d.A, u, N, calc.beta):
        return ("oracle", d, u)
    return None


@identity("q-integers", "skew derivative of a power of x1 gives a q-integer", trials=1)
def _qint(rng):
    calc = _QCOL
    d = QDelKey((1,), ((0, 1),), ((),))
    q = calc.beta.entries[1][0]
    for m in range(1, 7):
        want = Fraction(0)
        for t in range(m):
            want = want + q ** t
        if calc.del_apply(d, {(1,) * m: Fraction(1)}) != {(1,) * (m - 1): want}:
            return m
    return None


@identity("q-right-skew", "first-order quantum operator is a right skew derivation")
def _qskew(rng):
    calc = _QSYM
    d = rqkey(rng, 1)
    r, s = rword(rng, 3), rword(rng, 3)
    lhs = calc.del_word(d.I, d.K, d.A, r + s)
    rhs = fa.add(fa.mul(calc.del_word(d.I, d.K, d.A, r), fa.sigma_apply(d.K[0], {s: Fraction(1)}, calc.beta, N)),
                 fa.mul({r: Fraction(1)}, calc.del_word(d.I, d.K, d.A, s)))
    return None if lhs == rhs else (d, r, s)


@identity("q-sigma-push", "grading map moved past a homogeneous operator")
def _qpush(rng):
    calc = _QSYM
    g = rgrade(rng)
    k = QKey(rword(rng, 1), rword(rng, 1), rqkey(rng, rng.randint(1, 2)) if rng.random() < 0.7 else None, rgrade(rng))
    op = {k: Fraction(1)}
    lhs = calc.compose(qone(None, g=g), op)
    return q_same(calc, lhs, calc.sigma_conjugate(g, op), what=(g, k))


@identity("q-skew-group-ring", "products of order-zero quantum terms follow the skew group ring rule")
def _qsgr(rng):
    calc = _QSYM
    r1, r2, g1, g2 = rword(rng, 2), rword(rng, 2), rgrade(rng), rgrade(rng)
    lhs = calc.compose(qone(None, p=r1, g=g1), qone(None, p=r2, g=g2))
    rhs = {QKey(r1 + r2, (), None, gsum((g1, g2))): calc.b(g1, calc.wdeg(r2))}
    return q_same(calc, lhs, rhs, what=(r1, g1, r2, g2))


@identity("q-der-mult", "first-order quantum operator against left and right multiplications")
def _qdermult(rng):
    calc = _QSYM
    d = rqkey(rng, 1)
    r = rword(rng, 3)
    lhs = qsub(calc.compose(qone(d), qone(None, p=r)), calc.compose(qone(None, p=r), qone(d)))
    rhs = {QKey(w, (), None, d.K[0]): c for w, c in calc.del_word(d.I, d.K, d.A, r).items()}
    bad = q_same(calc, lhs, rhs, what=("lambda", d, r))
    if bad:
        return bad
    sr = fa.sigma_apply(d.K[0], {r: Fraction(1)}, calc.beta, N)
    lhs = qsub(calc.compose(qone(d), qone(None, q=r)), calc.compose(qo.qrho(sr, N), qone(d)))
    return q_same(calc, lhs, qo.qrho(calc.del_word(d.I, d.K, d.A, r), N), what=("rho", d, r))


def q_swap_lambda_rhs(calc: QCalculus, d: QDelKey, a, printed: bool = False):
    """sum over splits (I1, I2), I1 nonempty, of lambda_{Del_1(a)} Del_2 sigma_{K_1}.

    ``printed=True`` also requires I2 nonempty, dropping lambda_{Del(a)} sigma_K.
    """
    r = len(d.I)
    out = {}
    for p in range(1, r if printed else r + 1):
        rest = QDelKey(d.I[p:], d.K[p:], d.A[p:]) if p < r else None
        for w, c in calc.del_word(d.I[:p], d.K[:p], d.A[:p], tuple(a)).items():
            add_into(out, QKey(w, (), rest, gsum(d.K[:p])), c)
    return out


def q_swap_rho_rhs(calc: QCalculus, d: QDelKey, b, printed: bool = False):
    """sum over splits (I1, I2), I2 nonempty, of rho_{Del_2(sigma_{K_1}(b))} Del_1.

    ``printed=True`` also requires I1 nonempty, dropping rho_{Del(b)}.
    """
    r = len(d.I)
    out = {}
    for p in range(1 if printed else 0, r):
        left = QDelKey(d.I[:p], d.K[:p], d.A[:p]) if p else None
        sb = fa.sigma_apply(gsum(d.K[:p]), {tuple(b): Fraction(1)}, calc.beta, N)
        for w, c in calc.del_apply(QDelKey(d.I[p:], d.K[p:], d.A[p:]), sb).items():
            add_into(out, QKey((), w, left, (0,) * N), c)
    return out


@identity("q-swap-lambda", "quantum higher operator against a left multiplication")
def _qsl(rng):
    calc = _QSYM
    d, a = rqkey(rng, rng.randint(1, 2)), rword(rng, 3)
    lhs = qsub(calc.compose(qone(d), qone(None, p=a)), calc.compose(qone(None, p=a), qone(d)))
    return q_same(calc, lhs, q_swap_lambda_rhs(calc, d, a), what=(d, a))


@identity("q-swap-rho", "quantum higher operator against a right multiplication")
def _qsr(rng):
    calc = _QSYM
    d, b = rqkey(rng, rng.randint(1, 2)), rword(rng, 3)
    sb = fa.sigma_apply(gsum(d.K), {b: Fraction(1)}, calc.beta, N)
    lhs = qsub(calc.compose(qone(d), qone(None, q=b)), calc.compose(qo.qrho(sb, N), qone(d)))
    return q_same(calc, lhs, q_swap_rho_rhs(calc, d, b), what=(d, b))


@identity("q-leibniz", "quantum higher operator on a product, right factor twisted by the used gradings")
def _qleib(rng):
    calc = _QSYM
    d = rqkey(rng, rng.randint(1, 3))
    u, v = rword(rng, 3), rword(rng, 3)
    r = len(d.I)
    tot: fa.Element = {}
    for p in range(r + 1):
        left = calc.del_word(d.I[:p], d.K[:p], d.A[:p], u)
        rest = QDelKey(d.I[p:], d.K[p:], d.A[p:]) if p < r else None
        right = calc.del_apply(rest, fa.sigma_apply(gsum(d.K[:p]), {v: Fraction(1)}, calc.beta, N))
        for x, c in left.items():
            for y, e in right.items():
                add_into(tot, x + y, c * e)
    return None if tot == calc.del_word(d.I, d.K, d.A, u + v) else (d, u, v)


@identity("q-compose-soundness", "quantum composition acts as functional composition", trials=8)
def _qcomp(rng):
    calc = _QSYM

    def rq():
        op = {}
        for _ in range(rng.randint(1, 2)):
            k = QKey(rword(rng, 1), rword(rng, 1), rqkey(rng, rng.randint(1, 2)) if rng.random() < 0.8 else None, rgrade(rng))
            add_into(op, k, Fraction(rng.choice([1, -1, 2])))
        return op
    p, q = rq(), rq()
    c = calc.compose(p, q)
    for w in oracle.words_up_to(N, 5):
        a = {w: Fraction(1)}
        if oracle.evaluate(c, a, N, calc.beta) != oracle.evaluate(p, oracle.evaluate(q, a, N, calc.beta), N, calc.beta):
            return (p, q, w)
    return None


@identity("q-shuffle", "quantum product is the scaled shuffle sum plus lower order")
def _qshuf(rng):
    calc = _QSYM
    r, s = rng.randint(1, 2), rng.randint(1, 2)
    d1, d2 = rqkey(rng, r), rqkey(rng, s)
    diff = qsub(calc.compose(qone(d1), qone(d2)), calc.shuffle_top(d1.I, d1.K, d1.A, d2.I, d2.K, d2.A))
    return None if calc.order_bound(diff) <= r + s - 1 else (d1, d2)


@identity("q-symmetric", "scaled symmetrization differs from the quantum chain by lower order", trials=6)
def _qsym(rng):
    calc = _QSYM
    r = rng.randint(2, 3)
    d = rqkey(rng, r)
    ch = qone(None)
    for m in range(r):
        ch = calc.compose(ch, qone(QDelKey(d.I[m:m + 1], d.K[m:m + 1], d.A[m:m + 1])))
    diff = qsub(calc.symmetric_sum(d.I, d.K, d.A), ch)
    return None if calc.order_bound(diff) <= r - 1 else d


@identity("q-left-mul", "left multiplication pulled inside a quantum higher operator")
def _qlm(rng):
    calc = _QSYM
    a, d = rword(rng, 2), rqkey(rng, rng.randint(1, 2))
    return q_same(calc, calc.left_mul(a, d), calc.compose(qone(None, p=a), qone(d)), what=(a, d))


@identity("q-goingup", "quantum version of moving a tuple entry one slot right")
def _qgoing(rng):
    calc = _QSYM
    I, J = rindex(rng, rng.randint(1, 2)), rindex(rng, rng.randint(1, 2))
    K, L = tuple(rgrade(rng) for _ in I), tuple(rgrade(rng) for _ in J)
    A, B = tuple(rword(rng) for _ in I), tuple(rword(rng) for _ in J)
    w = rword(rng, 2)
    lhs = qone(QDelKey(I + J, K + L, A[:-1] + (A[-1] + w,) + B))
    return q_same(calc, lhs, calc.goingup(I, K, A, J, L, B, w), what=(I, J, w))


@identity("q-degeneration", "zero gradings and trivial bicharacter reproduce the classical calculus", trials=6)
def _qdegen(rng):
    calc = QCalculus(N, Bicharacter.trivial_for(N))
    k1, k2 = rkey(rng, rng.randint(1, 2)), rkey(rng, rng.randint(1, 2))
    z = (0,) * N
    qd = lambda k: qone(QDelKey(k.I, (z,) * len(k.I), k.A))
    lhs = calc.compose(qd(k1), qd(k2))
    classical = do.compose(one(k1), one(k2), N)
    for w in oracle.words_up_to(N, 5):
        if calc.apply(lhs, {w: Fraction(1)}) != do.apply(classical, {w: Fraction(1)}, N):
            return (k1, k2, w)
    return None


@identity("q-centre-step", "an operator twisted-commuting with all generators is rho_{phi(1)} sigma_gamma")
def _qcentre(rng):
    calc = _QSYM
    g = rgrade(rng)
    b = rword(rng, 2)
    phi = {QKey((), b, None, g): Fraction(rng.choice([1, 2, -3]))}
    for t in range(1, N + 1):
        if q_same(calc, calc.commutator_gamma(phi, qone(None, p=(t,)), g), {}):
            return ("hypothesis", b, g)
    val = calc.apply(phi, {(): Fraction(1)})
    return q_same(calc, phi, {QKey((), w, None, g): c for w, c in val.items()}, what=(b, g))


def counterexample_gamma(calc: QCalculus):
    """Gradings tried for [Del(1, e1, 1), Del(1, e2, 1)]_gamma.

    Both factors have degree -e1, so the bracket has degree -2 e1 while every
    lambda_a rho_b sigma_g has degree d_a + d_b >= 0: the only order-zero
    candidate is 0, and it suffices that the bracket is nonzero.
    """
    return list(itertools.product(range(-2, 3), repeat=calc.n))


@identity("q-counterexample", "bracket of the two skew derivatives in x1 is not of order zero", trials=1)
def _qcounter(rng):
    calc = _QCOL
    d1 = qone(QDelKey((1,), ((1, 0),), ((),)))
    d2 = qone(QDelKey((1,), ((0, 1),), ((),)))
    for g in counterexample_gamma(calc):
        br = calc.commutator_gamma(d1, d2, g)
        if oracle.eval_equal(br, {}, calc.apply, 4, N).equal:
            return ("vanishes", g)
    return None


# ------------------------------------------------------------------ runner

def run_identity(name: str, trials: Optional[int] = None, seed: Optional[int] = None) -> oracle.IdentityReport:
    ident = CATALOG[name]
    seed = oracle.DEFAULT_SEED if seed is None else seed
    rng = random.Random(f"{seed}:{name}")
    t = ident.trials if trials is None else trials
    failures, witness = 0, None
    for _ in range(t):
        w = ident.trial(rng)
        if w is not None:
            failures += 1
            if witness is None:
                witness = repr(w)
    return oracle.IdentityReport(name, ident.anchor, seed, t, failures == 0, failures, {"n": N}, witness)


def names() -> List[str]:
    return list(CATALOG)
