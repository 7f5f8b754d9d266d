"""Twisted (beta) differential operators.

Everything runs on :class:`ncdiff.diffops.Calculus` with a bicharacter
attached, so keys, normal forms and canonical forms look exactly like the
classical ones.  What lives here is the twisted vocabulary: rho^beta, the
twisted inner derivations, the tensor product rule for order zero, and the
closed formulas for commutators, Leibniz splittings and top terms together
with their scalars.

Some formulas come in two flavours.  ``*_printed`` follows the displayed text
of the source statement literally; the plain version is the one that agrees
with functional composition.  Tests compare both against the oracle.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import freealg as fa
from . import oracle
from .diffops import Calculus, CanonicalOperator, Del, Lam, Operator
from .freealg import Bicharacter, Element, MultiDegree, Word, add_into


class FlagRequired(ValueError):
    """A rule that needs q_ij q_ji = 1 and q_ii = 1 was used without it."""


class BetaContext:
    def __init__(self, beta: Bicharacter):
        self.beta = beta
        self.n = beta.n
        self.colour_compatible = beta.colour_compatible
        self.calc = Calculus(self.n, beta)

    @classmethod
    def symbolic(cls, n: int) -> "BetaContext":
        return cls(Bicharacter.symbolic(n))

    @classmethod
    def colour(cls, n: int) -> "BetaContext":
        return cls(Bicharacter.colour(n))

    def b(self, g, d):
        return fa.beta_value(self.beta, tuple(g), tuple(d))

    def require_colour(self, what: str) -> None:
        if not self.colour_compatible:
            raise FlagRequired(f"{what} needs q_ij q_ji = 1 and q_ii = 1")

    def eval(self, op: Operator, a: Element) -> Element:
        return oracle.evaluate(op, a, self.n, self.beta)


def _deg(ctx: BetaContext, w: Word) -> MultiDegree:
    return fa.degree(w, ctx.n)


def _edeg(ctx: BetaContext, I) -> MultiDegree:
    return fa.degree(tuple(I), ctx.n)


# ------------------------------------------------------------------- basics

def beta_del_apply(k: Del, a: Element, ctx: BetaContext) -> Element:
    return ctx.calc.del_apply(k.I, k.A, a)


def beta_rho_apply(r: Word, a: Element, ctx: BetaContext) -> Element:
    """rho^beta_r(s) = beta(d_r, d_s) s r, word by word."""
    dr = _deg(ctx, tuple(r))
    out: Element = {}
    for s, c in a.items():
        add_into(out, s + tuple(r), c * ctx.b(dr, _deg(ctx, s)))
    return out


def beta_rho(a: Element, ctx: BetaContext) -> Operator:
    """rho^beta_a as a normal-form operator (lambda_a minus the twisted inner part)."""
    return ctx.calc.rho(a)


def beta_inner(a: Word, ctx: BetaContext) -> Operator:
    """lambda_a - rho^beta_a = sum_i Del(i, [a, x_i]_beta)."""
    out: Operator = {}
    for i in range(1, ctx.n + 1):
        for w, c in ctx.calc.bcomm_words(tuple(a), i):
            add_into(out, Del((i,), (w,)), c)
    return out


def beta_compose(phi: Operator, psi: Operator, ctx: BetaContext) -> Operator:
    return ctx.calc.compose(phi, psi)


def beta_bracket(phi: Operator, psi: Operator, ctx: BetaContext) -> Operator:
    return ctx.calc.bracket(phi, psi)


def beta_canonical_form(phi: Operator, ctx: BetaContext) -> CanonicalOperator:
    return ctx.calc.canonical(phi)


def beta_order(phi: Operator, ctx: BetaContext) -> int:
    return ctx.calc.order(phi)


def beta_equal(phi: Operator, psi: Operator, ctx: BetaContext) -> bool:
    return ctx.calc.equal(phi, psi)


# ------------------------------------------------------------- order zero

def d0_beta_product(left: Tuple[Word, Word], right: Tuple[Word, Word], ctx: BetaContext):
    """(a (x) b^o)(u (x) v^o) in R (x)^beta R^{beta,o}.

    Returns (scalar, au, vb): the product is scalar * (au (x) (vb)^o), the
    opposite-side product b^o v^o = beta(d_b, d_v) (vb)^o being folded into
    the scalar.  Its image is scalar * lambda_{au} rho^beta_{vb}.
    """
    a, b = map(tuple, left)
    u, v = map(tuple, right)
    db = _deg(ctx, b)
    c = ctx.b(db, _deg(ctx, u)) * ctx.b(db, _deg(ctx, v))
    return c, a + u, v + b


def d0_beta_operator(c, a: Word, b: Word, ctx: BetaContext) -> Operator:
    """c * lambda_a rho^beta_b in normal form."""
    op = ctx.calc.compose({Lam(tuple(a)): Fraction(1)}, ctx.calc.rho({tuple(b): Fraction(1)}))
    return {k: v * c for k, v in op.items()}


# ----------------------------------------------------- commutator expansions

def lambda_swap(I, A, b: Word, ctx: BetaContext) -> List[Tuple[object, Word, Optional[Del]]]:
    """[Del(I, A), lambda_b]_beta = sum_p alpha_p lambda_{Del(I[:p])(b)} Del(I[p:]), p = 1..r.

    alpha_p = beta(deg Del(I[p:]), d_b - e_{i_1} - ... - e_{i_p}).  The p = r
    term is lambda_{Del(I)(b)}.  Returned as (alpha, left word, right key).
    """
    out = []
    calc = ctx.calc
    db = _deg(ctx, tuple(b))
    for p in range(1, len(I) + 1):
        right = Del(tuple(I[p:]), tuple(A[p:])) if p < len(I) else None
        alpha = ctx.b(calc.kdeg(I[p:], A[p:]), fa.dsub(db, _edeg(ctx, I[:p])))
        for w, c in calc.del_word(tuple(I[:p]), tuple(A[:p]), tuple(b)).items():
            out.append((alpha * c, w, right))
    return out


def lambda_swap_printed(I, A, b: Word, ctx: BetaContext):
    """The same expansion with the range j = 2..r and the scalar exactly as displayed.

    alpha_j = beta(d_{a_j..a_r} - e_{i_j} - ... - e_{i_r}, d_b - e_{i_1} - ... - e_{i_j}).
    """
    out = []
    calc = ctx.calc
    db = _deg(ctx, tuple(b))
    r = len(I)
    for j in range(2, r + 1):
        p = j - 1
        first = fa.dsub(_deg(ctx, tuple(itertools.chain.from_iterable(A[p:]))), _edeg(ctx, I[p:]))
        second = fa.dsub(db, _edeg(ctx, I[:j]))
        alpha = ctx.b(first, second)
        for w, c in calc.del_word(tuple(I[:p]), tuple(A[:p]), tuple(b)).items():
            out.append((alpha * c, w, Del(tuple(I[p:]), tuple(A[p:]))))
    return out


def rho_swap(I, A, b: Word, ctx: BetaContext, printed_range: bool = False):
    """[Del(I, A), rho^beta_b]_beta = sum_j alpha_j rho^beta_{Del(I[j-1:])(b)} Del(I[:j-1]).

    alpha_j = beta(d_{a_1..a_{j-1}} - e_{i_1..i_{j-1}}, d_b) beta(d_{a_1..a_{j-1}}, d_{a_j..a_r} - e_{i_j..i_r}),
    j = 1..r; the j = 1 term is rho^beta_{Del(I)(b)}.  ``printed_range`` keeps
    only j = 2..r.  Needs the colour condition.
    """
    ctx.require_colour("the rho swap")
    out = []
    calc = ctx.calc
    db = _deg(ctx, tuple(b))
    r = len(I)
    for j in range(2 if printed_range else 1, r + 1):
        p = j - 1
        dA1 = _deg(ctx, tuple(itertools.chain.from_iterable(A[:p])))
        D1 = fa.dsub(dA1, _edeg(ctx, I[:p]))
        D2 = calc.kdeg(I[p:], A[p:])
        alpha = ctx.b(D1, db) * ctx.b(dA1, D2)
        left = Del(tuple(I[:p]), tuple(A[:p])) if p else None
        for w, c in calc.del_word(tuple(I[p:]), tuple(A[p:]), tuple(b)).items():
            out.append((alpha * c, w, left))
    return out


def swap_operator(terms, side: str, ctx: BetaContext) -> Operator:
    """Turn swap terms into an operator: side 'lambda' or 'rho' for the multiplication."""
    calc = ctx.calc
    out: Operator = {}
    for c, w, k in terms:
        mult = {Lam(w): Fraction(1)} if side == "lambda" else calc.rho({w: Fraction(1)})
        op = mult if k is None else calc.compose(mult, {k: Fraction(1)})
        for key, v in op.items():
            add_into(out, key, c * v)
    return out


def order_one_bracket(i: int, a: Word, j: int, b: Word, ctx: BetaContext) -> Operator:
    """[Del(i, a), Del(j, b)]_beta = Del(j, Del(i,a)(b)) - beta(d_a - e_i, d_b - e_j) Del(i, Del(j,b)(a))."""
    ctx.require_colour("the order-one bracket")
    calc = ctx.calc
    out: Operator = {}
    for w, c in calc.del_word((i,), (tuple(a),), tuple(b)).items():
        add_into(out, Del((j,), (w,)), c)
    f = ctx.b(calc.kdeg((i,), (tuple(a),)), calc.kdeg((j,), (tuple(b),)))
    for w, c in calc.del_word((j,), (tuple(b),), tuple(a)).items():
        add_into(out, Del((i,), (w,)), -c * f)
    return out


# ------------------------------------------------------------------ Leibniz

def leibniz_alpha(I, A, p: int, a: Word, ctx: BetaContext):
    """Twist for the split (I[:p], I[p:]) on a product a.b: beta(deg Del(I[p:]), d_a - e_{I[:p]})."""
    return ctx.b(ctx.calc.kdeg(I[p:], A[p:]), fa.dsub(_deg(ctx, tuple(a)), _edeg(ctx, I[:p])))


def leibniz_alpha_printed(I, A, p: int, a: Word, ctx: BetaContext):
    """The displayed twist beta(deg Del(I[p:], A[p:]), deg Del(I[:p], A[:p]))."""
    calc = ctx.calc
    return ctx.b(calc.kdeg(I[p:], A[p:]), calc.kdeg(I[:p], A[:p]))


def leibniz_split(I, A, a: Word, b: Word, ctx: BetaContext, printed: bool = False) -> Element:
    """sum over splits of alpha * Del(I[:p])(a) * Del(I[p:])(b)."""
    calc = ctx.calc
    alpha_fn = leibniz_alpha_printed if printed else leibniz_alpha
    out: Element = {}
    for p in range(len(I) + 1):
        al = alpha_fn(I, A, p, a, ctx)
        left = calc.del_word(tuple(I[:p]), tuple(A[:p]), tuple(a))
        right = calc.del_word(tuple(I[p:]), tuple(A[p:]), tuple(b))
        for u, c in left.items():
            for v, d in right.items():
                add_into(out, u + v, al * c * d)
    return out


# -------------------------------------------------------------- top terms

def _pair_alpha(ctx: BetaContext, left, right, left_first: bool):
    """Scalar for one (left factor, right factor) pair of single slots.

    left = (i, a) from the outer operator, right = (j, b) from the inner one.
    If the left slot ends up first the pair gives beta(d_b - e_j, e_i),
    otherwise beta(d_a - e_i, d_b).
    """
    calc = ctx.calc
    i, a = left
    j, b = right
    if left_first:
        return ctx.b(calc.kdeg((j,), (b,)), calc.e[i])
    return ctx.b(calc.kdeg((i,), (a,)), _deg(ctx, b))


def beta_shuffle_top(I, A, J, B, ctx: BetaContext) -> Operator:
    """sum over interleavings tau of alpha_tau Del(tau(I,J), tau(A,B))."""
    r, s = len(I), len(J)
    items = [(0, m) for m in range(r)] + [(1, m) for m in range(s)]
    out: Operator = {}
    for pos in itertools.combinations(range(r + s), r):
        slots = set(pos)
        it1, it2 = iter(items[:r]), iter(items[r:])
        seq = [next(it1) if m in slots else next(it2) for m in range(r + s)]
        where = {t: u for u, t in enumerate(seq)}
        alpha = Fraction(1)
        for m in range(r):
            for q in range(s):
                first = where[(0, m)] < where[(1, q)]
                alpha = alpha * _pair_alpha(ctx, (I[m], A[m]), (J[q], B[q]), first)
        K = tuple(I[m] if side == 0 else J[m] for side, m in seq)
        C = tuple(A[m] if side == 0 else B[m] for side, m in seq)
        add_into(out, Del(K, C), alpha)
    return out


def beta_symmetric_sum(I, A, ctx: BetaContext) -> Operator:
    """sum over sigma in S_r of alpha_sigma Del(sigma I, sigma A).

    Factor m stands for Del(i_m, a_m) in the chain Del(i_1,a_1) o ... o Del(i_r,a_r);
    every pair m < n contributes as in beta_shuffle_top with m on the left.
    """
    r = len(I)
    out: Operator = {}
    for perm in itertools.permutations(range(r)):
        where = {m: u for u, m in enumerate(perm)}
        alpha = Fraction(1)
        for m in range(r):
            for q in range(m + 1, r):
                alpha = alpha * _pair_alpha(ctx, (I[m], A[m]), (I[q], A[q]), where[m] < where[q])
        add_into(out, Del(tuple(I[p] for p in perm), tuple(A[p] for p in perm)), alpha)
    return out


def chain(keys: Sequence[Del], ctx: BetaContext) -> Operator:
    out: Operator = {Lam(()): Fraction(1)}
    for k in keys:
        out = ctx.calc.compose(out, {k: Fraction(1)})
    return out


# ----------------------------------------------------------------- goingup

@dataclass
class GoingUp:
    lhs: Operator
    rhs: Operator
    holds: bool


def goingup_rhs(I, J, A, B, w: Word, ctx: BetaContext) -> Operator:
    """sum_k beta(deg Del(J, B), e_k) Del((I, k, J), (A, [w, x_k]_beta, B))."""
    calc = ctx.calc
    dJ = calc.kdeg(J, B)
    out: Operator = {}
    for k in range(1, ctx.n + 1):
        f = ctx.b(dJ, calc.e[k])
        for u, c in calc.bcomm_words(tuple(w), k):
            add_into(out, Del(tuple(I) + (k,) + tuple(J), tuple(A) + (u,) + tuple(B)), c * f)
    return out


def beta_goingup(I, J, A, B, w: Word, ctx: BetaContext, L: Optional[int] = None) -> GoingUp:
    """Check Del((I,J),(A.w,B)) - Del((I,J),(A,w.B)) against the displayed sum by evaluation."""
    I, J, A, B, w = tuple(I), tuple(J), tuple(A), tuple(B), tuple(w)
    lhs: Operator = {}
    add_into(lhs, Del(I + J, A[:-1] + (A[-1] + w,) + B), Fraction(1))
    add_into(lhs, Del(I + J, A + (w + B[0],) + B[1:]), Fraction(-1))
    rhs = goingup_rhs(I, J, A, B, w, ctx)
    if L is None:
        L = len(I) + len(J) + 1 + max(map(len, A + B + (w,))) + 2
    v = oracle.eval_equal(lhs, rhs, ctx.eval, min(L, 6), ctx.n)
    return GoingUp(lhs, rhs, v.equal)
