"""Quantum differential operators: grading maps and skew derivations.

A quantum operator is a dict ``{QKey: scalar}``; ``QKey(p, q, d, g)`` stands
for lambda_p rho_q Del(I, K, A) sigma_g, always in that order with the grading
map rightmost.  ``d`` may be None (no derivative part).  Del(I, K, A) is fixed
by

    [Del(I, K, A), x_j] = delta(j, I[0]) A[0] Del(I[1:], K[1:], A[1:]) sigma_{K[0]}

and Del(I, K, A)(1) = 0, with the empty Del acting as the identity.
Unlike the classical module, right multiplications stay in the keys: there is
no rewrite that removes them here.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import freealg as fa
from .freealg import Bicharacter, Element, MultiDegree, Word, add_into


class QDelKey(NamedTuple):
    I: Tuple[int, ...]
    K: Tuple[MultiDegree, ...]
    A: Tuple[Word, ...]


class QKey(NamedTuple):
    p: Word
    q: Word
    d: Optional[QDelKey]
    g: MultiDegree


QOperator = Dict[QKey, object]

_ONE = Fraction(1)


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


class QCalculus:
    def __init__(self, n: int, beta: Optional[Bicharacter]):
        if n < 2:
            raise ValueError("need at least two generators")
        self.n = n
        self.beta = None if beta is None or beta.trivial else beta
        self.zero = (0,) * n
        self.e = {i: fa.unit_vector(i, n) for i in range(1, n + 1)}
        self._dw: Dict = {}
        self._dd: Dict = {}
        self._ck: Dict = {}

    def b(self, g, d):
        if self.beta is None or not any(g):
            return _ONE
        return self.beta.value(tuple(g), tuple(d))

    def wdeg(self, w: Word) -> MultiDegree:
        return fa.degree(w, self.n)

    def ddeg(self, d: Optional[QDelKey]) -> MultiDegree:
        if d is None:
            return self.zero
        out = [0] * self.n
        for i, a in zip(d.I, d.A):
            out[i - 1] -= 1
            for t in a:
                out[t - 1] += 1
        return tuple(out)

    def key_degree(self, k: QKey) -> MultiDegree:
        return _vadd(_vadd(self.wdeg(k.p), self.wdeg(k.q)), self.ddeg(k.d))

    def identity(self) -> QOperator:
        return {QKey((), (), None, self.zero): Fraction(1)}

    # ------------------------------------------------------------------ action
    def del_word(self, I, K, A, u: Word) -> Element:
        """Del(x_l v) = x_l Del(v) + [l == I[0]] beta(K[0], d_v) A[0] Del(I[1:])(v)."""
        if not I:
            return {u: Fraction(1)}
        if len(u) < len(I):
            return {}
        key = (I, K, A, u)
        hit = self._dw.get(key)
        if hit is not None:
            return hit
        out: Element = {}
        l, v = u[0], u[1:]
        for w, c in self.del_word(I, K, A, v).items():
            add_into(out, (l,) + w, c)
        if l == I[0]:
            f = self.b(K[0], self.wdeg(v))
            for w, c in self.del_word(I[1:], K[1:], A[1:], v).items():
                add_into(out, A[0] + w, c * f)
        self._dw[key] = out
        return out

    def del_apply(self, d: Optional[QDelKey], a: Element) -> Element:
        if d is None:
            return dict(a)
        out: Element = {}
        for u, c in a.items():
            for w, e in self.del_word(d.I, d.K, d.A, u).items():
                add_into(out, w, c * e)
        return out

    def apply(self, op: QOperator, a: Element) -> Element:
        out: Element = {}
        for k, c in op.items():
            for u, d in a.items():
                s = c * d * self.b(k.g, self.wdeg(u))
                vals = {u: Fraction(1)} if k.d is None else self.del_word(k.d.I, k.d.K, k.d.A, u)
                for w, e in vals.items():
                    add_into(out, k.p + w + k.q, s * e)
        return out

    # --------------------------------------------------------------- rewrites
    def sigma_conjugate(self, g: MultiDegree, op: QOperator) -> QOperator:
        """sigma_g phi = beta(g, d_phi) phi sigma_g, key by key."""
        out: QOperator = {}
        for k, c in op.items():
            add_into(out, k._replace(g=_vadd(k.g, g)), c * self.b(g, self.key_degree(k)))
        return out

    def _split(self, d: QDelKey, p: int):
        I1, K1, A1 = d.I[:p], d.K[:p], d.A[:p]
        rest = QDelKey(d.I[p:], d.K[p:], d.A[p:]) if p < len(d.I) else None
        gsum = self.zero
        for g in K1:
            gsum = _vadd(gsum, g)
        return I1, K1, A1, rest, gsum

    def swap_lambda(self, d: QDelKey, bw: Word):
        """Del lambda_b = sum over splits lambda_{Del_1(b)} Del_2 sigma_{K_1}."""
        out = []
        for p in range(len(d.I) + 1):
            I1, K1, A1, rest, gsum = self._split(d, p)
            for w, c in self.del_word(I1, K1, A1, bw).items():
                out.append((c, w, rest, gsum))
        return out

    def swap_rho(self, d: QDelKey, bw: Word):
        """Del rho_b = sum over splits rho_{Del_2(sigma_{K_1}(b))} Del_1."""
        if not bw:
            return [(Fraction(1), (), d)]
        out = []
        for p in range(len(d.I) + 1):
            I1, K1, A1, rest, gsum = self._split(d, p)
            f = self.b(gsum, self.wdeg(bw))
            vals = {bw: Fraction(1)} if rest is None else self.del_word(rest.I, rest.K, rest.A, bw)
            left = QDelKey(I1, K1, A1) if p else None
            for w, c in vals.items():
                out.append((c * f, w, left))
        return out

    def _inner(self, d1, p2: Word, q2: Word, d2) -> QOperator:
        """Del_1 lambda_p2 rho_q2 Del_2 in lambda-rho-Del-sigma form."""
        if d1 is None:
            return {QKey(p2, q2, d2, self.zero): Fraction(1)}
        res: QOperator = {}
        tail_deg = _vadd(self.wdeg(q2), self.ddeg(d2))
        for c, xw, dA, h in self.swap_lambda(d1, p2):
            f = self.b(h, tail_deg)
            if dA is None:
                tail = {QKey((), q2, d2, self.zero): Fraction(1)}
            else:
                tail: QOperator = {}
                for c2, y, dB in self.swap_rho(dA, q2):
                    if dB is None or d2 is None:
                        part = {QKey((), (), dB if d2 is None else d2, self.zero): Fraction(1)}
                    else:
                        part = self.compose_dels(dB, d2)
                    for key, v in part.items():
                        add_into(tail, QKey(key.p, y + key.q, key.d, key.g), c2 * v)
            for key, v in tail.items():
                add_into(res, QKey(xw + key.p, key.q, key.d, _vadd(key.g, h)), c * f * v)
        return res

    def compose_keys(self, k1: QKey, k2: QKey) -> QOperator:
        ck = (k1, k2)
        hit = self._ck.get(ck)
        if hit is not None:
            return hit
        c = self.b(k1.g, self.key_degree(k2))
        g = _vadd(k1.g, k2.g)
        out: QOperator = {}
        for key, v in self._inner(k1.d, k2.p, k2.q, k2.d).items():
            add_into(out, QKey(k1.p + key.p, key.q + k1.q, key.d, _vadd(key.g, g)), c * v)
        self._ck[ck] = out
        return out

    def lift(self, parts: Dict[int, QOperator]) -> QOperator:
        out: QOperator = {}
        for t, P in parts.items():
            for k, c in P.items():
                if k.q:
                    raise ValueError("lift needs right-multiplication-free parts")
                if k.d is None:
                    nd = QDelKey((t,), (k.g,), (k.p,))
                else:
                    nd = QDelKey((t,) + k.d.I, (k.g,) + k.d.K, (k.p,) + k.d.A)
                add_into(out, QKey((), (), nd, self.zero), c)
        return out

    def compose_dels(self, d1: QDelKey, d2: QDelKey) -> QOperator:
        key = (d1, d2)
        hit = self._dd.get(key)
        if hit is not None:
            return hit
        parts: Dict[int, QOperator] = {}
        for t in range(1, self.n + 1):
            P: QOperator = {}
            if d1.I[0] == t:
                g1 = d1.K[0]
                f = self.b(g1, self.ddeg(d2))
                if len(d1.I) == 1:
                    inner = {QKey((), (), d2, self.zero): Fraction(1)}
                else:
                    inner = self.compose_dels(QDelKey(d1.I[1:], d1.K[1:], d1.A[1:]), d2)
                for k, c in inner.items():
                    add_into(P, QKey(d1.A[0] + k.p, k.q, k.d, _vadd(k.g, g1)), c * f)
            if d2.I[0] == t:
                rest = QDelKey(d2.I[1:], d2.K[1:], d2.A[1:]) if len(d2.I) > 1 else None
                k2 = QKey(d2.A[0], (), rest, d2.K[0])
                for k, c in self.compose_keys(QKey((), (), d1, self.zero), k2).items():
                    add_into(P, k, c)
            if P:
                parts[t] = P
        out = self.lift(parts)
        self._dd[key] = out
        return out

    def compose(self, phi: QOperator, psi: QOperator) -> QOperator:
        out: QOperator = {}
        for k1, c1 in phi.items():
            for k2, c2 in psi.items():
                c = c1 * c2
                for k, v in self.compose_keys(k1, k2).items():
                    add_into(out, k, c * v)
        return out

    def homogeneous(self, op: QOperator) -> Dict[MultiDegree, QOperator]:
        parts: Dict[MultiDegree, QOperator] = {}
        for k, c in op.items():
            parts.setdefault(self.key_degree(k), {})[k] = c
        return parts

    def commutator_gamma(self, phi: QOperator, psi: QOperator, g: MultiDegree) -> QOperator:
        """[phi, psi]_g = phi psi - beta(g, d_psi) psi phi, per homogeneous part of psi."""
        out: QOperator = {}
        for d, part in self.homogeneous(psi).items():
            f = self.b(g, d)
            for k, c in self.compose(phi, part).items():
                add_into(out, k, c)
            for k, c in self.compose(part, phi).items():
                add_into(out, k, -c * f)
        return out

    def left_mul(self, a: Word, d: QDelKey) -> QOperator:
        """a Del(I, K, A) = Del(I, K, a.A) + sum_k Del((k, I), (0, K), ([a, x_k], A))."""
        out: QOperator = {QKey((), (), QDelKey(d.I, d.K, (a + d.A[0],) + d.A[1:]), self.zero): Fraction(1)}
        if a:
            for k in range(1, self.n + 1):
                for w, c in ((a + (k,), 1), ((k,) + a, -1)):
                    nd = QDelKey((k,) + d.I, (self.zero,) + d.K, (w,) + d.A)
                    add_into(out, QKey((), (), nd, self.zero), Fraction(c))
        return out

    def goingup(self, I, K, A, J, L, B, w: Word) -> QOperator:
        """Del((I,J),(K,L),(A.w,B)) rewritten as Del(.., (A, w.B)) + sum_k Del((I,k,J),(K,0,L),(A,[w,x_k],B))."""
        out: QOperator = {QKey((), (), QDelKey(I + J, K + L, A + ((w + B[0]),) + B[1:]), self.zero): Fraction(1)}
        for k in range(1, self.n + 1):
            for u, c in ((w + (k,), 1), ((k,) + w, -1)):
                if not w:
                    continue
                nd = QDelKey(I + (k,) + J, K + (self.zero,) + L, A + (u,) + B)
                add_into(out, QKey((), (), nd, self.zero), Fraction(c))
        return out

    # ------------------------------------------------------------ top terms
    def op_deg_single(self, i: int, a: Word) -> MultiDegree:
        return fa.dsub(self.wdeg(a), self.e[i])

    def shuffle_top(self, I, K, A, J, L, B) -> QOperator:
        """sum over interleavings tau of alpha_tau Del(tau(I,J), tau(K,L), tau(A,B)).

        alpha_tau = product of beta(eta_m, d_n) over m in the left factor and
        n in the right factor whose letter is placed after m's.
        """
        r, s = len(I), len(J)
        items = [(i, g, a, 0) for i, g, a in zip(I, K, A)] + [(j, g, b, 1) for j, g, b in zip(J, L, B)]
        out: QOperator = {}
        for pos in itertools.combinations(range(r + s), r):
            slots = set(pos)
            it1, it2 = iter(items[:r]), iter(items[r:])
            seq = [next(it1) if m in slots else next(it2) for m in range(r + s)]
            alpha = Fraction(1)
            for u in range(r + s):
                for v in range(u + 1, r + s):
                    if seq[u][3] == 0 and seq[v][3] == 1:
                        alpha = alpha * self.b(seq[u][1], self.op_deg_single(seq[v][0], seq[v][2]))
            nd = QDelKey(tuple(t[0] for t in seq), tuple(t[1] for t in seq), tuple(t[2] for t in seq))
            add_into(out, QKey((), (), nd, self.zero), alpha)
        return out

    def symmetric_sum(self, I, K, A) -> QOperator:
        """sum over tau in S_r of alpha_tau Del(tau I, tau K, tau A).

        Slot u holds factor tau(u); alpha_tau multiplies beta(gamma_tau(u), d_tau(v))
        over slots u < v with tau(u) < tau(v).
        """
        r = len(I)
        out: QOperator = {}
        for perm in itertools.permutations(range(r)):
            alpha = Fraction(1)
            for u in range(r):
                for v in range(u + 1, r):
                    if perm[u] < perm[v]:
                        alpha = alpha * self.b(K[perm[u]], self.op_deg_single(I[perm[v]], A[perm[v]]))
            nd = QDelKey(tuple(I[p] for p in perm), tuple(K[p] for p in perm), tuple(A[p] for p in perm))
            add_into(out, QKey((), (), nd, self.zero), alpha)
        return out

    def order_bound(self, op: QOperator) -> int:
        """Largest derivative length present (-1 for zero)."""
        if not op:
            return -1
        return max(0 if k.d is None else len(k.d.I) for k in op)


# ------------------------------------------------------------------ helpers

def qdel(I, K, A, n: int) -> QOperator:
    return {QKey((), (), QDelKey(tuple(I), tuple(map(tuple, K)), tuple(map(tuple, A))), (0,) * n): Fraction(1)}


def qlam(a: Element, n: int) -> QOperator:
    return {QKey(w, (), None, (0,) * n): c for w, c in a.items()}


def qrho(a: Element, n: int) -> QOperator:
    return {QKey((), w, None, (0,) * n): c for w, c in a.items()}


def qsigma(g, n: int) -> QOperator:
    return {QKey((), (), None, tuple(g)): Fraction(1)}


def q_del_apply(k: QDelKey, a: Element, beta: Bicharacter) -> Element:
    return QCalculus(beta.n, beta).del_apply(k, a)


def q_equal(phi: QOperator, psi: QOperator, beta: Bicharacter, L: Optional[int] = None):
    """Evaluation equality on all words of length <= L (default r + d + 2)."""
    from . import oracle

    n = beta.n
    if L is None:
        L = default_q_bound(phi, psi)
    calc = QCalculus(n, beta)
    return oracle.eval_equal(phi, psi, calc.apply, L, n)


def default_q_bound(*ops: QOperator) -> int:
    r = 0
    d = 0
    for op in ops:
        for k in op:
            if k.d is not None:
                r = max(r, len(k.d.I))
                d = max(d, max(len(a) for a in k.d.A))
            d = max(d, len(k.p), len(k.q))
    return r + d + 2
