"""Differential operators on the free algebra.

An operator is a dict ``{key: scalar}`` whose keys are ``Lam(w)`` (left
multiplication by the word w) or ``Del(I, A)`` (the higher operator fixed by
``[Del(I, A), x_t] = delta(t, I[0]) * A[0] * Del(I[1:], A[1:])`` and
``Del(I, A)(1) = 0``).  Right multiplications never appear as keys; they are
rewritten on entry.

All the rewriting lives in :class:`Calculus`.  The same class also carries
the twisted calculus: give it a bicharacter and every commutator becomes the
beta-commutator ``[f, g]_b = fg - b(d_f, d_g) gf``.  With ``beta=None`` the
scalar factors are all 1 and one gets the classical operators, which is what
the module-level functions below use.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import freealg as fa, oracle
from .freealg import Bicharacter, Element, MultiDegree, Word, add_into


class Lam(NamedTuple):
    w: Word


class Del(NamedTuple):
    I: Tuple[int, ...]
    A: Tuple[Word, ...]


DelKey = Del
Operator = Dict[object, object]


class NotADerivation(ValueError):
    pass


class ElementIsScalar(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def del_key(I: Sequence[int], A: Sequence) -> Operator:
    """Del(I, A) with general element entries, expanded multilinearly."""
    if len(I) != len(A) or not I:
        raise ValueError("I and A must be nonempty and of equal length")
    entries = [a if isinstance(a, dict) else {tuple(a): Fraction(1)} for a in A]
    out: Operator = {}
    for combo in itertools.product(*[list(e.items()) for e in entries]):
        c = Fraction(1)
        for _, v in combo:
            c = c * v
        add_into(out, Del(tuple(I), tuple(w for w, _ in combo)), c)
    return out


def lam(a: Element) -> Operator:
    return {Lam(w): c for w, c in a.items()}


def op_add(*ops: Operator) -> Operator:
    out: Operator = {}
    for op in ops:
        for k, c in op.items():
            add_into(out, k, c)
    return out


def op_scale(op: Operator, c) -> Operator:
    if not c:
        return {}
    return {k: v * c for k, v in op.items()}


def op_sub(a: Operator, b: Operator) -> Operator:
    return op_add(a, op_scale(b, -1))


def key_order(k) -> int:
    return len(k.I) if isinstance(k, Del) else 0


@dataclass(frozen=True)
class CanonicalOperator:
    """lambda part + low levels in w_I form + general top level."""

    order: int
    constant: Tuple[Tuple[Word, object], ...] = ()
    low: Tuple[Tuple[Tuple[Tuple[int, ...], Word], object], ...] = ()
    top: Tuple[Tuple[Tuple[Tuple[int, ...], Tuple[Word, ...]], object], ...] = ()

    @property
    def constant_element(self) -> Element:
        return dict(self.constant)

    def to_normal(self) -> Operator:
        out: Operator = {Lam(w): c for w, c in self.constant}
        for (I, w), c in self.low:
            out[Del(I, ((),) * (len(I) - 1) + (w,))] = c
        for (I, A), c in self.top:
            out[Del(I, A)] = c
        return out

    def is_zero(self) -> bool:
        return self.order < 0


_ONE = Fraction(1)


def _leading_empty(A) -> int:
    z = 0
    while z < len(A) and not A[z]:
        z += 1
    return z


def _unbracket(u: Word, k: int):
    """Words w with u a term of [w, x_k] (u = w x_k or u = x_k w), w nonempty."""
    out = set()
    if len(u) > 1 and u[-1] == k:
        out.add(u[:-1])
    if len(u) > 1 and u[0] == k:
        out.add(u[1:])
    return out


def _compositions(w: Word, parts: int):
    for cuts in itertools.combinations_with_replacement(range(len(w) + 1), parts - 1):
        b = (0,) + cuts + (len(w),)
        yield tuple(w[b[i]:b[i + 1]] for i in range(parts))


class _NonUnitPivot(ArithmeticError):
    pass


class _TooLarge(RuntimeError):
    pass


def _priority(k: Del):
    return (-_leading_empty(k.A), k.A, k.I)


class _Echelon:
    """Sparse row echelon form; a row's pivot is its highest-priority key."""

    def __init__(self):
        self.rows: Dict[Del, Tuple[Operator, Dict]] = {}

    def reduce(self, v: Operator, track: Optional[Dict] = None):
        """Return (remainder, combo) with v = remainder + sum combo[t] * source t."""
        v = {k: c for k, c in v.items() if c}
        combo: Dict = {}
        while True:
            piv = [k for k in v if k in self.rows]
            if not piv:
                return v, combo
            k = max(piv, key=_priority)
            row, rt = self.rows[k]
            c = v[k]
            for k2, d in row.items():
                add_into(v, k2, -c * d)
            for t, d in rt.items():
                add_into(combo, t, c * d)

    def insert(self, v: Operator, track: Optional[Dict] = None) -> None:
        v, combo = self.reduce(v)
        if not v:
            return
        track = dict(track or {})
        for t, d in combo.items():
            add_into(track, t, -d)
        k = max(v, key=_priority)
        if v[k] == 1 or v[k] == -1:
            inv = int(v[k]) if isinstance(v[k], (int, Fraction)) else v[k]
        elif isinstance(v[k], (int, Fraction)):
            inv = Fraction(1, 1) / v[k]
        elif v[k].is_unit_monomial():
            inv = v[k] ** -1
        else:
            raise _NonUnitPivot(k)
        self.rows[k] = ({k2: d * inv for k2, d in v.items()}, {t: d * inv for t, d in track.items() if d})


def _sorted_items(d: dict):
    return tuple(sorted(d.items(), key=lambda kv: repr(kv[0])))


class Calculus:
    """Operator arithmetic over K<x_1..x_n>, optionally twisted by a bicharacter."""

    def __init__(self, n: int, beta: Optional[Bicharacter] = None):
        if n < 2:
            raise ValueError("need at least two generators")
        if beta is not None and beta.n != n:
            raise ValueError("bicharacter size does not match n")
        self.n = n
        self.beta = None if beta is None or beta.trivial else beta
        self.e = {i: fa.unit_vector(i, n) for i in range(1, n + 1)}
        self.zero = (0,) * n
        self._dw: Dict = {}
        self._dd: Dict = {}
        self._swap: Dict = {}
        self._lm: Dict = {}
        self._pr: Dict = {}
        self._df: Dict = {}
        self.top_budget = 12000

    # ------------------------------------------------------------ grading
    def b(self, g: MultiDegree, d: MultiDegree):
        if self.beta is None:
            return _ONE
        return self.beta.value(g, d)

    def wdeg(self, w: Word) -> MultiDegree:
        return fa.degree(w, self.n)

    def kdeg(self, I, A) -> MultiDegree:
        """Degree of Del(I, A): sum of deg(a_k) - e_{i_k}."""
        d = [0] * self.n
        for i, a in zip(I, A):
            d[i - 1] -= 1
            for t in a:
                d[t - 1] += 1
        return tuple(d)

    def op_degree(self, k) -> MultiDegree:
        return self.wdeg(k.w) if isinstance(k, Lam) else self.kdeg(k.I, k.A)

    def bcomm_words(self, w: Word, t: int) -> List[Tuple[Word, object]]:
        """[w, x_t]_beta as (word, coefficient) pairs."""
        if not w:
            return []
        return [(w + (t,), _ONE), ((t,) + w, -self.b(self.wdeg(w), self.e[t]))]

    # ------------------------------------------------------------ action
    def del_word(self, I, A, u: Word) -> Element:
        """Del(I, A) on a word, by peeling off the first letter.

        Del(x_l v) = b(d, e_l) x_l Del(v) + [l == I[0]] A[0] Del(I[1:], A[1:])(v)
        """
        if not I:
            return {u: Fraction(1)}
        if len(u) < len(I):
            return {}
        key = (I, A, u)
        hit = self._dw.get(key)
        if hit is not None:
            return hit
        out: Element = {}
        l, v = u[0], u[1:]
        f = self.b(self.kdeg(I, A), self.e[l])
        for w, c in self.del_word(I, A, v).items():
            add_into(out, (l,) + w, c * f)
        if l == I[0]:
            for w, c in self.del_word(I[1:], A[1:], v).items():
                add_into(out, A[0] + w, c)
        if len(self._dw) > 1_000_000:
            self._dw.clear()
        self._dw[key] = out
        return out

    def del_apply(self, I, A, a: Element) -> Element:
        out: Element = {}
        for u, c in a.items():
            for w, d in self.del_word(tuple(I), tuple(A), u).items():
                add_into(out, w, c * d)
        return out

    def apply(self, op: Operator, a: Element) -> Element:
        out: Element = {}
        for k, c in op.items():
            if isinstance(k, Lam):
                for u, d in a.items():
                    add_into(out, k.w + u, c * d)
            else:
                for w, d in self.del_apply(k.I, k.A, a).items():
                    add_into(out, w, c * d)
        return out

    # ------------------------------------------------------------ rewrites
    def left_mul(self, a: Word, I, A) -> Operator:
        """lambda_a Del(I, A) = Del(I, a.A) + sum_t b(d, e_t) Del((t, I), ([a, x_t]_b, A))."""
        key = (a, I, A)
        hit = self._lm.get(key)
        if hit is not None:
            return hit
        out: Operator = {Del(I, (a + A[0],) + A[1:]): Fraction(1)}
        if a:
            d = self.kdeg(I, A)
            for t in range(1, self.n + 1):
                f = self.b(d, self.e[t])
                for w, c in self.bcomm_words(a, t):
                    add_into(out, Del((t,) + I, (w,) + A), c * f)
        self._lm[key] = out
        return out

    def left_mul_op(self, a: Word, op: Operator) -> Operator:
        out: Operator = {}
        for k, c in op.items():
            if isinstance(k, Lam):
                add_into(out, Lam(a + k.w), c)
            else:
                for k2, d in self.left_mul(a, k.I, k.A).items():
                    add_into(out, k2, c * d)
        return out

    def rho(self, a: Element) -> Operator:
        """Right multiplication (twisted when beta is set) in normal form."""
        out: Operator = {}
        for w, c in a.items():
            add_into(out, Lam(w), c)
            for t in range(1, self.n + 1):
                for u, d in self.bcomm_words(w, t):
                    add_into(out, Del((t,), (u,)), -c * d)
        return out

    def swap_lambda(self, I, A, bw: Word) -> Operator:
        """Del(I, A) o lambda_b, written with lambda on the left and normalized.

        Del(I, A) lambda_b = sum_p b(d(I[p:]), d_b - e_{I[:p]}) lambda_{Del(I[:p])(b)} Del(I[p:])
        """
        key = (I, A, bw)
        hit = self._swap.get(key)
        if hit is not None:
            return hit
        out: Operator = {}
        db = list(self.wdeg(bw))
        for p in range(len(I) + 1):
            if p:
                db[I[p - 1] - 1] -= 1
            S, SA = I[p:], A[p:]
            val = self.del_word(I[:p], A[:p], bw)
            if not val:
                continue
            f = self.b(self.kdeg(S, SA), tuple(db)) if S else 1
            for c_w, c in val.items():
                if S:
                    for k2, d in self.left_mul(c_w, S, SA).items():
                        add_into(out, k2, c * d * f)
                else:
                    add_into(out, Lam(c_w), c)
        self._swap[key] = out
        return out

    def lift(self, parts: Dict[int, Operator]) -> Operator:
        """Key-wise lift: lambda_b Del(K, C) in parts[t] becomes Del((t, K), (b, C))."""
        out: Operator = {}
        for t, P in parts.items():
            for k, c in P.items():
                if isinstance(k, Lam):
                    add_into(out, Del((t,), (k.w,)), c)
                else:
                    add_into(out, Del((t,) + k.I, ((),) + k.A), c)
        return out

    def from_commutators(self, parts: Dict[int, Operator], const: Element) -> Operator:
        return op_add(self.rho(const), self.lift(parts))

    def compose_dels(self, I, A, J, B) -> Operator:
        """Del(I, A) o Del(J, B) in closed form.

        The letters of I picked by the left operator either sit in the word
        itself (free letters, interleaved with J) or inside the inserted
        entry b_l (a contiguous block of I applied to b_l).  Splitting I into
        free_0, block_0, free_1, ..., block_{s-1}, free_s gives every term.
        """
        key = (I, A, J, B)
        hit = self._dd.get(key)
        if hit is not None:
            return hit
        r, s = len(I), len(J)
        Jrem = [self.kdeg(J[l:], B[l:]) for l in range(s + 1)]
        Irem = [self.kdeg(I[k:], A[k:]) for k in range(r + 1)]
        out: Operator = {}
        for cuts in itertools.combinations_with_replacement(range(r + 1), 2 * s):
            bounds = (0,) + cuts + (r,)
            f = Fraction(1)
            K: Tuple[int, ...] = ()
            entries: List[List[Tuple[Word, object]]] = []
            ok = True
            for l in range(s + 1):
                lo, hi = bounds[2 * l], bounds[2 * l + 1]
                for k in range(lo, hi):
                    K += (I[k],)
                    entries.append([(A[k], 1)])
                    f = f * self.b(Jrem[l], self.e[I[k]])
                if l == s:
                    break
                blo, bhi = hi, bounds[2 * l + 2]
                val = self.del_word(I[blo:bhi], A[blo:bhi], B[l])
                if not val:
                    ok = False
                    break
                rest = fa.dsub(self.wdeg(B[l]), self.wdeg(I[blo:bhi]))
                f = f * self.b(Irem[bhi], rest)
                K += (J[l],)
                entries.append(list(val.items()))
            if not ok:
                continue
            for combo in itertools.product(*entries):
                c = f
                for _, v in combo:
                    c = c * v
                add_into(out, Del(K, tuple(w for w, _ in combo)), c)
        self._dd[key] = out
        return out

    def compose_dels_lift(self, I, A, J, B) -> Operator:
        """Same product, rebuilt from its commutators with the generators.

        [Del(I) Del(J), x_t] splits into two pieces; each is lifted back one
        level.  Slower and less economical with levels than compose_dels, kept
        as an independent route.
        """
        parts: Dict[int, Operator] = {}
        dJ = self.kdeg(J, B)
        for t in range(1, self.n + 1):
            P: Operator = {}
            if I[0] == t:
                inner = {Del(J, B): Fraction(1)} if len(I) == 1 else self.compose_dels_lift(I[1:], A[1:], J, B)
                f = self.b(dJ, self.e[t])
                for k, c in self.left_mul_op(A[0], inner).items():
                    add_into(P, k, c * f)
            if J[0] == t:
                first = self.swap_lambda(I, A, B[0])
                if len(J) > 1:
                    first = self.compose(first, {Del(J[1:], B[1:]): Fraction(1)})
                for k, c in first.items():
                    add_into(P, k, c)
            if P:
                parts[t] = P
        return self.lift(parts)

    def compose_keys(self, k1, k2) -> Operator:
        if isinstance(k1, Lam):
            if isinstance(k2, Lam):
                return {Lam(k1.w + k2.w): Fraction(1)}
            return self.left_mul(k1.w, k2.I, k2.A)
        if isinstance(k2, Lam):
            return self.swap_lambda(k1.I, k1.A, k2.w)
        return self.compose_dels(k1.I, k1.A, k2.I, k2.A)

    def compose(self, phi: Operator, psi: Operator) -> Operator:
        out: Operator = {}
        for k1, c1 in phi.items():
            for k2, c2 in psi.items():
                c = c1 * c2
                for k, d in self.compose_keys(k1, k2).items():
                    add_into(out, k, c * d)
        return out

    def commutator(self, phi: Operator, psi: Operator) -> Operator:
        return op_sub(self.compose(phi, psi), self.compose(psi, phi))

    def bracket(self, phi: Operator, psi: Operator) -> Operator:
        """Twisted commutator, expanded over homogeneous components."""
        out: Operator = {}
        hp = self.homogeneous(phi)
        hq = self.homogeneous(psi)
        for d1, p in hp.items():
            for d2, q in hq.items():
                f = self.b(d1, d2)
                for k, c in self.compose(p, q).items():
                    add_into(out, k, c)
                for k, c in self.compose(q, p).items():
                    add_into(out, k, -c * f)
        return out

    def homogeneous(self, op: Operator) -> Dict[MultiDegree, Operator]:
        parts: Dict[MultiDegree, Operator] = {}
        for k, c in op.items():
            parts.setdefault(self.op_degree(k), {})[k] = c
        return parts

    # ------------------------------------------------------------ canonical form
    def _rel_comm(self, w: Word, k: int, f0):
        """b(f0, e_k) [w, x_k]_b as (word, coefficient); plain ints when untwisted."""
        if not w:
            return ()
        if self.beta is None:
            return ((w + (k,), 1), ((k,) + w, -1))
        f = self.b(f0, self.e[k])
        return tuple((u, c * f) for u, c in self.bcomm_words(w, k))

    def push_right(self, I, A, p: int) -> Operator:
        """Move the entry at slot p one slot to the right (the going-up rewrite)."""
        key = (I, A, p)
        hit = self._pr.get(key)
        if hit is not None:
            return hit
        w = A[p]
        out: Operator = {Del(I, A[:p] + ((), w + A[p + 1]) + A[p + 2:]): 1}
        J, B = I[p + 1:], A[p + 1:]
        dJ = self.kdeg(J, B)
        for k in range(1, self.n + 1):
            for u, c in self._rel_comm(w, k, dJ):
                add_into(out, Del(I[:p + 1] + (k,) + J, A[:p] + ((), u) + B), c)
        self._pr[key] = out
        return out

    def defect(self, I, A) -> Operator:
        """Side terms left over when every entry of Del(I, A) is pushed into the last slot."""
        hit = self._df.get((I, A))
        if hit is not None:
            return hit
        out: Operator = {}
        cur = A
        for p in range(len(I) - 1):
            if not cur[p]:
                continue
            main = Del(I, cur[:p] + ((), cur[p] + cur[p + 1]) + cur[p + 2:])
            for k, c in self.push_right(I, cur, p).items():
                if k != main:
                    add_into(out, k, c)
            cur = main.A
        self._df[(I, A)] = out
        return out

    # top level ----------------------------------------------------------
    # At the top level r the keys Del(I, A) are not independent: every
    # goingup instance at level r - 1 whose word w moves across an interior
    # slot boundary gives a level-r combination that vanishes once both
    # sides are pushed into the last slot.  These relations span the kernel
    # of evaluation on level-r keys (checked by exact rank on small degrees),
    # and together with the defects of level r - 1 keys they span everything
    # at level r that is of lower order.

    def goingup_relation(self, G: Del, p: int, cut: int) -> Operator:
        """Level-r relation from moving w = G.A[p-1][cut:] across the boundary before slot p."""
        I, A = G.I, G.A
        head, w = A[p - 1][:cut], A[p - 1][cut:]
        out: Operator = {}
        f0 = self.kdeg(I[p:], A[p:])
        for k in range(1, self.n + 1):
            for u, c in self._rel_comm(w, k, f0):
                add_into(out, Del(I[:p] + (k,) + I[p:], A[:p - 1] + (head, u) + A[p:]), c)
        for k, c in self.defect(I, A).items():
            add_into(out, k, -c)
        moved = A[:p - 1] + (head, w + A[p]) + A[p + 1:]
        for k, c in self.defect(I, moved).items():
            add_into(out, k, c)
        return out

    def _sources(self, key: Del) -> set:
        """Level r-1 keys whose relations or defect can contain the level-r key."""
        I, A = key.I, key.A
        r = len(I)
        out = set()
        for q in range(1, r - 1):
            for w in _unbracket(A[q], I[q]):
                out.add(Del(I[:q] + I[q + 1:], A[:q - 1] + (A[q - 1] + w,) + A[q + 1:]))
        z = _leading_empty(A)
        if 1 <= z <= r - 2:
            J = I[:z] + I[z + 1:]
            for w in _unbracket(A[z], I[z]):
                for parts in _compositions(w, z):
                    G = Del(J, parts + A[z + 1:])
                    out.add(G)
                    for p in range(1, len(J)):
                        for L in range(1, len(G.A[p]) + 1):
                            out.add(Del(J, G.A[:p - 1] + (G.A[p - 1] + G.A[p][:L], G.A[p][L:]) + G.A[p + 1:]))
        return out

    def _top_generators(self, T: Operator):
        seen, sources = set(), set()
        todo = list(T)
        kern: List[Operator] = []
        defects: List[Tuple[Del, Operator]] = []
        while todo:
            key = todo.pop()
            if key in seen:
                continue
            seen.add(key)
            for G in self._sources(key):
                if G in sources:
                    continue
                sources.add(G)
                if len(sources) > self.top_budget:
                    raise _TooLarge
                d = self.defect(G.I, G.A)
                if d:
                    defects.append((G, d))
                    todo.extend(d)
                for p in range(1, len(G.I)):
                    for cut in range(len(G.A[p - 1])):
                        g = {k: c for k, c in self.goingup_relation(G, p, cut).items() if c}
                        if g:
                            kern.append(g)
                            todo.extend(g)
        return kern, defects

    def reduce_top(self, T: Operator):
        """(normal form of T modulo vanishing combinations, lower-level equivalent or None).

        The normal form keeps keys with many leading empty slots.  When T is
        of lower order the second entry is a level r - 1 operator equal to T.
        """
        try:
            return self._reduce_top(T)
        except (_NonUnitPivot, _TooLarge):
            # needs division by a non-unit such as 1 - q11, or the relation
            # space is too big to search: leave T as it is
            return T, None

    def _reduce_top(self, T: Operator):
        kern, defects = self._top_generators(T)
        E = _Echelon()
        for g in kern:
            E.insert(g)
        T1, _ = E.reduce(T)
        if not T1:
            return {}, {}
        ED = _Echelon()
        for G, d in defects:
            d1, _ = E.reduce(d)
            if d1:
                ED.insert(d1, {G: _ONE})
        rest, combo = ED.reduce(T1)
        if rest:
            return T1, None
        lower: Operator = {}
        for G, c in combo.items():
            add_into(lower, G, c)
            w = tuple(itertools.chain.from_iterable(G.A))
            add_into(lower, Del(G.I, ((),) * (len(G.I) - 1) + (w,)), -c)
        return T1, lower

    def canonical(self, op: Operator) -> CanonicalOperator:
        work: Dict[int, Dict] = {}
        const: Element = {}
        for k, c in op.items():
            if isinstance(k, Lam):
                add_into(const, k.w, c)
            else:
                add_into(work.setdefault(len(k.I), {}), k, c)
        r = max(work) if work else 0
        for m in range(1, r):
            cur = work.pop(m, {})
            done: Dict = {}
            while cur:
                k, c = cur.popitem()
                p = next((i for i in range(m - 1) if k.A[i]), None)
                if p is None:
                    add_into(done, k, c)
                    continue
                for k2, d in self.push_right(k.I, k.A, p).items():
                    tgt = cur if len(k2.I) == m else work.setdefault(len(k2.I), {})
                    add_into(tgt, k2, c * d)
            if done:
                work[m] = done
        levels = [m for m, d in work.items() if d]
        if not levels:
            return CanonicalOperator(0 if const else -1, _sorted_items(const))
        order = max(levels)
        while order >= 3:
            top, lower = self.reduce_top(work[order])
            if lower is None:
                work[order] = top
                break
            del work[order]
            tgt = work.setdefault(order - 1, {})
            for k, c in lower.items():
                add_into(tgt, k, c)
            levels = [m for m, d in work.items() if d]
            if not levels:
                return CanonicalOperator(0 if const else -1, _sorted_items(const))
            order = max(levels)
        low = {}
        for m in levels:
            if m == order:
                continue
            for k, c in work[m].items():
                low[(k.I, k.A[-1])] = c
        top = {(k.I, k.A): c for k, c in work[order].items()}
        return CanonicalOperator(order, _sorted_items(const), _sorted_items(low), _sorted_items(top))

    def order(self, op: Operator) -> int:
        return self.canonical(op).order

    def equal(self, phi: Operator, psi: Operator) -> bool:
        """Exact equality: canonical forms first, words up to a safe length above level 2."""
        c = self.canonical(op_sub(phi, psi))
        if c.is_zero():
            return True
        if c.order <= 2:
            return False
        diff = c.to_normal()
        return not any(self.apply(diff, {u: _ONE}) for u in oracle.words_up_to(self.n, self.zero_test_bound(diff)))

    def zero_test_bound(self, op: Operator) -> int:
        """Word length that separated level-r operators in every exact rank test we ran."""
        r = max((key_order(k) for k in op), default=0)
        deg = max((sum(map(len, k.A)) if isinstance(k, Del) else len(k.w) for k in op), default=0)
        return max(2 * r + 1, r + deg - 1)


# ---------------------------------------------------------------------------
# classical interface

@lru_cache(maxsize=None)
def calculus(n: int) -> Calculus:
    return Calculus(n)


def del_apply(k: Del, a: Element, n: int = 2) -> Element:
    return calculus(n).del_apply(k.I, k.A, a)


def apply(phi: Operator, a: Element, n: int = 2) -> Element:
    return calculus(n).apply(phi, a)


def eliminate_rho(a: Element, n: int) -> Operator:
    """rho_a = lambda_a - sum_i Del(i, [a, x_i])."""
    return calculus(n).rho(a)


def left_mul_normalize(a: Word, k: Del, n: int) -> Operator:
    return dict(calculus(n).left_mul(tuple(a), k.I, k.A))


def compose(phi: Operator, psi: Operator, n: int) -> Operator:
    return calculus(n).compose(phi, psi)


def from_commutators(parts: Dict[int, Operator], const: Element, n: int) -> Operator:
    return calculus(n).from_commutators(parts, const)


def op_commutator(phi: Operator, psi: Operator, n: int) -> Operator:
    return calculus(n).commutator(phi, psi)


def finite_canonical_form(phi: Operator, n: int) -> CanonicalOperator:
    return calculus(n).canonical(phi)


def order(phi: Operator, n: int) -> int:
    return calculus(n).order(phi)


def shuffle_positions(r: int, s: int) -> Iterable[Tuple[int, ...]]:
    """Slots taken by the first r letters in each interleaving, ascending."""
    return itertools.combinations(range(r + s), r)


def shuffle_top(I, A, J, B) -> Operator:
    """Sum over order-preserving interleavings of (I, A) with (J, B)."""
    r, s = len(I), len(J)
    out: Operator = {}
    for pos in shuffle_positions(r, s):
        slots = set(pos)
        it1, it2 = iter(zip(I, A)), iter(zip(J, B))
        seq = [next(it1) if m in slots else next(it2) for m in range(r + s)]
        add_into(out, Del(tuple(i for i, _ in seq), tuple(a for _, a in seq)), Fraction(1))
    return out


def symmetric_sum(I, A) -> Operator:
    out: Operator = {}
    for perm in itertools.permutations(range(len(I))):
        add_into(out, Del(tuple(I[p] for p in perm), tuple(A[p] for p in perm)), Fraction(1))
    return out


def iterated(keys: Sequence[Del], n: int, calc: Calculus | None = None) -> Operator:
    calc = calc or calculus(n)
    out: Operator = {Lam(()): Fraction(1)}
    for k in keys:
        out = calc.compose(out, {k: Fraction(1)})
    return out


def ps_form(phi: Operator, N: int, n: int):
    """Truncated power-series coefficients alpha_{I,w} for |I| <= N.

    Returns (constant, {(I, w): alpha}).  The operator
    lambda_constant + sum alpha Del(I, w_I) agrees with phi on every word of
    length <= N.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    calc = calculus(n)
    const = calc.apply(phi, {(): Fraction(1)})
    coeffs: Dict[Tuple[Tuple[int, ...], Word], object] = {}
    for t in range(1, N + 1):
        new = {}
        for I in fa.all_words(n, t):
            val = dict(calc.apply(phi, {I: Fraction(1)}))
            for w, c in const.items():
                add_into(val, w + I, -c)
            for (J, w), c in coeffs.items():
                A = ((),) * (len(J) - 1) + (w,)
                for u, d in calc.del_word(J, A, I).items():
                    add_into(val, u, -c * d)
            for w, c in val.items():
                new[(I, w)] = c
        coeffs.update(new)
    return const, coeffs


def ps_operator(const: Element, coeffs) -> Operator:
    out = lam(const)
    for (I, w), c in coeffs.items():
        add_into(out, Del(I, ((),) * (len(I) - 1) + (w,)), c)
    return out


# ---------------------------------------------------------------------------
# order zero

def d0_operator(terms: Sequence[Tuple[object, Word, Word]], n: int) -> Operator:
    """sum alpha lambda_a rho_b as a normal-form operator."""
    calc = calculus(n)
    out: Operator = {}
    for c, a, b in terms:
        for k, d in calc.compose({Lam(tuple(a)): Fraction(1)}, calc.rho({tuple(b): Fraction(1)})).items():
            add_into(out, k, c * d)
    return out


def _tensor(terms) -> Dict[Tuple[Word, Word], object]:
    out: Dict = {}
    for c, a, b in terms:
        add_into(out, (tuple(a), tuple(b)), c)
    return out


def d0_witness(terms: Sequence[Tuple[object, Word, Word]], n: int = 2):
    """Probe x_1^d x_2 (d = max deg a) and the value sum alpha a x_1^d x_2 b."""
    seen = set()
    for c, a, b in terms:
        if not c:
            raise ValueError("zero coefficient in term list")
        if (tuple(a), tuple(b)) in seen:
            raise ValueError("duplicate (a, b) pair; collect terms first")
        seen.add((tuple(a), tuple(b)))
    d = max((len(a) for _, a, _ in terms), default=0)
    probe = (1,) * d + (2,)
    value: Element = {}
    for c, a, b in terms:
        add_into(value, tuple(a) + probe + tuple(b), c)
    return probe, value


def is_derivation_d0(terms, n: int) -> bool:
    """[phi, lambda_{x_i}] = lambda_{phi(x_i)} for every generator, compared in R (x) R^o."""
    for i in range(1, n + 1):
        lhs: Dict = {}
        for c, a, b in terms:
            add_into(lhs, (tuple(a) + (i,), tuple(b)), c)
            add_into(lhs, ((i,) + tuple(a), tuple(b)), -c)
        rhs: Dict = {}
        for c, a, b in terms:
            add_into(rhs, (tuple(a) + (i,) + tuple(b), ()), c)
        if lhs != rhs:
            return False
    return True


def decompose_inner_derivation(terms, n: int = 2) -> List[Tuple[object, Element]]:
    """Write a derivation sum alpha lambda_a rho_b as sum c (lambda_a - rho_a).

    Evaluating on the probe tau = x_1^d x_2 separates the summands a.tau.b;
    those of the form a.tau come from lambda_a with a paired rho_a.
    """
    if not is_derivation_d0(terms, n):
        raise NotADerivation("fails [phi, x_i] = phi(x_i) for some generator")
    tensor = _tensor(terms)
    out: List[Tuple[object, Element]] = []
    for (a, b), c in sorted(tensor.items(), key=lambda kv: (fa.word_key(kv[0][0]), fa.word_key(kv[0][1]))):
        if b == () and a != ():
            out.append((c, {a: Fraction(1)}))
    rebuilt: Dict = {}
    for c, a in out:
        w = next(iter(a))
        add_into(rebuilt, (w, ()), c)
        add_into(rebuilt, ((), w), -c)
    if rebuilt != tensor:
        raise NotADerivation("terms do not pair into inner derivations")
    return out


def reduce_element_to_scalar(a: Element):
    if not a or fa.is_scalar_element(a):
        raise ElementIsScalar("element lies in K")
    I = fa.leading_monomial(a)
    k = Del(I, ((),) * len(I))
    return k, a[I]


# ---------------------------------------------------------------------------
# simplicity descent

@dataclass
class Step:
    kind: str          # "del" or "lambda"
    index: Tuple[int, ...]
    result: Operator = field(repr=False)


def simplicity_reduce(phi: Operator, n: int, budget: int = 10_000) -> List[Step]:
    """Commutator steps taking a nonzero operator to a nonzero multiple of lambda_1.

    First phase: commutators with Del(I, 1..1) act on the coefficient words
    of the canonical form and lower their degree.  Try |I| = 1 first; when
    all of those vanish move on to |I| = 2, 3, ...  Once every coefficient is
    a scalar, phi = c + sum alpha_I Del(I, 1..1) and [phi, lambda_{x_i}] with
    i the first index of a top term strips that index, dropping the order by one.
    """
    calc = calculus(n)
    cur = calc.canonical(phi)
    if cur.is_zero():
        raise ValueError("the zero operator generates the zero ideal")
    steps: List[Step] = []
    op = cur.to_normal()
    while not (cur.order == 0 and _max_degree(cur) == 0):
        if len(steps) >= budget:
            raise BudgetExceeded(f"no unit reached after {budget} steps")
        nxt = None
        top = _max_degree(cur)
        if top > 0:
            for k in range(1, top + max(cur.order, 0) + 2):
                for I in itertools.product(range(1, n + 1), repeat=k):
                    cand = calc.canonical(calc.commutator(op, {Del(I, ((),) * k): Fraction(1)}))
                    if not cand.is_zero() and _max_degree(cand) < top:
                        nxt = (Step("del", I, cand.to_normal()), cand)
                        break
                if nxt:
                    break
        else:
            i = min(I[0] for (I, _), _ in cur.top)
            cand = calc.canonical(calc.commutator(op, {Lam((i,)): Fraction(1)}))
            if cand.is_zero() or cand.order >= cur.order:
                raise BudgetExceeded("commutator with lambda_x did not lower the order")
            nxt = (Step("lambda", (i,), cand.to_normal()), cand)
        if nxt is None:
            raise BudgetExceeded("descent stalled")
        steps.append(nxt[0])
        cur = nxt[1]
        op = nxt[0].result
    return steps


def _max_degree(c: CanonicalOperator) -> int:
    ds = [len(w) for w, _ in c.constant]
    ds += [len(w) for (_, w), _ in c.low]
    ds += [sum(map(len, A)) for (_, A), _ in c.top]
    return max(ds, default=0)
