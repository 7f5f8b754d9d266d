"""Brute-force checking layer.

Nothing in here uses the rewriting engine: operators are evaluated straight
from their closed forms by enumerating which letters of a word get replaced,
and equality means agreement on every word up to a length bound.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import freealg as fa
from .freealg import Bicharacter, Element, Word, add_into
from .scalars import Laurent, format_scalar

DEFAULT_SEED = 20240601


# ------------------------------------------------------------------ shuffles

@dataclass(frozen=True)
class ShuffleSet:
    r: int
    s: int
    permutations: Tuple[Tuple[int, ...], ...]

    def __len__(self):
        return len(self.permutations)

    def __iter__(self):
        return iter(self.permutations)


def _raise_at(tau: Tuple[int, ...], k: int) -> Tuple[int, ...]:
    """tau^(k): send k to 1 and shift everything else up by one."""
    out = []
    for i in range(1, len(tau) + 2):
        if i < k:
            out.append(tau[i - 1] + 1)
        elif i == k:
            out.append(1)
        else:
            out.append(tau[i - 2] + 1)
    return tuple(out)


def _shuffles(r: int, s: int) -> List[Tuple[int, ...]]:
    if r == 0 or s == 0:
        return [tuple(range(1, r + s + 1))]
    return [_raise_at(t, 1) for t in _shuffles(r - 1, s)] + \
           [_raise_at(t, r + 1) for t in _shuffles(r, s - 1)]


def shuffles(r: int, s: int) -> ShuffleSet:
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    return ShuffleSet(r, s, tuple(_shuffles(r, s)))


def is_shuffle(tau: Sequence[int], r: int) -> bool:
    return all(tau[i] < tau[i + 1] for i in range(r - 1)) and \
        all(tau[i] < tau[i + 1] for i in range(r, len(tau) - 1))


def place(tau: Sequence[int], seq: Sequence) -> tuple:
    """Put item m of seq into slot tau(m)."""
    out = [None] * len(seq)
    for m, item in enumerate(seq):
        out[tau[m] - 1] = item
    return tuple(out)


# --------------------------------------------------------------------- words

def words_up_to(n: int, L: int) -> Iterator[Word]:
    if L < 0:
        raise ValueError("L must be nonnegative")
    for length in range(L + 1):
        yield from itertools.product(range(1, n + 1), repeat=length)


def count_words(n: int, L: int) -> int:
    return (n ** (L + 1) - 1) // (n - 1)


def default_bound(order: int, coeff_degree: int) -> int:
    return order + coeff_degree + 2


# ------------------------------------------------------------ closed forms

def _picks(I: Sequence[int], u: Word) -> Iterator[Tuple[int, ...]]:
    for pos in itertools.combinations(range(len(u)), len(I)):
        if all(u[p] == i for p, i in zip(pos, I)):
            yield pos


def eval_del(I, A, u: Word, n: int, beta: Optional[Bicharacter] = None) -> Element:
    """Del(I, A) (twisted by beta if given) on a word, from the closed form.

    Each way of choosing letters x_{i_1}, ..., x_{i_r} (in order) inside u
    contributes u with those letters replaced by a_1, ..., a_r.  In the
    twisted case a letter that is skipped picks up beta(d, e_letter) where d
    is the degree of the part of the operator still waiting to act.
    """
    out: Element = {}
    r = len(I)
    opdeg = [tuple(fa.degree(A[k], n)[t] - (1 if I[k] == t + 1 else 0) for t in range(n)) for k in range(r)]
    for pos in _picks(I, u):
        c = Fraction(1)
        if beta is not None and not beta.trivial:
            k = 0
            for q, letter in enumerate(u):
                while k < r and pos[k] < q:
                    k += 1
                if k < r and pos[k] == q:
                    continue
                if k < r:
                    rest = fa.dadd(*opdeg[k:])
                    c = c * beta.value(rest, fa.unit_vector(letter, n))
        w: Tuple[int, ...] = ()
        last = 0
        for p, a in zip(pos, A):
            w = w + u[last:p] + tuple(a)
            last = p + 1
        w = w + u[last:]
        add_into(out, w, c)
    return out


def eval_qdel(I, K, A, u: Word, n: int, beta: Optional[Bicharacter]) -> Element:
    """Quantum Del(I, K, A) on a word.

    A pick at position p with grading gamma contributes beta(gamma, d) where d
    is the degree of the original letters to the right of p.
    """
    out: Element = {}
    for pos in _picks(I, u):
        c = Fraction(1)
        if beta is not None and not beta.trivial:
            for p, g in zip(pos, K):
                if any(g):
                    c = c * beta.value(tuple(g), fa.degree(u[p + 1:], n))
        w: Tuple[int, ...] = ()
        last = 0
        for p, a in zip(pos, A):
            w = w + u[last:p] + tuple(a)
            last = p + 1
        w = w + u[last:]
        add_into(out, w, c)
    return out


def evaluate(op, a: Element, n: int, beta: Optional[Bicharacter] = None) -> Element:
    """Apply an operator dict to an element by closed forms.

    Understands the classical/twisted keys Lam, Del and the quantum key QKey.
    """
    from .diffops import Del, Lam
    from .qops import QKey

    out: Element = {}
    for k, c in op.items():
        for u, d in a.items():
            if isinstance(k, Lam):
                add_into(out, k.w + u, c * d)
            elif isinstance(k, Del):
                for w, e in eval_del(k.I, k.A, u, n, beta).items():
                    add_into(out, w, c * d * e)
            elif isinstance(k, QKey):
                g = fa.degree(u, n)
                s = c * d * (beta.value(k.g, g) if beta is not None and any(k.g) else 1)
                if k.d is None:
                    vals = {u: Fraction(1)}
                else:
                    vals = eval_qdel(k.d.I, k.d.K, k.d.A, u, n, beta)
                for w, e in vals.items():
                    add_into(out, k.p + w + k.q, s * e)
            else:
                raise TypeError(f"unknown operator key {k!r}")
    return out


# ------------------------------------------------------------------ equality

@dataclass
class Verdict:
    equal: bool
    witness: Optional[Word] = None
    left: Optional[Element] = None
    right: Optional[Element] = None

    def __bool__(self):
        return self.equal


def eval_equal(phi, psi, apply_fn: Callable, L: int, n: int) -> Verdict:
    """Agreement of apply_fn(phi, w) and apply_fn(psi, w) for all words of length <= L."""
    for w in words_up_to(n, L):
        a = {w: Fraction(1)}
        lhs, rhs = apply_fn(phi, a), apply_fn(psi, a)
        if lhs != rhs:
            return Verdict(False, w, lhs, rhs)
    return Verdict(True)


def kills_words(op, apply_fn: Callable, lengths: Sequence[int], n: int) -> Verdict:
    for length in lengths:
        for w in itertools.product(range(1, n + 1), repeat=length):
            v = apply_fn(op, {w: Fraction(1)})
            if v:
                return Verdict(False, w, v, {})
    return Verdict(True)


# -------------------------------------------------------------- independence

@dataclass
class RankReport:
    rank: int
    size: int
    coordinates: int

    @property
    def independent(self) -> bool:
        return self.rank == self.size


def _specialize(x):
    """Laurent scalars become rationals at fixed generic-looking points."""
    if isinstance(x, Laurent):
        pts = {i: Fraction(p, 1 + i) for i, p in enumerate([3, 5, 7, 11, 13, 17, 19, 23, 29] * 9)}
        return _specialize(x.substitute({i: pts[i] for i in range(x.nvars)}))
    return Fraction(x)


def exact_rank(rows: List[List[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def independence_certificate(family: Sequence, probes: Sequence[Word], apply_fn: Callable) -> RankReport:
    """Rank of the evaluation matrix (family member x (probe, output word)).

    Full rank certifies linear independence of the family.  Symbolic scalars
    are specialized at fixed rationals first, which can only lower the rank.
    """
    values = [[apply_fn(op, {p: Fraction(1)}) for p in probes] for op in family]
    coords = sorted({(pi, w) for row in values for pi, v in enumerate(row) for w in v},
                    key=lambda t: (t[0], fa.word_key(t[1])))
    index = {c: i for i, c in enumerate(coords)}
    rows = []
    for row in values:
        vec = [Fraction(0)] * len(coords)
        for pi, v in enumerate(row):
            for w, c in v.items():
                vec[index[(pi, w)]] = _specialize(c)
        rows.append(vec)
    return RankReport(exact_rank(rows) if coords else 0, len(family), len(coords))


# ------------------------------------------------------------------ reports

def _jsonable(x):
    if isinstance(x, (Fraction, Laurent)):
        return format_scalar(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class IdentityReport:
    name: str
    anchor: str
    seed: int
    trials: int
    passed: bool
    failures: int = 0
    params: Dict = field(default_factory=dict)
    witness: Optional[object] = None

    def to_json(self) -> str:
        return json.dumps(_jsonable(asdict(self)), sort_keys=True)


def rng_for(seed: Optional[int]) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def random_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> Word:
    return tuple(rng.randint(1, n) for _ in range(rng.randint(min_len, max_len)))


def random_element(rng: random.Random, n: int, max_len: int, terms: int = 3) -> Element:
    out: Element = {}
    for _ in range(rng.randint(1, terms)):
        add_into(out, random_word(rng, n, max_len), Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5])))
    return out
