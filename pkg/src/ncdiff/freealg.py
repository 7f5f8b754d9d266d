"""The free algebra K<x_1..x_n>: words, elements, grading, commutators.

Words are tuples of 1-based generator indices, the empty tuple being 1.
Elements are plain dicts ``{word: scalar}`` with no zero values.  Nothing
here mutates an argument, so values can be shared freely.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .scalars import Laurent

Word = Tuple[int, ...]
Element = Dict[Word, object]
MultiDegree = Tuple[int, ...]

ONE: Word = ()


class IndexOutOfRange(ValueError):
    pass


# ---------------------------------------------------------------- elements

def x(i: int) -> Element:
    return {(i,): Fraction(1)}


def one() -> Element:
    return {(): Fraction(1)}


def elem(w: Sequence[int], c=1) -> Element:
    return {tuple(w): Fraction(c) if isinstance(c, int) else c} if c else {}


def add_into(acc: dict, key, c) -> None:
    """acc[key] += c, deleting the key when it cancels."""
    v = acc.get(key)
    if v is None:
        if c:
            acc[key] = c
        return
    v = v + c
    if v:
        acc[key] = v
    else:
        del acc[key]


def add(a: Element, b: Element) -> Element:
    out = dict(a)
    for w, c in b.items():
        add_into(out, w, c)
    return out


def scale(a: Element, c) -> Element:
    if not c:
        return {}
    return {w: v * c for w, v in a.items()}


def sub(a: Element, b: Element) -> Element:
    return add(a, scale(b, -1))


def mul(a: Element, b: Element) -> Element:
    out: Element = {}
    for u, c in a.items():
        for v, d in b.items():
            add_into(out, u + v, c * d)
    return out


def commutator(a: Element, b: Element) -> Element:
    return sub(mul(a, b), mul(b, a))


def check_indices(a: Element, n: int) -> None:
    for w in a:
        for i in w:
            if not 1 <= i <= n:
                raise IndexOutOfRange(f"generator x{i} outside 1..{n}")


# ----------------------------------------------------------------- grading

@lru_cache(maxsize=None)
def degree(w: Word, n: int) -> MultiDegree:
    d = [0] * n
    for i in w:
        d[i - 1] += 1
    return tuple(d)


def unit_vector(i: int, n: int) -> MultiDegree:
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def dadd(*ds: MultiDegree) -> MultiDegree:
    return tuple(map(sum, zip(*ds)))


def dsub(a: MultiDegree, b: MultiDegree) -> MultiDegree:
    return tuple(p - q for p, q in zip(a, b))


def homogeneous_parts(a: Element, n: int) -> Dict[MultiDegree, Element]:
    parts: Dict[MultiDegree, Element] = {}
    for w, c in a.items():
        parts.setdefault(degree(w, n), {})[w] = c
    return parts


# ------------------------------------------------------------- bicharacter

class Bicharacter:
    """n x n matrix of unit scalars; beta(g, d) = prod B[i][j]^(g_i d_j).

    Each entry is stored as (rational coefficient, exponent vector over the
    n*n parameters), which keeps beta_value a cheap monomial computation.
    """

    def __init__(self, entries: Sequence[Sequence[object]]):
        n = len(entries)
        if n < 2 or any(len(row) != n for row in entries):
            raise ValueError("bicharacter must be an n x n matrix with n >= 2")
        self.n = n
        self.nvars = n * n
        self.entries = [[_as_scalar(e, self.nvars) for e in row] for row in entries]
        self._mono = []
        for row in self.entries:
            mrow = []
            for e in row:
                if isinstance(e, Laurent):
                    if not e.is_unit_monomial():
                        raise ValueError("bicharacter entries must be unit monomials")
                    (ex, c), = e.terms.items()
                    mrow.append((c, ex))
                else:
                    if e == 0:
                        raise ValueError("bicharacter entries must be nonzero")
                    mrow.append((Fraction(e), None))
            self._mono.append(mrow)
        self.trivial = all(c == 1 and ex is None for row in self._mono for c, ex in row)
        self._cache: Dict[Tuple[MultiDegree, MultiDegree], object] = {}
        self.colour_compatible = all(
            self.entries[i][j] * self.entries[j][i] == 1 for i in range(n) for j in range(n) if i != j
        ) and all(self.entries[i][i] == 1 for i in range(n))

    # constructors --------------------------------------------------------
    @classmethod
    def trivial_for(cls, n: int) -> "Bicharacter":
        return cls([[1] * n for _ in range(n)])

    @classmethod
    def symbolic(cls, n: int) -> "Bicharacter":
        """Free parameters q_ij in every slot."""
        return cls([[param(i, j, n) for j in range(1, n + 1)] for i in range(1, n + 1)])

    @classmethod
    def colour(cls, n: int) -> "Bicharacter":
        """q_ii = 1 and q_ji = q_ij^-1 for i < j, with q_ij (i < j) free."""
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                if i == j:
                    row.append(1)
                elif i < j:
                    row.append(param(i, j, n))
                else:
                    row.append(param(j, i, n) ** -1)
            rows.append(row)
        return cls(rows)

    def value(self, g: MultiDegree, d: MultiDegree):
        key = (g, d)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        coef = Fraction(1)
        exps = [0] * self.nvars
        for i, gi in enumerate(g):
            if not gi:
                continue
            row = self._mono[i]
            for j, dj in enumerate(d):
                k = gi * dj
                if not k:
                    continue
                c, ex = row[j]
                if c != 1:
                    coef *= c ** k
                if ex is not None:
                    for t, v in enumerate(ex):
                        if v:
                            exps[t] += v * k
        out = Laurent.monomial(exps, coef) if any(exps) else coef
        self._cache[key] = out
        return out

    def __eq__(self, other):
        return isinstance(other, Bicharacter) and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, tuple(tuple(map(_key, r)) for r in self.entries)))

    def __repr__(self):
        return f"Bicharacter({self.entries!r})"


def _key(e):
    return e if not isinstance(e, Laurent) else ("L", hash(e))


def _as_scalar(e, nvars):
    if isinstance(e, Laurent):
        return e
    return Fraction(e)


def param(i: int, j: int, n: int) -> Laurent:
    """The formal parameter q_ij as a scalar."""
    exps = [0] * (n * n)
    exps[(i - 1) * n + (j - 1)] = 1
    return Laurent.monomial(exps)


def beta_value(beta: Bicharacter | None, g: MultiDegree, d: MultiDegree):
    if beta is None or beta.trivial:
        return Fraction(1)
    return beta.value(g, d)


def beta_commutator(a: Element, b: Element, beta: Bicharacter | None, n: int) -> Element:
    """[a, b]_beta = ab - beta(d_a, d_b) ba, applied per homogeneous pair."""
    out: Element = {}
    for u, c in a.items():
        du = degree(u, n)
        for v, e in b.items():
            add_into(out, u + v, c * e)
            add_into(out, v + u, -c * e * beta_value(beta, du, degree(v, n)))
    return out


def sigma_apply(g: MultiDegree, a: Element, beta: Bicharacter | None, n: int) -> Element:
    """The grading map: scales each word by beta(g, degree)."""
    out: Element = {}
    for w, c in a.items():
        add_into(out, w, c * beta_value(beta, g, degree(w, n)))
    return out


# --------------------------------------------------------------- printing

def format_word(w: Word) -> str:
    return "*".join(f"x{i}" for i in w) if w else "1"


def word_key(w: Word):
    """Deglex order used whenever output must be deterministic."""
    return (len(w), w)


def all_words(n: int, length: int) -> Iterable[Word]:
    if length == 0:
        yield ()
        return
    for w in all_words(n, length - 1):
        for i in range(1, n + 1):
            yield w + (i,)


def leading_monomial(a: Element) -> Word:
    """Maximal-degree word, ties broken by the lexicographically least index sequence."""
    top = max(len(w) for w in a)
    return min(w for w in a if len(w) == top)


def is_scalar_element(a: Element) -> bool:
    return all(len(w) == 0 for w in a)


def terms_sorted(a: Element) -> List[Tuple[Word, object]]:
    return sorted(a.items(), key=lambda t: word_key(t[0]))
