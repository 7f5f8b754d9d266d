"""Exact scalars: rationals and Laurent polynomials in the parameters q_ij.

A scalar is either a ``fractions.Fraction`` (the classical configuration never
leaves this case) or a :class:`Laurent` polynomial with at least one
non-constant monomial.  Arithmetic between the two kinds works through the
usual operators; results are collapsed back to ``Fraction`` whenever they are
constant, so ``Laurent`` objects never compare equal to plain numbers.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

Exps = Tuple[int, ...]


class Laurent:
    """Finitely supported map exponent-vector -> Fraction over n*n parameters."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Dict[Exps, Fraction], nvars: int):
        self.terms = terms
        self.nvars = nvars
        self._hash = None

    # construction -----------------------------------------------------
    @staticmethod
    def wrap(terms: Dict[Exps, Fraction], nvars: int):
        """Drop zeros and collapse constants to Fraction."""
        clean = {e: c for e, c in terms.items() if c != 0}
        if not clean:
            return Fraction(0)
        if len(clean) == 1:
            (e, c), = clean.items()
            if not any(e):
                return c
        return Laurent(clean, nvars)

    @staticmethod
    def monomial(exps: Iterable[int], coeff=1):
        exps = tuple(exps)
        return Laurent.wrap({exps: Fraction(coeff)}, len(exps))

    # helpers ------------------------------------------------------------
    def _coerce(self, other) -> Dict[Exps, Fraction]:
        if isinstance(other, Laurent):
            if other.nvars != self.nvars:
                raise ValueError("scalars over different parameter sets")
            return other.terms
        if isinstance(other, (int, Fraction)):
            return {(0,) * self.nvars: Fraction(other)} if other else {}
        raise TypeError(f"cannot combine Laurent with {type(other).__name__}")

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.items():
            out[e] = out.get(e, 0) + c
        return Laurent.wrap(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Fraction(0)
            return Laurent({e: c * other for e, c in self.terms.items()}, self.nvars)
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent.wrap(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit_monomial():
                raise ZeroDivisionError("only monomials are invertible")
            (e, c), = self.terms.items()
            return Laurent.wrap({tuple(x * k for x in e): Fraction(1) / c ** -k}, self.nvars)
        out = Fraction(1)
        base = self
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Laurent):
            return self * other ** -1
        return NotImplemented

    def __rtruediv__(self, other):
        return other * self ** -1

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.terms == other.terms
        return False

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Laurent({format_scalar(self)})"

    def substitute(self, values: Dict[int, Fraction]):
        """Evaluate the parameters listed in ``values`` (index -> rational)."""
        out: Dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for idx, v in values.items():
                if e2[idx]:
                    c = c * Fraction(v) ** e2[idx]
                    e2[idx] = 0
            t = tuple(e2)
            out[t] = out.get(t, 0) + c
        return Laurent.wrap(out, self.nvars)


Scalar = Union[Fraction, Laurent]


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Laurent))


def param_name(idx: int, n: int) -> str:
    i, j = divmod(idx, n)
    return f"q{i + 1}{j + 1}"


def format_scalar(s, n: int | None = None) -> str:
    """Readable, re-parseable text for a scalar."""
    if not isinstance(s, Laurent):
        return str(Fraction(s))
    if n is None:
        n = int(round(s.nvars ** 0.5))
    parts = []
    for e in sorted(s.terms, reverse=True):
        c = s.terms[e]
        factors = []
        for idx, k in enumerate(e):
            if k == 1:
                factors.append(param_name(idx, n))
            elif k:
                factors.append(f"{param_name(idx, n)}^{k}")
        mono = "*".join(factors)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        elif c == -1:
            body = "-" + mono
        else:
            body = f"{c}*{mono}"
        parts.append(body)
    text = parts[0]
    for p in parts[1:]:
        text += " - " + p[1:] if p.startswith("-") else " + " + p
    return text


def scalar_to_json(s):
    """List of monomials, each {"exponents": [...], "rational": "p/q"}."""
    if isinstance(s, Laurent):
        return [{"exponents": list(e), "rational": str(c)} for e, c in sorted(s.terms.items())]
    return [{"exponents": None, "rational": str(Fraction(s))}]


def scalar_from_json(data, nvars: int):
    out: Dict[Exps, Fraction] = {}
    for m in data:
        e = tuple(m["exponents"]) if m["exponents"] is not None else (0,) * nvars
        out[e] = out.get(e, 0) + Fraction(m["rational"])
    return Laurent.wrap(out, nvars)
