"""Text syntax, printing, JSON and session configuration.

Grammar (whitespace is ignored):

    expr   := ['-'] term (('+' | '-') term)*
    term   := power ('*' power)*
    power  := factor ['^' INT]
    factor := atom | '(' expr ')' | '[' expr ',' expr ']' [twist] | '-' factor
    twist  := '_b' | '_{' inttuple '}'
    atom   := 'x' INT | INT ['/' INT] | 'q' DIGIT DIGIT
            | 'lam[' expr ']' | 'rho[' expr ']' | 'sigma[' inttuple ']'
            | 'del[' inttuple ';' exprtuple ']' | 'bdel[' inttuple ';' exprtuple ']'
            | 'qdel[' inttuple ';' tupletuple ';' exprtuple ']'

A parsed expression evaluates to either a ring element or an operator.  Ring
elements standing next to operators act as left multiplications.
"""
from __future__ import annotations

import itertools
import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import freealg as fa
from .diffops import Calculus, Del, Lam, Operator, op_add, op_scale
from .freealg import Bicharacter, Element, IndexOutOfRange, Word, add_into
from .qops import QCalculus, QDelKey, QKey
from .scalars import Laurent, format_scalar, scalar_from_json, scalar_to_json

MODES = ("classical", "beta", "quantum")


class ExprSyntaxError(SyntaxError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos
        self.text = text


class ModeError(ValueError):
    pass


# ------------------------------------------------------------------ session

@dataclass
class SessionConfig:
    n: int = 2
    mode: str = "classical"
    q: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)
    colour: bool = False
    bound: Optional[int] = None
    seed: int = 20240601

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {', '.join(MODES)}")
        for (i, j), v in self.q.items():
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise IndexOutOfRange(f"q{i}{j} outside 1..{self.n}")
            if Fraction(v) == 0:
                raise ValueError(f"q{i}{j} must be nonzero")
        self._beta = None
        self._calc = None

    @classmethod
    def from_env(cls, **kw) -> "SessionConfig":
        if os.environ.get("NCDIFF_SEED"):
            kw["seed"] = int(os.environ["NCDIFF_SEED"])
        return cls(**kw)

    @property
    def bicharacter(self) -> Bicharacter:
        """Free q_ij (or the colour pattern) with the numeric overrides substituted."""
        if self._beta is None:
            base = Bicharacter.colour(self.n) if self.colour else Bicharacter.symbolic(self.n)
            if self.q:
                vals = {(i - 1) * self.n + (j - 1): Fraction(v) for (i, j), v in self.q.items()}
                rows = []
                for row in base.entries:
                    rows.append([e.substitute(vals) if isinstance(e, Laurent) else e for e in row])
                base = Bicharacter(rows)
            self._beta = base
        return self._beta

    @property
    def colour_compatible(self) -> bool:
        return self.bicharacter.colour_compatible

    @property
    def calc(self):
        if self._calc is None:
            if self.mode == "classical":
                self._calc = Calculus(self.n)
            elif self.mode == "beta":
                self._calc = Calculus(self.n, self.bicharacter)
            else:
                self._calc = QCalculus(self.n, self.bicharacter)
        return self._calc


# ---------------------------------------------------------------- tokenizer

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<kw>lam\[|rho\[|bdel\[|qdel\[|del\[|sigma\[)
  | (?P<twist>_b|_\{)
  | (?P<gen>x\d+)
  | (?P<param>q\d\d(?!\d))
  | (?P<int>\d+)
  | (?P<op>[-+*/^(),;\[\]{}])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


# ---------------------------------------------------------------------- AST

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Gen:
    k: int


@dataclass(frozen=True)
class Param:
    i: int
    j: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Sum:
    terms: Tuple[Tuple[int, object], ...]


@dataclass(frozen=True)
class Prod:
    factors: Tuple[object, ...]


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class LamAtom:
    arg: object


@dataclass(frozen=True)
class RhoAtom:
    arg: object


@dataclass(frozen=True)
class SigmaAtom:
    g: Tuple[int, ...]


@dataclass(frozen=True)
class DelAtom:
    kind: str                      # "del", "bdel" or "qdel"
    I: Tuple[int, ...]
    K: Optional[Tuple[Tuple[int, ...], ...]]
    A: Tuple[object, ...]
    pos: int = 0


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object
    twist: Union[None, str, Tuple[int, ...]]   # None, "b" or a grading


ExprAst = object


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, msg: str):
        raise ExprSyntaxError(msg, self.tok.pos, self.text)

    def take(self, text: str) -> Token:
        if self.tok.text != text:
            self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        t = self.tok
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.text == text:
            self.i += 1
            return True
        return False

    def parse(self):
        e = self.expr()
        if self.tok.kind != "end":
            self.fail(f"unexpected {self.tok.text!r}")
        return e

    def expr(self):
        terms = []
        sign = -1 if self.accept("-") else 1
        terms.append((sign, self.term()))
        while self.tok.text in "+-" and self.tok.kind == "op":
            sign = 1 if self.take(self.tok.text).text == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self):
        fs = [self.power()]
        while self.accept("*"):
            fs.append(self.power())
        return fs[0] if len(fs) == 1 else Prod(tuple(fs))

    def power(self):
        base = self.factor()
        if self.accept("^"):
            neg = self.accept("-")
            if self.tok.kind != "int":
                self.fail("expected an integer exponent")
            k = int(self.take(self.tok.text).text)
            return Pow(base, -k if neg else k)
        return base

    def factor(self):
        t = self.tok
        if t.text == "-":
            self.i += 1
            return Neg(self.factor())
        if t.text == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        if t.text == "[":
            self.i += 1
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            twist = None
            if self.tok.kind == "twist":
                if self.take(self.tok.text).text == "_b":
                    twist = "b"
                else:
                    twist = self.inttuple(bare_ok=True)
                    self.take("}")
            return Bracket(left, right, twist)
        if t.kind == "gen":
            self.i += 1
            return Gen(int(t.text[1:]))
        if t.kind == "param":
            self.i += 1
            return Param(int(t.text[1]), int(t.text[2]))
        if t.kind == "int":
            self.i += 1
            num = int(t.text)
            if self.tok.text == "/":
                self.i += 1
                if self.tok.kind != "int":
                    self.fail("expected a denominator")
                den = int(self.take(self.tok.text).text)
                if den == 0:
                    raise ExprSyntaxError("zero denominator", t.pos, self.text)
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if t.kind == "kw":
            self.i += 1
            name = t.text[:-1]
            if name in ("lam", "rho"):
                arg = self.expr()
                self.take("]")
                return LamAtom(arg) if name == "lam" else RhoAtom(arg)
            if name == "sigma":
                g = self.inttuple()
                self.take("]")
                return SigmaAtom(g)
            I = self.inttuple()
            self.take(";")
            K = None
            if name == "qdel":
                K = self.tupletuple()
                self.take(";")
            A = self.exprtuple()
            self.take("]")
            if not I:
                raise ExprSyntaxError("empty index tuple", t.pos, self.text)
            if len(A) != len(I) or (K is not None and len(K) != len(I)):
                raise ExprSyntaxError("tuple lengths differ", t.pos, self.text)
            return DelAtom(name, I, K, A, t.pos)
        self.fail(f"unexpected {t.text or 'end of input'!r}")

    def signed_int(self) -> int:
        neg = self.accept("-")
        if self.tok.kind != "int":
            self.fail("expected an integer")
        v = int(self.take(self.tok.text).text)
        return -v if neg else v

    def inttuple(self, bare_ok: bool = False) -> Tuple[int, ...]:
        if bare_ok and self.tok.text != "(":
            out = [self.signed_int()]
            while self.accept(","):
                out.append(self.signed_int())
            return tuple(out)
        self.take("(")
        out = []
        if self.tok.text != ")":
            out.append(self.signed_int())
            while self.accept(","):
                out.append(self.signed_int())
        self.take(")")
        return tuple(out)

    def tupletuple(self):
        self.take("(")
        out = [self.inttuple()]
        while self.accept(","):
            out.append(self.inttuple())
        self.take(")")
        return tuple(out)

    def exprtuple(self):
        self.take("(")
        out = [self.expr()]
        while self.accept(","):
            out.append(self.expr())
        self.take(")")
        return tuple(out)


def parse(text: str, cfg: Optional[SessionConfig] = None) -> ExprAst:
    """Text to syntax tree; with a config, also checks mode and index range."""
    ast = _Parser(text).parse()
    if cfg is not None:
        _check(ast, cfg)
    return ast


_MODE_OF = {"del": ("classical", "quantum"), "bdel": ("beta",), "qdel": ("quantum",)}


def _check(node, cfg: SessionConfig) -> None:
    if isinstance(node, Gen):
        if not 1 <= node.k <= cfg.n:
            raise IndexOutOfRange(f"generator x{node.k} outside 1..{cfg.n}")
    elif isinstance(node, Param):
        if cfg.mode == "classical":
            raise ModeError("q parameters need beta or quantum mode")
        if not (1 <= node.i <= cfg.n and 1 <= node.j <= cfg.n):
            raise IndexOutOfRange(f"q{node.i}{node.j} outside 1..{cfg.n}")
    elif isinstance(node, DelAtom):
        if cfg.mode not in _MODE_OF[node.kind]:
            raise ModeError(f"{node.kind}[...] is not available in {cfg.mode} mode")
        for i in node.I:
            if not 1 <= i <= cfg.n:
                raise IndexOutOfRange(f"index {i} outside 1..{cfg.n}")
        for g in node.K or ():
            if len(g) != cfg.n:
                raise ExprSyntaxError(f"grading {g} needs {cfg.n} entries", node.pos)
        for a in node.A:
            _check(a, cfg)
    elif isinstance(node, SigmaAtom):
        if cfg.mode != "quantum":
            raise ModeError("sigma[...] needs quantum mode")
        if len(node.g) != cfg.n:
            raise ModeError(f"grading {node.g} needs {cfg.n} entries")
    elif isinstance(node, Bracket):
        if isinstance(node.twist, tuple):
            if cfg.mode != "quantum":
                raise ModeError("[f, g]_{gamma} needs quantum mode")
            if len(node.twist) != cfg.n:
                raise ModeError(f"grading {node.twist} needs {cfg.n} entries")
        _check(node.left, cfg)
        _check(node.right, cfg)
    else:
        for attr in ("arg", "base"):
            if hasattr(node, attr):
                _check(getattr(node, attr), cfg)
        for attr in ("terms",):
            if hasattr(node, attr):
                for _, t in node.terms:
                    _check(t, cfg)
        if isinstance(node, Prod):
            for f in node.factors:
                _check(f, cfg)


# --------------------------------------------------------------- evaluation

@dataclass(frozen=True, eq=False)
class Value:
    """A ring element (kind "elem") or an operator (kind "op").

    Zero is zero whatever its kind, since both print as "0".
    """

    kind: str
    data: dict

    def __eq__(self, other):
        if not isinstance(other, Value):
            return NotImplemented
        if not self.data and not other.data:
            return True
        return self.kind == other.kind and self.data == other.data

    @property
    def is_element(self) -> bool:
        return self.kind == "elem"


def elem_value(a: Element) -> Value:
    return Value("elem", dict(a))


def op_value(op) -> Value:
    return Value("op", dict(op))


def _as_op(v: Value, cfg: SessionConfig):
    if v.kind == "op":
        return v.data
    if cfg.mode == "quantum":
        return {QKey(w, (), None, cfg.calc.zero): c for w, c in v.data.items()}
    return {Lam(w): c for w, c in v.data.items()}


def _scale_value(v: Value, c) -> Value:
    return Value(v.kind, {k: x * c for k, x in v.data.items()} if c else {})


def _add(a: Value, b: Value, cfg) -> Value:
    if a.kind == b.kind == "elem":
        return elem_value(fa.add(a.data, b.data))
    return op_value(op_add(_as_op(a, cfg), _as_op(b, cfg)))


def _mul(a: Value, b: Value, cfg) -> Value:
    if a.kind == b.kind == "elem":
        return elem_value(fa.mul(a.data, b.data))
    return op_value(cfg.calc.compose(_as_op(a, cfg), _as_op(b, cfg)))


def _scalar_of(v: Value):
    if v.kind == "elem" and all(len(w) == 0 for w in v.data):
        return v.data.get((), Fraction(0))
    return None


def _expand_tuple(entries: Sequence[Element]):
    """Multilinear expansion of a tuple of elements into (coefficient, word tuple)."""
    for combo in itertools.product(*[list(e.items()) for e in entries]):
        c = Fraction(1)
        for _, v in combo:
            c = c * v
        yield c, tuple(w for w, _ in combo)


def evaluate(node, cfg: SessionConfig) -> Value:
    if isinstance(node, Num):
        return elem_value({(): node.value} if node.value else {})
    if isinstance(node, Gen):
        if not 1 <= node.k <= cfg.n:
            raise IndexOutOfRange(f"generator x{node.k} outside 1..{cfg.n}")
        return elem_value({(node.k,): Fraction(1)})
    if isinstance(node, Param):
        if cfg.mode == "classical":
            raise ModeError("q parameters need beta or quantum mode")
        v = cfg.bicharacter.entries[node.i - 1][node.j - 1]
        return elem_value({(): v})
    if isinstance(node, Neg):
        return _scale_value(evaluate(node.arg, cfg), -1)
    if isinstance(node, Sum):
        acc = Value("elem", {})
        for sign, t in node.terms:
            acc = _add(acc, _scale_value(evaluate(t, cfg), sign), cfg)
        return acc
    if isinstance(node, Prod):
        acc = evaluate(node.factors[0], cfg)
        for f in node.factors[1:]:
            acc = _mul(acc, evaluate(f, cfg), cfg)
        return acc
    if isinstance(node, Pow):
        base = evaluate(node.base, cfg)
        if node.exp < 0:
            s = _scalar_of(base)
            if s is None or not s or (isinstance(s, Laurent) and not s.is_unit_monomial()):
                raise ModeError("negative powers only apply to unit scalars")
            return elem_value({(): s ** node.exp})
        acc = elem_value({(): Fraction(1)})
        for _ in range(node.exp):
            acc = _mul(acc, base, cfg)
        return acc
    if isinstance(node, LamAtom):
        a = evaluate(node.arg, cfg)
        if a.kind != "elem":
            raise ModeError("lam[...] takes a ring element")
        return op_value(_as_op(a, cfg))
    if isinstance(node, RhoAtom):
        a = evaluate(node.arg, cfg)
        if a.kind != "elem":
            raise ModeError("rho[...] takes a ring element")
        if cfg.mode == "quantum":
            return op_value({QKey((), w, None, cfg.calc.zero): c for w, c in a.data.items()})
        return op_value(cfg.calc.rho(a.data))
    if isinstance(node, SigmaAtom):
        if cfg.mode != "quantum":
            raise ModeError("sigma[...] needs quantum mode")
        return op_value({QKey((), (), None, tuple(node.g)): Fraction(1)})
    if isinstance(node, DelAtom):
        if cfg.mode not in _MODE_OF[node.kind]:
            raise ModeError(f"{node.kind}[...] is not available in {cfg.mode} mode")
        for i in node.I:
            if not 1 <= i <= cfg.n:
                raise IndexOutOfRange(f"index {i} outside 1..{cfg.n}")
        entries = []
        for a in node.A:
            v = evaluate(a, cfg)
            if v.kind != "elem":
                raise ModeError("tuple entries must be ring elements")
            entries.append(v.data)
        out = {}
        for c, A in _expand_tuple(entries):
            if cfg.mode == "quantum":
                K = node.K if node.K is not None else (cfg.calc.zero,) * len(node.I)
                add_into(out, QKey((), (), QDelKey(node.I, tuple(map(tuple, K)), A), cfg.calc.zero), c)
            else:
                add_into(out, Del(node.I, A), c)
        return op_value(out)
    if isinstance(node, Bracket):
        f, g = evaluate(node.left, cfg), evaluate(node.right, cfg)
        return _bracket(f, g, node.twist, cfg)
    raise TypeError(f"unknown node {node!r}")


def _bracket(f: Value, g: Value, twist, cfg: SessionConfig) -> Value:
    beta = cfg.bicharacter if cfg.mode != "classical" else None
    if f.kind == g.kind == "elem":
        if twist is None:
            return elem_value(fa.commutator(f.data, g.data))
        if twist == "b":
            return elem_value(fa.beta_commutator(f.data, g.data, beta, cfg.n))
        # [a, b]_gamma = ab - sigma_gamma(b) a
        return elem_value(fa.sub(fa.mul(f.data, g.data),
                                 fa.mul(fa.sigma_apply(tuple(twist), g.data, beta, cfg.n), f.data)))
    phi, psi = _as_op(f, cfg), _as_op(g, cfg)
    calc = cfg.calc
    if cfg.mode == "quantum":
        if twist == "b":
            raise ModeError("use [f, g]_{gamma} for quantum operators")
        gam = tuple(twist) if isinstance(twist, tuple) else calc.zero
        return op_value(calc.commutator_gamma(phi, psi, gam))
    if isinstance(twist, tuple):
        raise ModeError("[f, g]_{gamma} needs quantum mode")
    if twist == "b":
        return op_value(calc.bracket(phi, psi))
    return op_value(calc.commutator(phi, psi))


def parse_value(text: str, cfg: SessionConfig) -> Value:
    return evaluate(parse(text, cfg), cfg)


def parse_element(text: str, cfg: SessionConfig) -> Element:
    v = parse_value(text, cfg)
    if v.kind != "elem":
        raise ModeError("expected a ring element, got an operator")
    return v.data


def parse_operator(text: str, cfg: SessionConfig):
    return _as_op(parse_value(text, cfg), cfg)


# ------------------------------------------------------------------ printing

def format_word(w: Word) -> str:
    return fa.format_word(w)


def _coeff_factor(c, n: int) -> Tuple[str, bool]:
    """Text for c as a leading factor, and whether it is negative."""
    if isinstance(c, Laurent):
        if len(c.terms) == 1:
            s = format_scalar(c, n)
            return (s[1:], True) if s.startswith("-") else (s, False)
        return f"({format_scalar(c, n)})", False
    c = Fraction(c)
    return str(abs(c)), c < 0


def _join(parts: List[Tuple[str, bool]]) -> str:
    if not parts:
        return "0"
    text = ""
    for i, (s, neg) in enumerate(parts):
        if i == 0:
            text = "-" + s if neg else s
        else:
            text += (" - " if neg else " + ") + s
    return text


def _term(c, body: str, n: int) -> Tuple[str, bool]:
    cs, neg = _coeff_factor(c, n)
    if body == "1":
        return cs, neg
    if cs == "1":
        return body, neg
    return f"{cs}*{body}", neg


def format_element(a: Element, n: int) -> str:
    return _join([_term(a[w], format_word(w), n) for w in sorted(a, key=fa.word_key)])


def _tuple(items) -> str:
    return "(" + ",".join(items) + ")"


def format_key(k, mode: str) -> str:
    if isinstance(k, Lam):
        return f"lam[{format_word(k.w)}]"
    if isinstance(k, Del):
        name = "bdel" if mode == "beta" else "del"
        return f"{name}[{_tuple(map(str, k.I))};{_tuple(map(format_word, k.A))}]"
    if isinstance(k, QKey):
        parts = []
        if k.p:
            parts.append(f"lam[{format_word(k.p)}]")
        if k.q:
            parts.append(f"rho[{format_word(k.q)}]")
        if k.d is not None:
            K = _tuple(_tuple(map(str, g)) for g in k.d.K)
            parts.append(f"qdel[{_tuple(map(str, k.d.I))};{K};{_tuple(map(format_word, k.d.A))}]")
        if any(k.g):
            parts.append(f"sigma[{_tuple(map(str, k.g))}]")
        return "*".join(parts) if parts else "lam[1]"
    raise TypeError(f"unknown key {k!r}")


def _key_sort(k):
    if isinstance(k, Lam):
        return (0, fa.word_key(k.w))
    if isinstance(k, Del):
        return (1, len(k.I), k.I, tuple(map(fa.word_key, k.A)))
    d = k.d
    dk = (-1,) if d is None else (len(d.I), d.I, d.K, tuple(map(fa.word_key, d.A)))
    return (2, dk, fa.word_key(k.p), fa.word_key(k.q), k.g)


def format_operator(op, n: int, mode: str) -> str:
    return _join([_term(op[k], format_key(k, mode), n) for k in sorted(op, key=_key_sort)])


def format_value(v: Value, cfg: SessionConfig) -> str:
    if v.kind == "elem":
        return format_element(v.data, cfg.n)
    return format_operator(v.data, cfg.n, cfg.mode)


# ---------------------------------------------------------------------- JSON

def _word_json(w: Word):
    return list(w)


def term_json(k, c) -> dict:
    t = {"coeff": scalar_to_json(c), "lambda": None, "rho": None, "del": None, "sigma": None}
    if isinstance(k, Lam):
        t["lambda"] = _word_json(k.w)
    elif isinstance(k, Del):
        t["del"] = {"I": list(k.I), "K": None, "A": [_word_json(a) for a in k.A]}
    elif isinstance(k, QKey):
        t["lambda"] = _word_json(k.p)
        t["rho"] = _word_json(k.q)
        if k.d is not None:
            t["del"] = {"I": list(k.d.I), "K": [list(g) for g in k.d.K], "A": [_word_json(a) for a in k.d.A]}
        t["sigma"] = list(k.g)
    else:
        t["lambda"] = _word_json(k)
    return t


def json_emit(v: Value, cfg: SessionConfig) -> str:
    if v.kind == "elem":
        items = sorted(v.data.items(), key=lambda kv: fa.word_key(kv[0]))
    else:
        items = [(k, v.data[k]) for k in sorted(v.data, key=_key_sort)]
    doc = {"mode": cfg.mode, "n": cfg.n, "kind": "element" if v.kind == "elem" else "operator",
           "terms": [term_json(k, c) for k, c in items]}
    return json.dumps(doc, sort_keys=True)


def json_load(text: str, cfg: SessionConfig) -> Value:
    doc = json.loads(text)
    nv = doc["n"] * doc["n"]
    out = {}
    for t in doc["terms"]:
        c = scalar_from_json(t["coeff"], nv)
        if doc["kind"] == "element":
            add_into(out, tuple(t["lambda"]), c)
        elif doc["mode"] == "quantum":
            d = t["del"]
            dk = None if d is None else QDelKey(tuple(d["I"]), tuple(map(tuple, d["K"])), tuple(map(tuple, d["A"])))
            add_into(out, QKey(tuple(t["lambda"]), tuple(t["rho"]), dk, tuple(t["sigma"])), c)
        elif t["del"] is not None:
            add_into(out, Del(tuple(t["del"]["I"]), tuple(map(tuple, t["del"]["A"]))), c)
        else:
            add_into(out, Lam(tuple(t["lambda"])), c)
    return Value("elem" if doc["kind"] == "element" else "op", out)
