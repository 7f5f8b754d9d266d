from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncdiff import exprio as e
from ncdiff.diffops import Del, Lam

CL = e.SessionConfig(mode="classical")
BETA = e.SessionConfig(mode="beta", colour=True)
Q = e.SessionConfig(mode="quantum")
F1 = Fraction(1)

gens = st.sampled_from(["x1", "x2"])
word = st.lists(gens, min_size=1, max_size=3).map("*".join) | st.just("1")
coef = st.sampled_from(["", "2*", "-1/3*", "5*"])


@st.composite
def classical_text(draw):
    parts = []
    for _ in range(draw(st.integers(1, 3))):
        kind = draw(st.sampled_from(["lam", "rho", "del", "word"]))
        if kind == "del":
            idx = draw(st.lists(st.sampled_from("12"), min_size=1, max_size=2))
            body = f"del[({','.join(idx)});({','.join(draw(word) for _ in idx)})]"
        elif kind == "word":
            body = draw(word)
        else:
            body = f"{kind}[{draw(word)}]"
        parts.append(draw(coef) + body)
    return " + ".join(parts)


@settings(max_examples=150, deadline=None)
@given(classical_text())
def test_round_trip_classical(text):
    v = e.parse_value(text, CL)
    printed = e.format_value(v, CL)
    assert e.parse_value(printed, CL) == v
    assert e.json_load(e.json_emit(v, CL), CL) == v


def test_brackets_and_powers():
    assert e.format_value(e.parse_value("[x1,x2]", CL), CL) == "x1*x2 - x2*x1"
    assert e.parse_operator("[del[(1);(1)], lam[x1]]", CL) == {Lam(()): F1}
    assert e.format_value(e.parse_value("[x1,x2]_b", BETA), BETA) == "x1*x2 - q12*x2*x1"
    assert len(e.parse_element("(x1+x2)^2", CL)) == 4


def test_rho_is_eliminated():
    op = e.parse_operator("rho[x1]", CL)
    assert Lam((1,)) in op and Del((2,), ((1, 2),)) in op


def test_quantum_keys_print_in_order():
    assert e.format_value(e.parse_value("sigma[(1,0)]*lam[x1]", Q), Q) == "q11*lam[x1]*sigma[(1,0)]"


def test_errors():
    with pytest.raises(e.IndexOutOfRange):
        e.parse_value("x3", CL)
    with pytest.raises(e.ModeError):
        e.parse_value("q12*x1", CL)
    with pytest.raises(e.ModeError):
        e.parse_value("qdel[(1);((0,1));(1)]", CL)
    with pytest.raises(e.ExprSyntaxError):
        e.parse_value("x1 +", CL)


def test_json_is_stable():
    v = e.parse_value("del[(1,2);(x1,1)] - 2*lam[x2]", CL)
    assert e.json_emit(v, CL) == e.json_emit(e.parse_value("-2*lam[x2] + del[(1,2);(x1,1)]", CL), CL)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("NCDIFF_SEED", "17")
    assert e.SessionConfig.from_env(seed=3).seed == 17
