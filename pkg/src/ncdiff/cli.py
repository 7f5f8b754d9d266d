"""ncdiff command line: parse, compose, normalize and check operators."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import catalog, diffops as do, exprio, oracle, qops
from .exprio import SessionConfig, elem_value, op_value
from .freealg import format_word
from .scalars import format_scalar


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncdiff", description=__doc__)
    ap.add_argument("--n", type=int, default=2, help="number of generators")
    ap.add_argument("--mode", choices=exprio.MODES, default="classical")
    ap.add_argument("--q", nargs=3, action="append", default=[], metavar=("I", "J", "VALUE"),
                    help="substitute a rational for q_ij (repeatable)")
    ap.add_argument("--colour", action="store_true", help="use q_ji = 1/q_ij, q_ii = 1")
    ap.add_argument("--seed", type=int, default=None, help="random seed (NCDIFF_SEED wins)")
    ap.add_argument("--json", action="store_true", help="emit JSON")
    ap.add_argument("--bound", type=int, default=None, help="word length for evaluation checks")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("apply", help="apply an operator to an element")
    p.add_argument("op")
    p.add_argument("elem")
    p = sub.add_parser("compose", help="compose two operators")
    p.add_argument("op1")
    p.add_argument("op2")
    p = sub.add_parser("normalize", help="canonical form")
    p.add_argument("op")
    p = sub.add_parser("order", help="order of an operator")
    p.add_argument("op")
    p = sub.add_parser("equal", help="decide equality; exit 1 with a witness word if different")
    p.add_argument("op1")
    p.add_argument("op2")
    p = sub.add_parser("psform", help="power series coefficients up to a length")
    p.add_argument("op")
    p.add_argument("--max-order", type=int, required=True)
    p = sub.add_parser("reduce-element", help="an operator taking the element to a nonzero scalar")
    p.add_argument("elem")
    p = sub.add_parser("simplify-demo", help="commutator steps down to a unit")
    p.add_argument("op")
    p = sub.add_parser("check-identity", help="run a catalog identity on random instances")
    p.add_argument("name", help="identity name or 'all'")
    p.add_argument("--trials", type=int, default=None)
    sub.add_parser("list-identities", help="names and descriptions of catalog identities")
    return ap


def _config(args) -> SessionConfig:
    q = {}
    for i, j, v in args.q:
        q[(int(i), int(j))] = Fraction(v)
    kw = dict(n=args.n, mode=args.mode, q=q, colour=args.colour, bound=args.bound)
    if args.seed is not None:
        kw["seed"] = args.seed
    return SessionConfig.from_env(**kw)


def _emit(v, cfg: SessionConfig, json_out: bool) -> None:
    print(exprio.json_emit(v, cfg) if json_out else exprio.format_value(v, cfg))


def _need_mode(cfg: SessionConfig, what: str, modes=("classical", "beta")) -> None:
    if cfg.mode not in modes:
        raise exprio.ModeError(f"{what} is available in {' and '.join(modes)} mode only")


def _witness(cfg: SessionConfig, a, b):
    """First word separating a and b, or None."""
    calc = cfg.calc
    if cfg.bound is not None:
        L = cfg.bound
    elif cfg.mode == "quantum":
        L = qops.default_q_bound(a, b)
    else:
        L = calc.zero_test_bound(do.op_sub(a, b))
    v = oracle.eval_equal(a, b, calc.apply, L, cfg.n)
    return None if v.equal else v


def _equal(cfg: SessionConfig, a, b, json_out: bool) -> int:
    if cfg.mode == "quantum" or cfg.bound is not None:
        v = _witness(cfg, a, b)
        same = v is None
    else:
        same = cfg.calc.equal(a, b)
        v = None if same else _witness(cfg, a, b)
    if json_out:
        doc = {"equal": same}
        if v is not None:
            doc["witness"] = list(v.witness)
            doc["left"] = exprio.format_element(v.left, cfg.n)
            doc["right"] = exprio.format_element(v.right, cfg.n)
        print(json.dumps(doc, sort_keys=True))
    elif same:
        print("equal")
    elif v is None:
        print("different")
    else:
        print(f"different on {format_word(v.witness)}: "
              f"{exprio.format_element(v.left, cfg.n)} vs {exprio.format_element(v.right, cfg.n)}")
    return 0 if same else 1


def _check(name: str, trials: Optional[int], seed: Optional[int], n: int) -> int:
    if n != catalog.N:
        raise ValueError(f"the identity catalog runs with n = {catalog.N}")
    if name == "all":
        todo = catalog.names()
    elif name in catalog.CATALOG:
        todo = [name]
    else:
        raise KeyError(f"unknown identity {name!r}; see list-identities")
    bad = 0
    for nm in todo:
        rep = catalog.run_identity(nm, trials=trials, seed=seed)
        print(rep.to_json(), flush=True)
        bad += not rep.passed
    return 1 if bad else 0


def run(args) -> int:
    if args.cmd == "list-identities":
        for nm in catalog.names():
            ident = catalog.CATALOG[nm]
            if args.json:
                print(json.dumps({"name": nm, "anchor": ident.anchor, "trials": ident.trials}))
            else:
                print(f"{nm}: {ident.anchor}")
        return 0
    cfg = _config(args)
    if args.cmd == "check-identity":
        seed = int(os.environ["NCDIFF_SEED"]) if os.environ.get("NCDIFF_SEED") else args.seed
        return _check(args.name, args.trials, seed, cfg.n)

    calc = cfg.calc
    if args.cmd == "apply":
        op = exprio.parse_operator(args.op, cfg)
        a = exprio.parse_element(args.elem, cfg)
        _emit(elem_value(calc.apply(op, a)), cfg, args.json)
    elif args.cmd == "compose":
        op = calc.compose(exprio.parse_operator(args.op1, cfg), exprio.parse_operator(args.op2, cfg))
        _emit(op_value(op), cfg, args.json)
    elif args.cmd == "normalize":
        op = exprio.parse_operator(args.op, cfg)
        if cfg.mode != "quantum":
            op = calc.canonical(op).to_normal()
        _emit(op_value(op), cfg, args.json)
    elif args.cmd == "order":
        op = exprio.parse_operator(args.op, cfg)
        r = calc.order_bound(op) if cfg.mode == "quantum" else calc.order(op)
        print(json.dumps({"order": r}) if args.json else r)
    elif args.cmd == "equal":
        return _equal(cfg, exprio.parse_operator(args.op1, cfg), exprio.parse_operator(args.op2, cfg), args.json)
    elif args.cmd == "psform":
        _need_mode(cfg, "psform", ("classical",))
        const, coeffs = do.ps_form(exprio.parse_operator(args.op, cfg), args.max_order, cfg.n)
        if args.json:
            doc = {"constant": exprio.format_element(const, cfg.n),
                   "coefficients": [{"I": list(I), "w": list(w), "coeff": str(c)}
                                    for (I, w), c in sorted(coeffs.items())]}
            print(json.dumps(doc, sort_keys=True))
        else:
            print(f"constant: {exprio.format_element(const, cfg.n)}")
            for (I, w), c in sorted(coeffs.items()):
                print(f"{exprio.format_key(do.Del(I, ((),) * (len(I) - 1) + (w,)), cfg.mode)}: {format_scalar(c)}")
    elif args.cmd == "reduce-element":
        _need_mode(cfg, "reduce-element", ("classical",))
        a = exprio.parse_element(args.elem, cfg)
        k, c = do.reduce_element_to_scalar(a)
        val = calc.apply({k: Fraction(1)}, a)
        if args.json:
            print(json.dumps({"operator": exprio.format_key(k, cfg.mode), "value": exprio.format_element(val, cfg.n)}))
        else:
            print(f"{exprio.format_key(k, cfg.mode)} -> {exprio.format_element(val, cfg.n)}")
    elif args.cmd == "simplify-demo":
        _need_mode(cfg, "simplify-demo", ("classical",))
        steps = do.simplicity_reduce(exprio.parse_operator(args.op, cfg), cfg.n)
        for s in steps:
            if s.kind == "del":
                with_ = f"del[({','.join(map(str, s.index))});({','.join('1' * len(s.index))})]"
            else:
                with_ = f"lam[x{s.index[0]}]"
            body = exprio.format_operator(s.result, cfg.n, cfg.mode)
            if args.json:
                print(json.dumps({"commutator_with": with_, "result": body}))
            else:
                print(f"[ . , {with_}] = {body}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    try:
        return run(args)
    except (SyntaxError, ValueError, KeyError, ArithmeticError, do.BudgetExceeded) as e:
        print(f"ncdiff: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
