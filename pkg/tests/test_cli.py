import json

from ncdiff.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_apply(capsys):
    assert run(capsys, "--n", "2", "apply", "del[(1,2);(1,1)]", "x1*x2 - x2*x1") == (0, "1", "")


def test_equal_with_witness(capsys):
    code, out, _ = run(capsys, "--n", "2", "equal", "lam[x1]", "rho[x1]")
    assert code == 1 and out.startswith("different on x2")
    code, out, _ = run(capsys, "equal", "del[(1,2);(x2*x1,1)] - del[(1,2);(x1*x2,1)]", "lam[x2]*del[(2);(1)] - del[(2);(x2)]")
    assert (code, out) == (0, "equal")


def test_normalize_known_relation(capsys):
    code, out, _ = run(capsys, "normalize", "del[(1,2);(x2*x1,1)] - del[(1,2);(x1*x2,1)] - lam[x2]*del[(2);(1)] + del[(2);(x2)]")
    assert (code, out) == (0, "0")


def test_order_and_compose(capsys):
    assert run(capsys, "order", "del[(1,2);(1,1)]")[:2] == (0, "2")
    code, out, _ = run(capsys, "--json", "compose", "del[(1);(1)]", "lam[x1]")
    assert code == 0 and json.loads(out)["kind"] == "operator"


def test_quantum_apply(capsys):
    code, out, _ = run(capsys, "--mode", "quantum", "apply", "qdel[(1);((0,1));(1)]", "x1*x1*x1")
    assert (code, out) == (0, "(q21^2 + q21 + 1)*x1*x1")


def test_psform_reduce_simplify(capsys):
    code, out, _ = run(capsys, "psform", "lam[x1] + del[(1);(x2)]", "--max-order", "2")
    assert code == 0 and out.splitlines()[0] == "constant: x1"
    code, out, _ = run(capsys, "reduce-element", "3*x1*x2 + x2")
    assert (code, out) == (0, "del[(1,2);(1,1)] -> 3")
    code, out, _ = run(capsys, "simplify-demo", "lam[x1]")
    assert code == 0 and out.endswith("lam[1]")


def test_check_identity(capsys):
    code, out, _ = run(capsys, "check-identity", "product-dels-2x2", "--trials", "3")
    assert code == 0 and json.loads(out)["passed"]
    code, _, err = run(capsys, "check-identity", "no-such-identity")
    assert code == 2 and "unknown identity" in err


def test_errors_go_to_stderr(capsys):
    code, out, err = run(capsys, "apply", "lam[x3]", "x1")
    assert code == 2 and not out and err.startswith("ncdiff: error:")
    code, _, err = run(capsys, "--mode", "quantum", "psform", "lam[x1]", "--max-order", "1")
    assert code == 2


def test_list_identities(capsys):
    code, out, _ = run(capsys, "list-identities")
    assert code == 0 and "product-dels-2x2:" in out
