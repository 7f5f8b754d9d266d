import json

import pytest

from ncdiff import catalog


def test_every_entry_has_an_anchor():
    names = catalog.names()
    assert len(names) == len(set(names)) > 40
    for nm in names:
        assert catalog.CATALOG[nm].anchor


@pytest.mark.parametrize("name", catalog.names())
def test_entry_passes(name):
    rep = catalog.run_identity(name, trials=2, seed=5)
    assert rep.passed, rep.witness


def test_reports_are_deterministic():
    a = catalog.run_identity("product-dels-2x2", trials=3, seed=11).to_json()
    b = catalog.run_identity("product-dels-2x2", trials=3, seed=11).to_json()
    assert a == b and json.loads(a)["passed"]


def test_printed_two_by_two_misses_a_term():
    full = catalog.product_2x2_terms(1, 2, (), (), 1, 2, (1, 2), ())
    printed = catalog.product_2x2_terms(1, 2, (), (), 1, 2, (1, 2), (), printed=True)
    assert catalog.same(catalog._CLASSICAL, full, printed) is not None
