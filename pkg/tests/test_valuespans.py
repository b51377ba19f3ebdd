import pytest

from picentral import catalog, valuespans
from picentral.polyspace import multilinearize, parse_poly


def test_parse_factor_tree_round_trip():
    for expr in ("[x1,x2][x3,x4]", "x1[x2,x3][x4,x5,x6]x7",
                 "[x1,x2,x3][x4,x5][x6,x7]", "[[x1,x2,x3][x4,x5,x6],x7]"):
        tree = valuespans.parse_factor_tree(expr)
        expanded = valuespans.tree_poly(tree)
        assert expanded == parse_poly(expr), expr


def test_tree_nvars():
    tree = valuespans.parse_factor_tree("x1[x2,x3][x4,x5,x6]x7")
    assert valuespans.tree_nvars(tree) == 7


def test_classify_tree_identity_proper_central_non_central():
    B, _ = catalog.catalog_algebra("A_3")
    cases = [
        ("[x1,x2][x3,x4][x5,x6]", "proper_central"),
        ("[x1,x2][x3,x4][x5,x6][x7,x8]", "identity"),
        ("[x1,x2]", "non_central"),
    ]
    for expr, want in cases:
        tree = valuespans.parse_factor_tree(expr)
        verdict, _spans = valuespans.classify_tree(B, tree, envelope=False)
        assert verdict == want, expr


def test_classify_degree8_exact():
    """Degree-8 verdicts stay exact because value spans multiply factor by
    factor instead of expanding 8! monomials."""
    B, _ = catalog.catalog_algebra("A_4")
    tree = valuespans.parse_factor_tree("[x1,x2][x3,x4][x5,x6][x7,x8]")
    verdict, spans = valuespans.classify_tree(B, tree, envelope=False)
    assert verdict == "proper_central"


def test_substitution_set_homogeneous():
    B, _ = catalog.catalog_algebra("C_1")
    subs = valuespans.substitution_set(B)
    assert subs
    for s in subs:
        pars = {B.parity[i] for i, c in enumerate(s.vec) if c}
        assert len(pars) == 1 and pars == {s.parity}
