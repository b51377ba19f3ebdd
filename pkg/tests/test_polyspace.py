import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from picentral import polyspace
from picentral.polyspace import (GeneralPoly, MultilinearPoly, commutator,
                                 multilinearize, parse_poly, perm_rank,
                                 perm_unrank, standard_poly,
                                 tideal_multilinear_span, tideal_span_polys)


def test_parse_basic_shapes():
    f = parse_poly("[x1,x2][x3,x4]")
    g = commutator(GeneralPoly.variable(0), GeneralPoly.variable(1)) \
        * commutator(GeneralPoly.variable(2), GeneralPoly.variable(3))
    assert f.coeffs == g.coeffs


def test_parse_long_commutator_left_normed():
    # [x1,x2,x3] == [[x1,x2],x3]
    f = parse_poly("[x1,x2,x3]")
    g = commutator(commutator(GeneralPoly.variable(0),
                              GeneralPoly.variable(1)),
                   GeneralPoly.variable(2))
    assert f.coeffs == g.coeffs


def test_standard_poly_alternates():
    st4 = parse_poly("St4")
    assert st4.coeffs == standard_poly(4).coeffs
    assert len(st4.coeffs) == 24
    signs = set(st4.coeffs.values())
    assert signs == {Fraction(1), Fraction(-1)}


def test_parse_rejects_garbage():
    for bad in ("[x1", "x1]", "x1**", "[x1;x2]", ""):
        with pytest.raises(Exception):
            parse_poly(bad)


@given(st.integers(min_value=1, max_value=7), st.randoms())
def test_perm_rank_unrank_round_trip(n, rnd):
    perm = list(range(n))
    rnd.shuffle(perm)
    r = perm_rank(tuple(perm))
    assert 0 <= r < math.factorial(n)
    assert perm_unrank(r, n) == tuple(perm)


def test_multilinearize_already_multilinear():
    f = parse_poly("[x1,x2][x3,x4]")
    parts = multilinearize(f)
    assert len(parts) == 1
    assert parts[0].coeffs == f.coeffs


def test_multilinearize_powers():
    # x1^2 multilinearizes to x1 x2 + x2 x1 in fresh variables
    f = GeneralPoly.variable(0) * GeneralPoly.variable(0)
    parts = multilinearize(f)
    assert len(parts) == 1
    mp = parts[0]
    assert mp.n == 2
    assert mp.coeffs == {(0, 1): Fraction(1), (1, 0): Fraction(1)}


@given(st.permutations(list(range(4))))
def test_span_permutation_invariance(perm):
    """Renaming variables of the generator does not change its span."""
    base = parse_poly("[x1,x2][x3,x4]")
    renamed = MultilinearPoly(
        4, {tuple(perm[v] for v in w): c for w, c in base.coeffs.items()})
    d1 = _span_dim([base], 4)
    d2 = _span_dim([renamed], 4)
    assert d1 == d2


def _span_dim(gens, n, mode="reduced"):
    from picentral import linalg
    rows = []
    for mp in tideal_span_polys(gens, n, mode=mode):
        row = [Fraction(0)] * math.factorial(n)
        for w, c in mp.coeffs.items():
            row[perm_rank(w)] = c
        rows.append(row)
    return linalg.rank(rows)


def test_reduced_vs_full_span_agree_small():
    gens = [parse_poly("[x1,x2,x3]x4")]
    for n in (4, 5):
        assert _span_dim(gens, n, "reduced") == _span_dim(gens, n, "full")


def test_rewrite_check():
    for n in (4, 5):
        assert polyspace.rewrite_check(n)["ok"]
