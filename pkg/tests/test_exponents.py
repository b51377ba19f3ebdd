import pytest

from picentral import catalog
from picentral.exponents import delta_exponent_bounds, pi_exponent


def test_pi_exponent_small_algebras():
    for name, want in (("F", 1), ("UT_2", 2), ("G", 2), ("C_1", 2)):
        B, _ = catalog.catalog_algebra(name)
        assert pi_exponent(B).exp == want, name


def test_pi_exponent_a3():
    B, _ = catalog.catalog_algebra("A_3")
    res = pi_exponent(B)
    assert res.exp == 3
    # a witness chain exists: blocks interleaved by radical elements
    assert len(res.best_subset) >= 1
    assert len(res.radical_path) == len(res.best_subset) - 1


def test_admissible_sets_are_permutation_closed():
    B, _ = catalog.catalog_algebra("A_3")
    res = pi_exponent(B)
    # admissible_sets is keyed by frozensets, so order independence is
    # structural; check dims are consistent with block dimensions
    for subset, dim in res.admissible_sets.items():
        assert dim == sum(B.wedderburn.blocks[i].dim for i in subset)


def test_delta_bounds_ut2():
    # UT_2 has no proper central multilinear polynomials, so no witness can
    # certify a lower bound; only the admissible upper bound is known
    B, _ = catalog.catalog_algebra("UT_2")
    res = delta_exponent_bounds(B)
    assert res.exp == 2
    assert res.delta_upper == 2
    assert res.delta_witness is None


def test_delta_bounds_a3_certified():
    B, _ = catalog.catalog_algebra("A_3")
    res = delta_exponent_bounds(B)
    assert (res.delta_lower, res.delta_upper) == (3, 3)
    assert res.delta_witness is not None
