import math

import pytest

from picentral import catalog, codim, linalg


def _target(name):
    return catalog.catalog_target(name)


def test_ut2_codimension_sequence_exact():
    want = [1, 2, 6, 18, 50]
    for n in range(1, 6):
        sp = codim.identity_space(_target("UT_2"), n, mode="exact")
        assert sp.c_n == want[n - 1]
        assert sp.certified


def test_exact_vs_modular_agree_small():
    for name in ("UT_2", "A_3", "C_1", "G"):
        t = _target(name)
        for n in (2, 3, 4):
            exact = codim.identity_space(t, n, mode="exact")
            modular = codim.identity_space(t, n, mode="modular")
            assert exact.c_n == modular.c_n, (name, n)


def test_grassmann_codims():
    # the infinite Grassmann algebra has c_n = 2^(n-1)
    for n in range(1, 6):
        sp = codim.identity_space(_target("G"), n, mode="exact")
        assert sp.c_n == 2 ** (n - 1)


def test_field_codims_trivial():
    for n in range(1, 5):
        sp = codim.identity_space(_target("F"), n, mode="exact")
        assert sp.c_n == 1


def test_central_space_additivity_and_delta():
    res = codim.central_space(_target("UT_2"), 4, mode="exact")
    assert res.c_n == res.c_n_z + res.c_n_delta
    assert res.c_n_delta == 0
    res = codim.central_space(_target("A_3"), 4, mode="exact")
    assert res.c_n == res.c_n_z + res.c_n_delta
    assert res.c_n_delta >= 0


def test_identity_space_nullspace_contains_known_identity():
    """[x1,x2][x3,x4][x5,x6][x7,x8] restricted to n=4 variables via
    [x1,x2][x3,x4] is not an identity of UT_2 at n=4, but the known
    generator [x1,x2][x3,x4] of Id(UT_2) at n=4 is."""
    assert codim.is_identity(_target("UT_2"), "[x1,x2][x3,x4]")
    assert not codim.is_identity(_target("UT_2"), "[x1,x2]x3x4")


def test_support_closure_soundness():
    """Columns outside the support closure evaluate to zero."""
    B, _ = catalog.catalog_algebra("A_3")
    n = 3
    tuples, exhaustive = codim._support_tuples(B, n)
    assert exhaustive
    sup = set(map(tuple, tuples))
    ev = codim._Evaluator(B, n, envelope=True, p=0)
    import numpy as np
    for t in range(B.dim ** n):
        tup = tuple(int(x) for x in ev.decode(t))
        blk = ev.block_at(np.asarray(tup, dtype=np.int64))
        if tup not in sup:
            assert not blk.any(), tup


def test_support_closure_permutation_closed():
    B, _ = catalog.catalog_algebra("UT_3")
    tuples, exhaustive = codim._support_tuples(B, 4)
    assert exhaustive
    sup = set(map(tuple, tuples))
    import itertools
    for tup in list(sup)[:200]:
        for perm in itertools.permutations(tup):
            assert perm in sup


def test_tideal_exact_matches_modular():
    gens = ["[x1,x2,x3]x4"]
    for n in (4, 5):
        exact = codim.tideal_span_dim_exact(gens, n)
        dims, _ = codim.tideal_span_dim_modular(gens, n, sample=False)
        assert all(d == exact for d in dims)


def test_is_identity_detailed_methods():
    ok, method = codim.is_identity_detailed(_target("UT_2"), "[x1,x2][x3,x4]")
    assert ok and method == "exact"
    ok, method = codim.is_identity_detailed(_target("UT_2"), "[x1,x2]")
    assert not ok and method == "exact"


def test_proper_central_classification():
    # e11+e22 is the unit of UT_2; [x1,x2] is not central there
    verdict = codim.is_proper_central(_target("UT_2"), "[x1,x2]")
    assert verdict == "non_central"
    verdict = codim.is_proper_central(_target("UT_2"), "[x1,x2][x3,x4]")
    assert verdict == "identity"


def test_identity_spaces_equal_self():
    eq, det = codim.identity_spaces_equal(_target("A_3"), _target("A_3"), 4)
    assert eq
    for ranks in det["ranks"]:
        assert ranks[0] == ranks[1] == ranks[2]


def test_monotonicity_subalgebras():
    """Identities of an algebra hold in its subalgebras: Id(UT_3) at n=4
    is contained in Id(D) for the diagonal-type subalgebra."""
    for sub_name in ("D", "D_0"):
        entry = catalog.catalog_entry(sub_name)
        if not entry.subalgebra_of:
            continue
        sup = _target(entry.subalgebra_of)
        sub = _target(sub_name)
        n = 4
        sup_sp = codim.identity_space(sup, n, mode="exact")
        sub_sp = codim.identity_space(sub, n, mode="exact")
        assert sub_sp.dim >= sup_sp.dim, (sub_name, entry.subalgebra_of)
