"""Headline acceptance checks, one test per claim.

Run with -v for one pass/fail line per claim. The degree-7 generator check
is heavy and gated behind PICENTRAL_DEGREE7=1 (pytest marker `degree7`).
"""

import math
import random
from fractions import Fraction

import pytest

from picentral import catalog, codim, grassmann, linalg, valuespans, witnesses
from picentral.algebra import center, supercenter_component
from picentral.exponents import delta_exponent_bounds
from picentral.polyspace import multilinearize, parse_poly


def _target(name):
    return catalog.catalog_target(name)


def _span_matches(B, computed, labels):
    want = [list(B.vector_from_expr(s)) for s in labels]
    have = [list(v) for v in computed]
    return (all(linalg.in_span(have, w) for w in want)
            and all(linalg.in_span(want, h) for h in have))


def test_exponent_table():
    """exp and certified proper-central exponent across the catalog."""
    for name in ("A_3", "A_4", "A_5", "A_6", "A_7", "A_8", "A_9"):
        B, _ = catalog.catalog_algebra(name)
        res = delta_exponent_bounds(B)
        assert res.exp == 3, (name, res.exp)
        assert (res.delta_lower, res.delta_upper) == (3, 3), (
            name, res.delta_lower, res.delta_upper)
    for name in ("A_1", "A_2"):
        B, _ = catalog.catalog_algebra(name)
        assert delta_exponent_bounds(B).exp == 4, name
    for name in ("UT_2", "G"):
        B, _ = catalog.catalog_algebra(name)
        assert delta_exponent_bounds(B).exp == 2, name


def test_envelope_center_table():
    """Exact centers of the five worked examples."""
    for name in ("A_3", "A_4", "A_5", "A_8", "A_9"):
        B, entry = catalog.catalog_algebra(name)
        if entry.envelope:
            even = supercenter_component(B, 0)
            odd = supercenter_component(B, 1)
        else:
            even, odd = center(B), []
        assert _span_matches(B, even, entry.expected["center_even"]), name
        assert _span_matches(B, odd, entry.expected["center_odd"]), name


def test_proper_central_witnesses():
    """Each catalog witness polynomial is proper central, and the recorded
    witness values (e14 on A_3, e15 on A_4) are attained by its value span."""
    for name in ("A_3", "A_4", "A_5", "A_6", "A_7", "A_8", "A_9"):
        B, entry = catalog.catalog_algebra(name)
        spec = entry.expected["proper_central_witness"]
        verdict, method = codim.is_proper_central_detailed(
            _target(name), spec["poly"])
        assert verdict == "proper_central", (name, spec["poly"], verdict)
        value = spec.get("value")
        if value:
            tree = valuespans.parse_factor_tree(spec["poly"])
            _v, spans = valuespans.classify_tree(B, tree, entry.envelope)
            vec = list(B.vector_from_expr(value))
            q = next(B.parity[i] for i, c in enumerate(vec) if c)
            rows = [list(r) for (qq, _t), rr in spans.items() if qq == q
                    for r in rr]
            assert rows and linalg.in_span(rows, vec), (name, value)


@pytest.mark.xfail(
    strict=True,
    reason="these two originally tabulated witness shapes are disproved "
    "by exact counterexample evaluations. "
    "On G(A_6), substituting g_i (x) (e34+e43) for x1..x5, 1 (x) e35 for "
    "x6 and 1 (x) (e33+e44) for x7 in [x1,x2][x3,x4][x5,x6,x7] gives "
    "-4 g1g2g3g4g5 (x) e45, which is not central (e45 does not commute "
    "with e14 up to sign). The A_7 shape fails the same way. The catalog "
    "records corrected witnesses of the same degree-8 product shape that "
    "certify the identical exponent conclusions.")
@pytest.mark.parametrize("name,poly", [
    ("A_6", "[x1,x2][x3,x4][x5,x6,x7]"),
    ("A_7", "[x1,x2,x3][x4,x5][x6,x7]"),
])
def test_stated_degree7_witnesses(name, poly):
    verdict, _m = codim.is_proper_central_detailed(_target(name), poly)
    assert verdict == "proper_central", (name, poly, verdict)


def test_ut2_delta_codimensions_and_additivity():
    """c_n^delta(UT_2) vanishes for n = 1..6, and every reported triple is
    additive: c_n = c_n^z + c_n^delta."""
    want = [1, 2, 6, 18, 50, 130]
    for n in range(1, 7):
        mode = "exact" if n <= 5 else "modular"
        res = codim.central_space(_target("UT_2"), n, mode=mode)
        assert res.c_n == want[n - 1], (n, res.c_n)
        assert res.c_n_delta == 0, (n, res.c_n_delta)
        assert res.c_n == res.c_n_z + res.c_n_delta, n
        if n <= 5:
            assert res.certified


@pytest.mark.parametrize("name", ["C_1", "C_2"])
def test_tideal_spans_match_identity_spaces(name):
    """dim(P_n intersect the generated T-ideal) equals
    dim(P_n intersect Id) at n = 4, 5 (exact) and n = 6 (two primes)."""
    gens = catalog.catalog_entry(name).expected["tideal_generators"]
    want = {4: 8, 5: 80, 6: 624}
    for n in (4, 5):
        td = codim.tideal_span_dim_exact(gens, n)
        sp = codim.identity_space(_target(name), n, mode="exact")
        assert td == sp.dim == want[n], (name, n, td, sp.dim)
    dims, _samples = codim.tideal_span_dim_modular(gens, 6, sample=False)
    sp = codim.identity_space(_target(name), 6, mode="modular")
    assert all(d == sp.dim == want[6] for d in dims), (name, dims, sp.dim)


@pytest.mark.degree7
@pytest.mark.parametrize("name,gen", [
    ("A_6", "x1[x2,x3][x4,x5,x6]x7"),
    ("A_7", "x1[x2,x3,x4][x5,x6]x7"),
])
def test_degree7_tideal_generator(name, gen):
    """At n = 7 the span of the single degree-7 generator meets P_7 in the
    full identity space: dim = 5040 - c_7."""
    dims, _samples = codim.tideal_span_dim_modular([gen], 7)
    sp = codim.identity_space(_target(name), 7, mode="modular")
    assert all(d == sp.dim for d in dims), (name, dims, sp.dim, sp.c_n)


def test_variant_identity_spaces_coincide():
    """All graded variants define the same multilinear identities as their
    base algebra for n = 1..6."""
    for base, variants in (("A_6", ["A_6^1", "A_6^2", "A_6^3"]),
                           ("A_7", ["A_7^1", "A_7^2", "A_7^3"])):
        for var in variants:
            for n in range(1, 7):
                eq, det = codim.identity_spaces_equal(
                    _target(base), _target(var), n)
                assert eq, (base, var, n, det)


def test_membership_table():
    """Identity / non-identity verdicts for the catalog polynomial table.
    Verdicts at degree <= 5 are exact scans; factored shapes stay exact at
    any degree; remaining high-degree non-memberships are sampled, with any
    hit verified exactly."""
    for name in catalog.catalog_names():
        entry = catalog.catalog_entry(name)
        for poly in entry.expected.get("identities", []):
            verdict, _m = codim.is_proper_central_detailed(_target(name), poly)
            assert verdict in ("identity",), (name, poly, verdict)
        for poly in entry.expected.get("non_identities", []):
            verdict, _m = codim.is_proper_central_detailed(_target(name), poly)
            assert verdict != "identity", (name, poly, verdict)


def test_witness_certifier():
    """The pattern certifier reports a certified witness exactly on the
    algebras whose envelopes have proper-central exponent >= 3, and reports
    no witness on the diagonal/semisimple/small inputs."""
    for name in catalog.catalog_names():
        B, entry = catalog.catalog_algebra(name)
        rep = witnesses.certify_delta_gt_two(B)
        exp_delta = entry.expected.get("exp_delta")
        want = (exp_delta >= 3 if exp_delta is not None
                else name.startswith("A_"))
        assert rep.certified == want, (name, rep.verdict)
        if rep.certified:
            lemma = rep.matches[0].lemma
            assert lemma.startswith("L") or lemma == "simple-block", name
            if lemma.startswith("L"):
                assert rep.checks_passed, name


def test_oracle_equivalences():
    """Three independent-oracle agreements: sign rule vs truncated model,
    exact vs modular ranks, reduced vs full T-ideal spans."""
    # sign rule vs truncated envelope model, 200 random trials
    rng = random.Random(99)
    B, _ = catalog.catalog_algebra("C_1")
    ctx = grassmann.EnvelopeContext(B)
    exprs = ["[x1,x2]", "[x1,x2,x3]", "[x1,x2][x3,x4]", "[x1,x2,x3]x4x5"]
    models = {}
    for trial in range(200):
        expr = exprs[trial % len(exprs)]
        mp = multilinearize(parse_poly(expr))[0]
        n = mp.n
        if n not in models:
            models[n] = grassmann.build_envelope_model(B, n)
        model = models[n]
        pars = [rng.randrange(2) for _ in range(n)]
        elems = []
        for q in pars:
            v = [Fraction(0)] * B.dim
            for i in range(B.dim):
                if B.parity[i] == q:
                    v[i] = Fraction(rng.randint(-2, 2))
            elems.append(v)
        want = grassmann.sign_rule_evaluate(ctx, mp, pars, elems)
        vals = []
        for i, (q, v) in enumerate(zip(pars, elems)):
            mask = (1 << i) if q else 0
            mv = [Fraction(0)] * model.dim
            for bi, c in enumerate(v):
                if c:
                    base = grassmann.envelope_element(model, B, mask, bi)
                    mv = [a + c * b for a, b in zip(mv, base)]
            vals.append(mv)
        got = [Fraction(0)] * model.dim
        for word, c in mp.coeffs.items():
            term = vals[word[0]]
            for v in word[1:]:
                term = model.multiply(term, vals[v])
            got = [a + c * b for a, b in zip(got, term)]
        odd_mask = sum(1 << i for i, q in enumerate(pars) if q)
        for k in range(B.dim):
            if B.parity[k] != sum(pars) % 2:
                assert want[k] == 0
                continue
            base = grassmann.envelope_element(model, B, odd_mask, k)
            slot = base.index(Fraction(1))
            assert got[slot] == want[k], (expr, pars)

    # exact vs modular ranks at n <= 4
    for name in ("UT_2", "A_3", "C_2", "G"):
        for n in (3, 4):
            exact = codim.identity_space(_target(name), n, mode="exact")
            modular = codim.identity_space(_target(name), n, mode="modular")
            assert exact.c_n == modular.c_n, (name, n)

    # reduced vs full T-ideal spans at n = 4, 5
    from picentral.polyspace import perm_rank, tideal_span_polys

    def span_dim(gens, n, mode):
        rows = []
        for mp in tideal_span_polys(
                [multilinearize(parse_poly(g))[0] for g in gens], n, mode):
            row = [Fraction(0)] * math.factorial(n)
            for w, c in mp.coeffs.items():
                row[perm_rank(w)] = c
            rows.append(row)
        return linalg.rank(rows)

    for gens in (["[x1,x2,x3]x4"], ["[x1,x2][x3,x4]"]):
        for n in (4, 5):
            assert span_dim(gens, n, "reduced") == span_dim(gens, n, "full")
