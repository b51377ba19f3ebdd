import pytest

from picentral import catalog, codim, witnesses

EXPECT_LEMMA = {
    "A_3": "L4.1", "A_4": "L4.2", "A_5": "L4.3",
    "A_6": "L4.4", "A_7": "L4.5", "A_8": "L4.6", "A_9": "L4.6",
}


def test_detect_patterns_on_catalog():
    for name, lemma in EXPECT_LEMMA.items():
        B, _ = catalog.catalog_algebra(name)
        matches = witnesses.detect_patterns(B)
        assert any(m.lemma == lemma for m in matches), (name, [
            m.lemma for m in matches])


def test_certifier_positive_cases():
    for name in EXPECT_LEMMA:
        B, _ = catalog.catalog_algebra(name)
        rep = witnesses.certify_delta_gt_two(B)
        assert rep.certified, (name, rep.verdict)


def test_certifier_negative_cases():
    for name in ("D", "D_0", "F", "G", "UT_2", "C_1"):
        B, _ = catalog.catalog_algebra(name)
        rep = witnesses.certify_delta_gt_two(B)
        assert not rep.certified, name


def test_realize_pattern_quotient_identities_match():
    """The realized pattern algebra must have the same identity spaces as
    its textbook target at small degrees."""
    B, _ = catalog.catalog_algebra("A_3")
    matches = witnesses.detect_patterns(B)
    match = next(m for m in matches if m.lemma == "L4.1")
    subalgebra, quotient, report = witnesses.realize_pattern(B, match)
    assert report["ok"], report["checks"]
    assert report["checks"]["identity_spaces_match"]
    assert report["checks"]["coset_basis_independent_mod_kernel"]
    target = catalog.catalog_target(match.target)
    from picentral.grassmann import EnvelopeContext
    q_target = EnvelopeContext(quotient)
    for n in (2, 3, 4):
        eq, _det = codim.identity_spaces_equal(q_target, target, n)
        assert eq, n


def test_witness_report_record_is_json():
    import json
    B, _ = catalog.catalog_algebra("A_8")
    rep = witnesses.certify_delta_gt_two(B)
    doc = json.loads(rep.to_record())
    assert doc["algebra"] == "A_8"
    assert doc["verdict"] == "certified"
