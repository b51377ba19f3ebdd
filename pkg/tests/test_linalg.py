import random
from fractions import Fraction

from hypothesis import given, strategies as st

from picentral import linalg


def test_rref_and_rank():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    red, piv = linalg.rref([list(map(Fraction, r)) for r in rows])
    assert len(red) == 2
    assert piv == [0, 1]
    assert linalg.rank([list(map(Fraction, r)) for r in rows]) == 2


def test_nullspace_orthogonality():
    rows = [[Fraction(1), Fraction(2), Fraction(3)],
            [Fraction(0), Fraction(1), Fraction(1)]]
    ns = linalg.nullspace(rows, 3)
    assert len(ns) == 1
    for r in rows:
        assert sum(a * b for a, b in zip(r, ns[0])) == 0


def test_in_span_and_span_equal():
    a = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    b = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    assert linalg.span_equal(a, b)
    assert linalg.in_span(b, [Fraction(3), Fraction(5)])
    assert not linalg.in_span([b[0]], [Fraction(1), Fraction(0)])


def test_solve():
    rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    x = linalg.solve(rows, [Fraction(5), Fraction(10)])
    assert x is not None
    assert [sum(a * b for a, b in zip(r, x)) for r in rows] == \
        [Fraction(5), Fraction(10)]
    assert linalg.solve([[Fraction(1), Fraction(1)]],
                        [Fraction(1)]) is not None


def test_clear_denominators():
    rows = [[Fraction(1, 2), Fraction(1, 3)]]
    out = linalg.clear_denominators(rows)
    assert out == [[3, 2]]


def test_default_primes_fit_kernel_bound():
    # the echelon kernel delays reduction over 512 pivots: 512*p^2 < 2^63
    for p in linalg.DEFAULT_PRIMES:
        assert 512 * p * p < 2 ** 63
        assert linalg._is_probable_prime(p)


def test_random_prime():
    rng = random.Random(3)
    for _ in range(5):
        p = linalg.random_prime(rng)
        assert linalg._is_probable_prime(p)
        assert 512 * p * p < 2 ** 63


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
                min_size=1, max_size=6))
def test_nullspace_dimension_theorem(mat):
    rows = [[Fraction(c) for c in r] for r in mat]
    r = linalg.rank([list(x) for x in rows])
    ns = linalg.nullspace([list(x) for x in rows], 4)
    assert r + len(ns) == 4
