"""Exact rational linear algebra helpers.

Everything here works over the rationals with `fractions.Fraction`; it is the
slow, trustworthy path. The fast modular path lives in `kernels` /
`ranks`.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

Vector = list[Fraction]


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def rref(rows: list[Vector]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form. Returns (reduced nonzero rows, pivot columns)."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    out: list[Vector] = []
    for row in rows:
        for piv, prow in zip(pivots, out):
            if row[piv]:
                c = row[piv]
                for k in range(ncols):
                    row[k] -= c * prow[k]
        lead = next((k for k in range(ncols) if row[k]), None)
        if lead is None:
            continue
        inv = Fraction(1) / row[lead]
        row = [x * inv for x in row]
        for prow in out:
            if prow[lead]:
                c = prow[lead]
                for k in range(ncols):
                    prow[k] -= c * row[k]
        out.append(row)
        pivots.append(lead)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [out[i] for i in order], [pivots[i] for i in order]


def rank(rows: list[Vector]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: list[Vector], ncols: int | None = None) -> list[Vector]:
    """Basis of {x : A x = 0} for A given by rows."""
    if not rows:
        if ncols is None:
            raise ValueError("need ncols for empty system")
        return [[Fraction(i == j) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for prow, p in zip(red, pivots):
            vec[p] = -prow[f]
        basis.append(vec)
    return basis


def in_span(basis_rows: list[Vector], vec: Vector) -> bool:
    """True iff vec lies in the row span of basis_rows."""
    red, pivots = rref(basis_rows)
    v = list(map(Fraction, vec))
    for prow, p in zip(red, pivots):
        if v[p]:
            c = v[p]
            for k in range(len(v)):
                v[k] -= c * prow[k]
    return not any(v)


def span_equal(a: list[Vector], b: list[Vector]) -> bool:
    ra, _ = rref(a)
    return len(ra) == rank(a + b) == rank(b)


def solve(rows: list[Vector], rhs: Vector) -> Vector | None:
    """One solution of A x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    sol = [Fraction(0)] * ncols
    for prow, p in zip(red, pivots):
        if p == ncols:
            return None
        sol[p] = prow[ncols]
    return sol


def clear_denominators(rows: list[Vector]) -> list[list[int]]:
    """Scale each row to a primitive integer vector."""
    out = []
    for row in rows:
        denom = 1
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


# -- primes for the modular path ---------------------------------------------

def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random | None = None, bits: int = 26) -> int:
    """Random prime in (2^25, 2^26), sized for the delayed-reduction kernel."""
    rng = rng or random
    while True:
        n = rng.randrange(1 << (bits - 1), 1 << bits) | 1
        if _is_probable_prime(n):
            return n


# Largest primes below 2^26: the echelon kernel delays its mod sweeps, so
# intermediate int64 sums are bounded by 512 * p**2 and need p < 2^26.
DEFAULT_PRIMES = (67108859, 67108837)
