"""Hot numeric kernels: modular echelon accumulation and signed evaluation.

Two backends share one set of pure-numpy reference implementations:

* numba `@njit` versions (default) for the factorial-scale runs;
* the plain numpy versions, selected by setting ``PICENTRAL_NO_NUMBA=1``,
  kept as the correctness/fallback path and exercised by the benchmark.

All modular arithmetic is int64. The echelon accumulator uses delayed
reduction (one mod sweep per 512 pivots), which requires the modular primes
to stay below 2^26 so intermediate sums fit in int64. ``p == 0`` means "no
reduction": plain integer arithmetic, only valid when the caller knows the
entries stay small.

Sign convention for Grassmann-envelope evaluation: a monomial given by a
permutation ``w`` (variable ids in writing order) substituted with homogeneous
elements picks up ``(-1)**inv`` where ``inv`` is the inversion count of the
subsequence of ``w`` at the odd-parity variables.
"""

from __future__ import annotations

import os

import numpy as np

_USE_NUMBA = os.environ.get("PICENTRAL_NO_NUMBA", "") not in ("1", "true", "yes")

if _USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        _USE_NUMBA = False

if not _USE_NUMBA:
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


def backend() -> str:
    return "numba" if _USE_NUMBA else "numpy"


# -- modular echelon accumulation ---------------------------------------------

@njit(cache=True)
def _accumulate_nb(R, pivrows, rank, cols, p):
    # Delayed reduction: the elimination inner loop is a bare multiply-
    # subtract, with a full mod sweep only every `group` pivots. Entries
    # stay bounded by group * p**2 < 2**62, which is why the modular primes
    # must sit below 2**26.
    ncols, nrows = cols.shape
    maxrank = R.shape[0]
    group = 512
    for ci in range(ncols):
        c = cols[ci].copy()
        pending = 0
        for j in range(rank):
            f = c[pivrows[j]] % p
            if f != 0:
                for k in range(nrows):
                    c[k] -= f * R[j, k]
                pending += 1
                if pending >= group:
                    for k in range(nrows):
                        c[k] %= p
                    pending = 0
        if pending:
            for k in range(nrows):
                c[k] %= p
        lead = -1
        for k in range(nrows):
            if c[k] != 0:
                lead = k
                break
        if lead < 0:
            continue
        if rank >= maxrank:
            return -1
        inv = 1
        base = c[lead] % p
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for k in range(nrows):
            c[k] = c[k] * inv % p
        for j in range(rank):
            f = R[j, lead]
            if f != 0:
                for k in range(nrows):
                    R[j, k] = (R[j, k] - f * c[k]) % p
        R[rank] = c
        pivrows[rank] = lead
        rank += 1
    return rank


def _accumulate_np(R, pivrows, rank, cols, p):
    nrows = cols.shape[1]
    for ci in range(cols.shape[0]):
        c = cols[ci].astype(np.int64, copy=True)
        if rank:
            f = c[pivrows[:rank]] % p
            # 16-bit split keeps the int64 matmul overflow-free
            lo, hi = f & 0xFFFF, f >> 16
            c = (c - lo @ R[:rank] - ((hi @ R[:rank]) % p << 16)) % p
        nz = np.nonzero(c)[0]
        if nz.size == 0:
            continue
        if rank >= R.shape[0]:
            return -1
        lead = nz[0]
        c = c * pow(int(c[lead]), p - 2, p) % p
        f = R[:rank, lead].copy()
        if rank:
            R[:rank] = (R[:rank] - np.outer(f, c)) % p
        R[rank] = c
        pivrows[rank] = lead
        rank += 1
    return rank


def accumulate_columns(R, pivrows, rank: int, cols, p: int) -> int:
    """Reduce `cols` (ncols x nrows) into the echelon state, return new rank.

    R is the (maxrank x nrows) pivot store with unit, mutually reduced pivots;
    pivrows holds each pivot's leading row. Returns -1 on overflow of maxrank.
    """
    cols = np.ascontiguousarray(cols, dtype=np.int64) % p
    if _USE_NUMBA:
        return _accumulate_nb(R, pivrows, rank, cols, p)
    return _accumulate_np(R, pivrows, rank, cols, p)


def residual_column(R, pivrows, rank: int, col, p: int):
    """Reduce a single column against the accumulated pivots (no insertion)."""
    c = np.asarray(col, dtype=np.int64) % p
    for j in range(rank):
        f = int(c[pivrows[j]])
        if f:
            c = (c - f * R[j]) % p
    return c


# -- signed evaluation of permutation monomials -------------------------------

@njit(cache=True)
def _eval_perm_block_nb(table, perms, par, tup, p, out):
    nperm, n = perms.shape
    d = table.shape[0]
    v = np.empty(d, np.int64)
    w = np.empty(d, np.int64)
    for r in range(nperm):
        inv = 0
        for a in range(n):
            if par[tup[perms[r, a]]] == 1:
                for b in range(a + 1, n):
                    if par[tup[perms[r, b]]] == 1 and perms[r, a] > perms[r, b]:
                        inv += 1
        v[:] = 0
        v[tup[perms[r, 0]]] = 1
        for a in range(1, n):
            bi = tup[perms[r, a]]
            for k in range(d):
                acc = 0
                for i in range(d):
                    if v[i] != 0:
                        acc += v[i] * table[i, bi, k]
                        if p != 0:
                            acc %= p
                w[k] = acc
            v, w = w, v
        sign = -1 if (inv & 1) else 1
        for k in range(d):
            x = sign * v[k]
            out[r, k] = x % p if p != 0 else x
    return out


def _eval_perm_block_np(table, perms, par, tup, p, out):
    nperm, n = perms.shape
    tmat = table  # (d, d, d)
    for r in range(nperm):
        w = perms[r]
        odd = w[par[tup[w]] == 1]
        inv = 0
        for a in range(len(odd)):
            inv += int(np.sum(odd[a] > odd[a + 1:]))
        v = np.zeros(table.shape[0], np.int64)
        v[tup[w[0]]] = 1
        for a in range(1, n):
            m = tmat[:, tup[w[a]], :]
            if p:
                lo, hi = v & 0xFFFF, v >> 16
                v = (lo @ m + ((hi @ m) % p << 16)) % p
            else:
                v = v @ m
        if inv & 1:
            v = -v
        out[r] = v % p if p else v
    return out


def eval_perm_block(table, perms, parities, tup, p: int):
    """Signed values of every permutation monomial on one basis tuple.

    Returns an (n!, d) int64 array; row r is the value of the monomial for
    `perms[r]` under x_i -> basis element ``tup[i]`` (with the envelope sign
    from `parities`; an all-zero parity vector gives the plain algebra case).
    """
    out = np.empty((perms.shape[0], table.shape[0]), np.int64)
    tup = np.asarray(tup, dtype=np.int64)
    if _USE_NUMBA:
        return _eval_perm_block_nb(table, perms, parities, tup, p, out)
    return _eval_perm_block_np(table, perms, parities, tup, p, out)


# -- exhaustive vanishing scan for one multilinear polynomial -----------------

@njit(cache=True)
def _scan_nb(table, words, coeffs, par, p, start, count):
    nwords, n = words.shape
    d = table.shape[0]
    tup = np.empty(n, np.int64)
    v = np.empty(d, np.int64)
    w = np.empty(d, np.int64)
    acc = np.empty(d, np.int64)
    for t in range(start, start + count):
        x = t
        for a in range(n - 1, -1, -1):
            tup[a] = x % d
            x //= d
        acc[:] = 0
        for m in range(nwords):
            inv = 0
            for a in range(n):
                if par[tup[words[m, a]]] == 1:
                    for b in range(a + 1, n):
                        if par[tup[words[m, b]]] == 1 and words[m, a] > words[m, b]:
                            inv += 1
            v[:] = 0
            v[tup[words[m, 0]]] = 1
            for a in range(1, n):
                bi = tup[words[m, a]]
                for k in range(d):
                    s = 0
                    for i in range(d):
                        if v[i] != 0:
                            s += v[i] * table[i, bi, k]
                            if p != 0:
                                s %= p
                    w[k] = s
                v, w = w, v
            cf = -coeffs[m] if (inv & 1) else coeffs[m]
            for k in range(d):
                acc[k] += cf * v[k]
                if p != 0:
                    acc[k] %= p
        for k in range(d):
            if (acc[k] % p if p != 0 else acc[k]) != 0:
                return t
    return -1


def _scan_np(table, words, coeffs, par, p, start, count):
    n = words.shape[1]
    d = table.shape[0]
    for t in range(start, start + count):
        x, tup = t, np.empty(n, np.int64)
        for a in range(n - 1, -1, -1):
            tup[a] = x % d
            x //= d
        if np.any(eval_word_sum(table, words, coeffs, par, tup, p)):
            return t
    return -1


def eval_word_sum(table, words, coeffs, parities, tup, p: int):
    """Signed value of sum(coeffs[m] * word_m) at one basis tuple."""
    d = table.shape[0]
    acc = np.zeros(d, np.int64)
    tup = np.asarray(tup, dtype=np.int64)
    for m in range(words.shape[0]):
        w = words[m]
        odd = w[parities[tup[w]] == 1]
        inv = 0
        for a in range(len(odd)):
            inv += int(np.sum(odd[a] > odd[a + 1:]))
        v = np.zeros(d, np.int64)
        v[tup[w[0]]] = 1
        for a in range(1, len(w)):
            mslice = table[:, tup[w[a]], :]
            if p:
                lo, hi = v & 0xFFFF, v >> 16
                v = (lo @ mslice + ((hi @ mslice) % p << 16)) % p
            else:
                v = v @ mslice
        cf = -coeffs[m] if (inv & 1) else coeffs[m]
        acc += cf * v
        if p:
            acc %= p
    return acc % p if p else acc


def scan_nonvanishing(table, words, coeffs, parities, p: int,
                      start: int, count: int) -> int:
    """First tuple index in [start, start+count) with a nonzero signed value.

    Tuple index t encodes the substitution (base-d digits, most significant =
    x_1). Returns -1 if the polynomial vanishes on the whole range.
    """
    words = np.ascontiguousarray(words, dtype=np.int64)
    coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
    if _USE_NUMBA:
        return _scan_nb(table, words, coeffs, parities, p, start, count)
    return _scan_np(table, words, coeffs, parities, p, start, count)


# -- random-vector evaluation (multilinear Schwartz-Zippel trials) ------------

def eval_on_vectors(table, words, coeffs, var_parities, vecs, p: int):
    """Value of the multilinear polynomial at vector substitutions mod p.

    `vecs[i]` substitutes variable i and must be homogeneous of parity
    `var_parities[i]` for the envelope sign rule to apply.
    """
    d = table.shape[0]
    acc = np.zeros(d, np.int64)
    for m in range(words.shape[0]):
        w = words[m]
        odd = w[var_parities[w] == 1]
        inv = 0
        for a in range(len(odd)):
            inv += int(np.sum(odd[a] > odd[a + 1:]))
        v = vecs[w[0]] % p
        for a in range(1, len(w)):
            u = vecs[w[a]] % p
            # v'[k] = sum_{i,b} v[i] u[b] table[i,b,k]
            step = np.zeros(d, np.int64)
            usplit = np.vstack([u & 0xFFFF, u >> 16]).T
            for i in np.nonzero(v)[0]:
                row = table[i].T @ usplit
                step = (step + v[i] * ((row[:, 0] + (row[:, 1] % p << 16)) % p)) % p
            v = step
        cf = -coeffs[m] if (inv & 1) else coeffs[m]
        acc = (acc + cf * v) % p
    return acc
