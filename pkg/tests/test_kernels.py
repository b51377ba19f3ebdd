import math
import random
import subprocess
import sys

import numpy as np
import pytest

from picentral import catalog, codim, kernels, linalg

P = linalg.DEFAULT_PRIMES[0]


def _np_rank_mod(M, p):
    """Reference row-echelon rank over GF(p), plain python."""
    M = [[int(x) % p for x in row] for row in M]
    rank, ncols = 0, len(M[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
        if rank == len(M):
            break
    return rank


def test_accumulate_matches_reference():
    rng = np.random.default_rng(5)
    for _ in range(10):
        r = rng.integers(1, 20)
        L = int(rng.integers(r, 60))
        A = rng.integers(0, P, (int(r), L))
        M = (rng.integers(0, 5, (30, int(r))) @ A) % P
        R = np.zeros((L, L), np.int64)
        piv = np.zeros(L, np.int64)
        rank = kernels.accumulate_columns(R, piv, 0, M, P)
        assert rank == _np_rank_mod(M.tolist(), P)


def test_accumulate_delayed_reduction_deep():
    """Exercise the >512-pivot path where mod sweeps are delayed."""
    rng = np.random.default_rng(11)
    L, r = 700, 600
    A = rng.integers(0, P, (r, L))
    M = (rng.integers(0, P, (r + 100, r)) @ A) % P
    R = np.zeros((L, L), np.int64)
    piv = np.zeros(L, np.int64)
    rank = 0
    for i in range(0, M.shape[0], 97):
        rank = kernels.accumulate_columns(R, piv, rank, M[i:i + 97], P)
    assert rank == r
    # pivot store itself stays reduced
    assert R[:rank].min() >= 0 and R[:rank].max() < P


def test_backends_agree():
    rng = np.random.default_rng(8)
    M = rng.integers(0, P, (40, 25))
    M[10:20] = (M[:10] * 3) % P
    R1 = np.zeros((25, 25), np.int64)
    p1 = np.zeros(25, np.int64)
    r_nb = kernels._accumulate_nb(R1, p1, 0, np.ascontiguousarray(M % P), P)
    R2 = np.zeros((25, 25), np.int64)
    p2 = np.zeros(25, np.int64)
    r_np = kernels._accumulate_np(R2, p2, 0, M % P, P)
    assert r_nb == r_np
    assert np.array_equal(R1, R2) and np.array_equal(p1, p2)


def test_eval_perm_block_backends_agree():
    B, _ = catalog.catalog_algebra("A_3")
    n = 4
    ev = codim._Evaluator(B, n, envelope=True, p=P)
    tuples, _ = codim._support_tuples(B, n)
    for tup in tuples[:50]:
        t = np.asarray(tup, dtype=np.int64)
        a = kernels._eval_perm_block_nb(
            ev.table, ev.perms, ev.parities, t, P,
            np.zeros((ev.perms.shape[0], B.dim), np.int64))
        b = kernels._eval_perm_block_np(
            ev.table, ev.perms, ev.parities, t, P,
            np.zeros((ev.perms.shape[0], B.dim), np.int64))
        assert np.array_equal(a, b)


def test_numpy_fallback_env_flag():
    out = subprocess.run(
        [sys.executable, "-c",
         "from picentral import kernels; print(kernels.backend())"],
        env={"PATH": "/usr/bin:/bin", "PICENTRAL_NO_NUMBA": "1"},
        capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"


def test_backend_reports_numba_when_enabled():
    assert kernels.backend() in ("numba", "numpy")
