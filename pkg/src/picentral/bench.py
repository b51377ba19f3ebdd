"""Benchmark the numba kernels against the pure-numpy fallback.

Run as ``python -m picentral.bench``. The script times the two hot paths
(signed evaluation of permutation-monomial blocks, and modular echelon
accumulation) in the current process, then re-runs itself in a subprocess
with ``PICENTRAL_NO_NUMBA=1`` and prints both sets of numbers side by side.

Use ``--inner`` to run only the measurement half (that is what the
subprocess does); results are emitted as a JSON dict on stdout.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import subprocess
import sys
import time

import numpy as np

from . import catalog, codim, kernels, linalg


def _time_eval(name: str, n: int, ntuples: int) -> float:
    """Seconds to evaluate `ntuples` support tuples into (d, n!) blocks."""
    B, _entry = catalog.catalog_algebra(name)
    p = linalg.DEFAULT_PRIMES[0]
    ev = codim._Evaluator(B, n, envelope=True, p=p)
    tuples, _exh = codim._support_tuples(B, n)
    ntuples = min(ntuples, len(tuples))
    ev.block_at(tuples[0])  # trigger jit compile outside the timer
    t0 = time.perf_counter()
    for tup in tuples[:ntuples]:
        ev.block_at(tup)
    return time.perf_counter() - t0


def _time_accumulate(length: int, target_rank: int, extra_rows: int) -> float:
    """Seconds to echelonize a known-rank random matrix of given shape."""
    p = linalg.DEFAULT_PRIMES[0]
    rng = np.random.default_rng(42)
    A = rng.integers(0, p, (target_rank, length))
    M = (rng.integers(0, p, (target_rank + extra_rows, target_rank)) @ A) % p
    R = np.zeros((length, length), np.int64)
    piv = np.zeros(length, np.int64)
    kernels.accumulate_columns(R[:8], piv[:8], 0, M[:4], p)  # jit warmup
    R[:] = 0
    t0 = time.perf_counter()
    rank = 0
    for i in range(0, M.shape[0], 128):
        rank = kernels.accumulate_columns(R, piv, rank, M[i:i + 128], p)
    dt = time.perf_counter() - t0
    assert rank == target_rank, (rank, target_rank)
    return dt


CASES = [
    ("eval A_6 n=5 (2000 tuples)", lambda: _time_eval("A_6", 5, 2000)),
    ("eval UT_3 n=6 (3000 tuples)", lambda: _time_eval("UT_3", 6, 3000)),
    ("echelon 720x1000 rank 600", lambda: _time_accumulate(720, 600, 400)),
    ("echelon 5040x900 rank 700", lambda: _time_accumulate(5040, 700, 200)),
]


def _measure() -> dict:
    out = {"backend": kernels.backend()}
    for label, fn in CASES:
        out[label] = fn()
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--inner", action="store_true",
                    help="measure current backend only, print JSON")
    args = ap.parse_args(argv)

    if args.inner:
        print(json.dumps(_measure()))
        return 0

    here = _measure()
    env = dict(os.environ, PICENTRAL_NO_NUMBA="1")
    proc = subprocess.run([sys.executable, "-m", "picentral.bench", "--inner"],
                          env=env, capture_output=True, text=True, check=True)
    other = json.loads(proc.stdout.strip().splitlines()[-1])
    first, second = (here, other) if here["backend"] == "numba" else (other, here)

    width = max(len(label) for label, _ in CASES)
    print(f"{'case':<{width}}  {'numba':>9}  {'numpy':>9}  speedup")
    for label, _fn in CASES:
        tn, tp = first[label], second[label]
        print(f"{label:<{width}}  {tn:>8.3f}s  {tp:>8.3f}s  {tp / tn:>6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
