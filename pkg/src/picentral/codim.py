"""Codimension triples and identity / central-polynomial testing.

The evaluation matrix of degree n has one row per monomial of P_n (lex order
of permutations) and one column per (basis tuple, output coordinate); a
multilinear polynomial is an identity iff its coefficient vector annihilates
every column. Central polynomials use the same columns composed with a
projection that kills the center (or, in envelope mode, the parity-matched
supercentral component).

Ranks come in two flavors:

* certified exact: accumulate mod one prime while tracking which columns
  produced pivots, re-eliminate just those columns over the rationals
  (proves rank >= r), then verify that the exact left-nullspace annihilates
  every column with integer arithmetic (proves rank <= r);
* stabilized modular: feed columns in batches per prime and stop when no
  rank growth occurs over a window of consecutive batches, for two
  independent primes. Reported uncertified.

Both flavors restrict to the support of the evaluation matrix: the ordered
basis tuples with a nonzero product under some reordering, found by exact
depth-first search over the multiplication table. Columns outside the
support are identically zero. When the support is small it is exhausted
deterministically; otherwise batches draw random reorderings of random
nonzero-product sequences.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

import numpy as np

from . import kernels, linalg
from .algebra import SuperAlgebra, center, supercenter_component
from .grassmann import EnvelopeContext
from .polyspace import (GeneralPoly, MultilinearPoly, multilinearize,
                        parse_poly)
from .valuespans import TaggedElement, _signed_eval

ZERO = Fraction(0)
ONE = Fraction(1)

EXHAUSTIVE_TUPLE_CAP = 400_000    # full enumeration bound for exact ranks
SCAN_TUPLE_CAP = 25_000_000       # exhaustive vanishing-scan bound
SCAN_CHUNK = 1 << 18


class ResourceCapError(RuntimeError):
    pass


@dataclass
class CodimResult:
    n: int
    c_n: int
    c_n_z: int
    c_n_delta: int
    method: str                 # "exact" or "modular"
    primes: tuple = ()
    samples: int = 0
    certified: bool = False
    algebra: str = ""

    def __post_init__(self):
        if self.c_n != self.c_n_z + self.c_n_delta:
            raise ValueError("codimension additivity violated")
        if not 0 <= self.c_n <= math.factorial(self.n):
            raise ValueError("codimension out of range")

    def record(self) -> str:
        return json.dumps({
            "algebra": self.algebra, "n": self.n, "c_n": self.c_n,
            "c_n_z": self.c_n_z, "c_n_delta": self.c_n_delta,
            "method": self.method, "primes": list(self.primes),
            "samples": self.samples, "certified": self.certified})


@dataclass
class IdentitySpace:
    n: int
    c_n: int
    dim: int                    # dim of P_n intersect Id
    basis: list | None          # rational coefficient rows, exact mode only
    method: str
    primes: tuple
    samples: int
    certified: bool


def _resolve(target):
    if isinstance(target, EnvelopeContext):
        return target.base, True
    if isinstance(target, SuperAlgebra):
        return target, False
    raise TypeError(f"unsupported target {target!r}")


# -- column streams ------------------------------------------------------------

class _Evaluator:
    """Signed evaluation blocks for all permutation monomials at one tuple."""

    def __init__(self, B: SuperAlgebra, n: int, envelope: bool, p: int):
        self.B = B
        self.n = n
        self.d = B.dim
        self.p = p
        self.perms = np.array(list(permutations(range(n))), dtype=np.int64)
        self.table = B.table_mod(p) if p else B.int_table()
        self.parities = (B.parities() if envelope
                         else np.zeros(B.dim, dtype=np.int64))

    def decode(self, t: int) -> np.ndarray:
        tup = np.empty(self.n, np.int64)
        for i in range(self.n - 1, -1, -1):
            t, tup[i] = divmod(t, self.d)
        return tup

    def tuple_parity(self, tup) -> int:
        return int(self.parities[tup].sum() % 2)

    def block(self, t: int) -> np.ndarray:
        """(d, n!) array: rows are evaluation columns at tuple index t."""
        return self.block_at(self.decode(t))

    def block_at(self, tup) -> np.ndarray:
        tup = np.asarray(tup, dtype=np.int64)
        return kernels.eval_perm_block(
            self.table, self.perms, self.parities, tup, self.p).T.copy()


def _projection_rows(dim: int, subspace) -> list:
    """Rational rows whose common kernel is exactly span(subspace)."""
    red, piv = linalg.rref([list(v) for v in subspace])
    rows = []
    for q in range(dim):
        if q in piv:
            continue
        row = [ZERO] * dim
        row[q] = ONE
        for i, pc in enumerate(piv):
            row[pc] = -red[i][q]
        rows.append(row)
    return rows


def _int_matrix(rows) -> np.ndarray:
    ints = linalg.clear_denominators(rows)
    return np.array(ints, dtype=np.int64) if ints else np.zeros((0, 0), np.int64)


class _Projections:
    """Center-killing projections, by value parity (envelope) or plain."""

    def __init__(self, B: SuperAlgebra, envelope: bool):
        self.envelope = envelope
        if envelope:
            comps = {q: supercenter_component(B, q) for q in (0, 1)}
        else:
            z = center(B)
            comps = {0: z, 1: z}
        self.rows = {q: _projection_rows(B.dim, comps[q]) for q in comps}
        self.ints = {q: _int_matrix(self.rows[q]) for q in comps}

    def apply_int(self, q: int, block: np.ndarray) -> np.ndarray:
        """Project a (d, n!) block of columns; result (m, n!) exact ints."""
        P = self.ints[q]
        if P.size == 0:
            return np.zeros((0, block.shape[1]), np.int64)
        return P @ block


# -- certified exact rank -------------------------------------------------------

def certified_rank(block_iter_factory, length: int, p: int,
                   maxrank: int | None = None):
    """Exact rank of the span of streamed integer vectors.

    block_iter_factory() yields (identifier, int64 array of shape
    (k, length)) with exact integer entries; it must be replayable.
    Returns (rank, functionals) where the rational functionals form a basis
    of the space annihilating every vector (so its dim = length - rank).
    """
    maxrank = maxrank or length
    R = np.zeros((maxrank, length), np.int64)
    pivrows = np.zeros(maxrank, np.int64)
    rank = 0
    pivot_vecs: list[np.ndarray] = []
    for _ident, block in block_iter_factory():
        if block.shape[0] == 0:
            continue
        r0, save_R, save_piv = rank, None, None
        save_R = R[:min(rank + block.shape[0], maxrank)].copy()
        save_piv = pivrows[:min(rank + block.shape[0], maxrank)].copy()
        rank = kernels.accumulate_columns(R, pivrows, rank, block % p, p)
        if rank < 0:
            raise ResourceCapError("rank store overflow")
        if rank > r0:
            # replay one vector at a time to learn which ones inserted
            R[:save_R.shape[0]] = save_R
            pivrows[:save_piv.shape[0]] = save_piv
            rank = r0
            for row in block:
                r1 = kernels.accumulate_columns(
                    R, pivrows, rank, row[None, :] % p, p)
                if r1 > rank:
                    pivot_vecs.append(row.copy())
                rank = r1
    # rank >= r: rational elimination of the pivot vectors
    exact_rows = [[Fraction(int(x)) for x in v] for v in pivot_vecs]
    red, piv = linalg.rref(exact_rows)
    if len(red) != rank:
        raise ArithmeticError("unlucky prime: pivot set degenerates exactly")
    # rank <= r: the exact functional space annihilates every vector
    funcs = []
    pivset = set(piv)
    for q in range(length):
        if q in pivset:
            continue
        row = [ZERO] * length
        row[q] = ONE
        for i, pc in enumerate(piv):
            row[pc] = -red[i][q]
        funcs.append(row)
    if funcs:
        N = _int_matrix(funcs)
        maxN = int(np.abs(N).max()) if N.size else 0
        for _ident, block in block_iter_factory():
            if block.shape[0] == 0:
                continue
            maxB = int(np.abs(block).max(initial=0))
            if maxN and maxB and maxN * maxB * length < (1 << 62):
                if np.any(N @ block.T):
                    raise ArithmeticError("unlucky prime: nullspace fails exactly")
            else:
                for frow in funcs:
                    for vec in block:
                        s = sum(f * int(x) for f, x in zip(frow, vec) if x)
                        if s:
                            raise ArithmeticError(
                                "unlucky prime: nullspace fails exactly")
    return rank, funcs


# -- stabilized modular rank ---------------------------------------------------

class Accumulator:
    def __init__(self, length: int, p: int, maxrank: int | None = None):
        maxrank = maxrank or length
        self.R = np.zeros((maxrank, length), np.int64)
        self.pivrows = np.zeros(maxrank, np.int64)
        self.rank = 0
        self.p = p

    def add(self, vectors: np.ndarray) -> int:
        if vectors.shape[0]:
            r = kernels.accumulate_columns(
                self.R, self.pivrows, self.rank, vectors % self.p, self.p)
            if r < 0:
                raise ResourceCapError("rank store overflow")
            self.rank = r
        return self.rank


def stabilized_rank(batch_factory, length: int, primes, window: int = 3):
    """Rank mod each prime from streamed batches. A finite stream (factory
    attribute exhaustive=True) is always consumed whole; an infinite sampled
    stream stops when no rank growth occurs over `window` consecutive
    batches for that prime. batch_factory(p, rng) yields int64 batches
    (k, length). Returns (ranks per prime, samples)."""
    exhaustive = getattr(batch_factory, "exhaustive", False)
    samples = 0
    accs, gens = [], []
    for pi, p in enumerate(primes):
        accs.append(Accumulator(length, p))
        gens.append(batch_factory(p, random.Random(0xC0D1 + 7919 * pi)))
    quiet = 0
    while True:
        before = [a.rank for a in accs]
        alive = False
        for acc, gen in zip(accs, gens):
            if acc.rank == length:
                continue
            batch = next(gen, None)
            if batch is None:
                continue
            alive = True
            acc.add(batch)
            samples += batch.shape[0]
        ranks = [a.rank for a in accs]
        if not alive:
            break
        quiet = quiet + 1 if ranks == before else 0
        if exhaustive:
            continue
        # sampled streams stop only once every prime agrees and the joint
        # stream has been quiet for a full window
        if quiet >= window and len(set(ranks)) == 1:
            break
    return [a.rank for a in accs], samples


# -- spaces ---------------------------------------------------------------------

def _pick_mode(mode: str, n: int, ntuples: int) -> str:
    if mode == "auto":
        mode = "exact" if n <= 5 else "modular"
    if mode == "exact" and ntuples > EXHAUSTIVE_TUPLE_CAP:
        raise ResourceCapError(
            f"{ntuples} tuples exceed the exact enumeration cap")
    return mode


def _exact_eval_stream(ev: _Evaluator, projs=None, support=None):
    """Stream (ident, block). With a support list, skip the tuples whose
    block is identically zero; they satisfy any functional trivially."""
    def factory():
        if support is not None:
            for tup in support:
                block = ev.block_at(tup)
                if projs is not None:
                    block = projs.apply_int(
                        ev.tuple_parity(np.asarray(tup)), block)
                yield tup, block
        else:
            for t in range(ev.d ** ev.n):
                block = ev.block(t)
                if projs is not None:
                    block = projs.apply_int(
                        ev.tuple_parity(ev.decode(t)), block)
                yield t, block
    return factory


SUPPORT_CLOSURE_CAP = 30_000      # exhaust the nonzero support up to this size

_support_cache: dict = {}


def _support_sequences(B: SuperAlgebra, n: int) -> list:
    """Ordered basis-index tuples whose product (in that order) is nonzero.

    Depth-first over the multiplication table with exact integer prefix
    products. A tuple contributes a nonzero evaluation block iff some
    reordering of it appears here, so the permutation closure of this list
    is the exact support of the evaluation matrix.
    """
    T = B.int_table()
    d = B.dim
    eye = np.eye(d, dtype=np.int64)
    stack = [(eye[i], 1, (i,)) for i in range(d)]
    out = []
    while stack:
        v, k, tup = stack.pop()
        if k == n:
            out.append(tup)
            continue
        for j in range(d):
            w = v @ T[:, j, :]
            if w.any():
                stack.append((w, k + 1, tup + (j,)))
    return out


def _support_tuples(B: SuperAlgebra, n: int):
    """(tuples, exhaustive): the evaluation support, or a sequence pool.

    If the permutation closure of the nonzero-product sequences fits
    SUPPORT_CLOSURE_CAP, return it whole (exhaustive=True). Otherwise
    return just the sequences for pool sampling (exhaustive=False).
    """
    key = (id(B), n)
    if key not in _support_cache:
        seqs = _support_sequences(B, n)
        closure = set()
        for s in seqs:
            closure.update(permutations(s))
            if len(closure) > SUPPORT_CLOSURE_CAP:
                _support_cache[key] = (seqs, False)
                break
        else:
            _support_cache[key] = (sorted(closure), True)
    return _support_cache[key]


def _sampled_eval_batches(B, n, envelope, projs, batch_cols):
    tuples, exhaustive = _support_tuples(B, n)

    def batch_factory(p, rng):
        ev = _Evaluator(B, n, envelope, p)
        pints = ({q: m % p for q, m in projs.ints.items()}
                 if projs is not None else None)
        fact_len = ev.perms.shape[0]
        per_batch = max(1, min(batch_cols // max(1, ev.d),
                               8_000_000 // (fact_len * max(1, ev.d))))
        if exhaustive:
            order = list(tuples)
            rng.shuffle(order)
        pos = 0
        while True:
            blocks = []
            for _ in range(per_batch):
                if exhaustive:
                    if pos >= len(order):
                        break
                    tup = order[pos]
                    pos += 1
                else:
                    tup = list(tuples[rng.randrange(len(tuples))])
                    rng.shuffle(tup)
                blk = ev.block_at(tup)
                if pints is not None:
                    P = pints[ev.tuple_parity(np.asarray(tup))]
                    blk = (P @ blk) % p if P.size else blk[:0]
                blocks.append(blk)
            if not blocks:
                return
            yield np.vstack(blocks)
            if exhaustive and pos >= len(order):
                return
    batch_factory.exhaustive = exhaustive
    return batch_factory


def _space_rank(target, n, mode, primes, central, window):
    B, envelope = _resolve(target)
    primes = tuple(primes or linalg.DEFAULT_PRIMES)
    ntuples = B.dim ** n
    fact = math.factorial(n)
    projs = _Projections(B, envelope) if central else None
    sup_tuples, sup_exhaustive = _support_tuples(B, n)
    mode = _pick_mode(mode, n, len(sup_tuples) if sup_exhaustive else ntuples)
    if mode == "exact":
        ev = _Evaluator(B, n, envelope, 0)
        tuples, exhaustive = sup_tuples, sup_exhaustive
        support = tuples if exhaustive else None
        rank, funcs = certified_rank(
            _exact_eval_stream(ev, projs, support), fact, primes[0])
        cols = (len(tuples) if exhaustive else ntuples) * B.dim
        return rank, funcs, "exact", primes[:1], cols, True
    batches = _sampled_eval_batches(B, n, envelope, projs, batch_cols=4 * fact)
    ranks, samples = stabilized_rank(batches, fact, primes, window)
    if len(set(ranks)) != 1:
        raise ArithmeticError(f"primes disagree on rank: {ranks}")
    return ranks[0], None, "modular", primes, samples, False


def identity_space(target, n: int, mode: str = "auto", primes=None,
                   window: int = 3) -> IdentitySpace:
    rank, funcs, mthd, primes, samples, cert = _space_rank(
        target, n, mode, primes, central=False, window=window)
    return IdentitySpace(n=n, c_n=rank, dim=math.factorial(n) - rank,
                         basis=funcs, method=mthd, primes=primes,
                         samples=samples, certified=cert)


def central_space(target, n: int, mode: str = "auto", primes=None,
                  window: int = 3) -> CodimResult:
    B, _env = _resolve(target)
    c_n, _f1, mthd, primes1, s1, cert1 = _space_rank(
        target, n, mode, primes, central=False, window=window)
    c_z, _f2, mthd2, primes2, s2, cert2 = _space_rank(
        target, n, mode, primes, central=True, window=window)
    return CodimResult(
        n=n, c_n=c_n, c_n_z=c_z, c_n_delta=c_n - c_z,
        method=mthd, primes=primes1, samples=s1 + s2,
        certified=cert1 and cert2, algebra=B.name)


def identity_spaces_equal(target_a, target_b, n: int, primes=None,
                          window: int = 3):
    """Do P_n intersect Id agree for the two targets? Column-space equality
    of the two evaluation matrices, mod each prime, sampled to stabilization.
    Returns (equal, detail dict)."""
    Ba, ea = _resolve(target_a)
    Bb, eb = _resolve(target_b)
    primes = tuple(primes or linalg.DEFAULT_PRIMES)
    fact = math.factorial(n)
    fa = _sampled_eval_batches(Ba, n, ea, None, batch_cols=4 * fact)
    fb = _sampled_eval_batches(Bb, n, eb, None, batch_cols=4 * fact)
    detail = {"n": n, "primes": list(primes), "ranks": []}
    equal = True
    for p in primes:
        acc_a = Accumulator(fact, p)
        acc_b = Accumulator(fact, p)
        acc_u = Accumulator(fact, p)
        rng_a, rng_b = random.Random(17 + p), random.Random(23 + p)
        ga, gb = fa(p, rng_a), fb(p, rng_b)
        exhaustive = (getattr(fa, "exhaustive", False)
                      and getattr(fb, "exhaustive", False))
        quiet = 0
        while exhaustive or quiet < window:
            state = (acc_a.rank, acc_b.rank, acc_u.rank)
            if state == (fact, fact, fact):
                break
            batch_a = next(ga, None) if acc_a.rank < fact else None
            batch_b = next(gb, None) if acc_b.rank < fact else None
            if batch_a is None and batch_b is None:
                break
            for acc, batch in ((acc_a, batch_a), (acc_b, batch_b)):
                if batch is not None:
                    acc.add(batch)
                    acc_u.add(batch)
            quiet = quiet + 1 if (acc_a.rank, acc_b.rank, acc_u.rank) == state else 0
        ranks = (acc_a.rank, acc_b.rank, acc_u.rank)
        detail["ranks"].append(ranks)
        equal = equal and ranks[0] == ranks[1] == ranks[2]
    return equal, detail


# -- T-ideal span dimensions -----------------------------------------------

def _normalize_generators(generators, n):
    gens = []
    for g in generators:
        if isinstance(g, str):
            g = parse_poly(g)
        if isinstance(g, GeneralPoly):
            gens.extend(multilinearize(g))
        else:
            gens.append(g)
    return [g for g in gens if 0 < g.n <= n]


def tideal_span_dim_exact(generators, n: int) -> int:
    """Exact dimension of P_n intersect the T-ideal span: rational
    elimination over the reduced enumeration of spanning elements."""
    from . import polyspace
    fact = math.factorial(n)
    gens = _normalize_generators(generators, n)
    rows = []
    for mp in polyspace.tideal_span_polys(gens, n, mode="reduced"):
        row = [ZERO] * fact
        for w, c in mp.coeffs.items():
            row[polyspace.perm_rank(w)] = c
        rows.append(row)
    red, _piv = linalg.rref(rows)
    return len(red)


def tideal_span_dim_modular(generators, n: int, primes=None, window: int = 3,
                            sample: bool = True, max_polys: int | None = None):
    """Stabilized-modular dimension of P_n intersect the T-ideal span.

    Samples random spanning elements (random slot assignment and factor
    orders) when `sample`, else exhausts the reduced enumeration.
    Returns (dims per prime, samples).
    """
    from . import polyspace
    primes = tuple(primes or linalg.DEFAULT_PRIMES)
    fact = math.factorial(n)
    gens = _normalize_generators(generators, n)

    def poly_to_row(mp, p):
        row = np.zeros(fact, np.int64)
        for w, c in mp.coeffs.items():
            row[polyspace.perm_rank(w)] = (
                c.numerator * pow(c.denominator, p - 2, p)) % p
        return row

    def random_span_poly(rng):
        g = gens[rng.randrange(len(gens))]
        d = g.n
        while True:
            assign = [rng.randrange(d + 2) for _ in range(n)]
            groups = [[] for _ in range(d + 2)]
            for v, s in enumerate(assign):
                groups[s].append(v)
            if all(groups[i] for i in range(d)):
                break
        for i in range(d):
            rng.shuffle(groups[i])
        rng.shuffle(groups[d])
        rng.shuffle(groups[d + 1])
        coeffs = {}
        for gw, c in g.coeffs.items():
            word = tuple(groups[d]) + tuple(
                v for gv in gw for v in groups[gv]) + tuple(groups[d + 1])
            coeffs[word] = coeffs.get(word, ZERO) + c
        return MultilinearPoly(n, coeffs)

    def batch_factory(p, rng):
        if not gens:
            return
        if not sample:
            rows = []
            for mp in polyspace.tideal_span_polys(gens, n, mode="reduced"):
                rows.append(poly_to_row(mp, p))
                if len(rows) >= 4 * fact:
                    yield np.array(rows)
                    rows = []
            if rows:
                yield np.array(rows)
            return
        count = 0
        while max_polys is None or count < max_polys:
            rows = [poly_to_row(random_span_poly(rng), p)
                    for _ in range(4 * fact)]
            count += len(rows)
            yield np.array(rows)

    batch_factory.exhaustive = not sample
    return stabilized_rank(batch_factory, fact, primes, window)


# -- polynomial verdicts ------------------------------------------------------

def _ml_list(f):
    if isinstance(f, str):
        f = parse_poly(f)
    if isinstance(f, MultilinearPoly):
        return [f]
    return multilinearize(f)


def _words_arrays(mp: MultilinearPoly):
    lcm = 1
    for c in mp.coeffs.values():
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    words = np.array(list(mp.coeffs.keys()), dtype=np.int64)
    coeffs = np.array(
        [int(c * lcm) for c in mp.coeffs.values()], dtype=np.int64)
    return words, coeffs


def _scan_zero(B, envelope, mp: MultilinearPoly) -> tuple[bool, int]:
    """Exhaustively test signed vanishing; returns (vanishes, witness tuple
    index or -1). Exact int64 arithmetic."""
    words, coeffs = _words_arrays(mp)
    table = B.int_table()
    parities = (B.parities() if envelope
                else np.zeros(B.dim, dtype=np.int64))
    total = B.dim ** mp.n
    start = 0
    while start < total:
        cnt = min(SCAN_CHUNK, total - start)
        t = kernels.scan_nonvanishing(table, words, coeffs, parities,
                                      0, start, cnt)
        if t >= 0:
            return False, t
        start += cnt
    return True, -1


def _random_parities(rng, n, envelope):
    return ([rng.randrange(2) for _ in range(n)] if envelope else [0] * n)


def _random_homogeneous_vec(B, rng, parity):
    while True:
        v = [Fraction(rng.randint(-3, 3)) if B.parity[i] == parity else ZERO
             for i in range(B.dim)]
        if any(v):
            return v


def _randomized_nonzero(B, envelope, mp, rng, trials, p):
    """Search for a nonzero signed evaluation; any hit is confirmed exactly.
    Returns True when a (rationally verified) nonzero value is found."""
    table = B.table_mod(p)
    words, coeffs = _words_arrays(mp)
    for _ in range(trials):
        pars = _random_parities(rng, mp.n, envelope)
        if envelope and not all(any(B.parity[i] == q for i in range(B.dim))
                                for q in set(pars)):
            continue
        vecs = np.array(
            [[int(c % p) for c in _int_vec(_random_homogeneous_vec(B, rng, q))]
             for q in pars], dtype=np.int64)
        val = kernels.eval_on_vectors(
            table, words, coeffs, np.array(pars, dtype=np.int64), vecs, p)
        if np.any(val):
            elems = [TaggedElement([Fraction(int(x)) for x in vecs[i]],
                                   pars[i], None) for i in range(mp.n)]
            exact = _signed_eval(B, mp, elems)
            if any(exact):
                return True
    return False


def _int_vec(v):
    lcm = 1
    for c in v:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [int(c * lcm) for c in v]


def is_identity(target, f, rng=None, trials: int = 200,
                scan_cap: int = SCAN_TUPLE_CAP) -> bool:
    ok, _method = is_identity_detailed(target, f, rng, trials, scan_cap)
    return ok


def is_identity_detailed(target, f, rng=None, trials: int = 200,
                         scan_cap: int = SCAN_TUPLE_CAP):
    """(verdict, method). method 'exact' means the verdict is proven;
    'randomized' means a True verdict is sampled (False is always proven)."""
    B, envelope = _resolve(target)
    rng = rng or random.Random(0x1D)
    method = "exact"
    for mp in _ml_list(f):
        if not mp.coeffs:
            continue
        if B.dim ** mp.n <= scan_cap:
            zero, _w = _scan_zero(B, envelope, mp)
            if not zero:
                return False, "exact"
        else:
            p = linalg.DEFAULT_PRIMES[0]
            if _randomized_nonzero(B, envelope, mp, rng, trials, p):
                return False, "exact"
            method = "randomized"
    return True, method


def is_proper_central(target, f, rng=None, trials: int = 200,
                      scan_cap: int = SCAN_TUPLE_CAP) -> str:
    verdict, _method = is_proper_central_detailed(
        target, f, rng, trials, scan_cap)
    return verdict


def is_proper_central_detailed(target, f, rng=None, trials: int = 200,
                               scan_cap: int = SCAN_TUPLE_CAP):
    """Classify f as identity / proper_central / non_central on the target.

    Factored commutator-product shapes (for string inputs) are decided by
    exact value-span computation; everything else falls back to the
    identity test on f and on [f, x_extra].
    """
    from . import valuespans
    B, envelope = _resolve(target)
    if isinstance(f, str):
        try:
            tree = valuespans.parse_factor_tree(f)
        except Exception:
            tree = None
        if tree is not None:
            expanded = valuespans.tree_poly(tree)
            if expanded == parse_poly(f):
                verdict, _spans = valuespans.classify_tree(B, tree, envelope)
                return verdict, "exact"
    rng = rng or random.Random(0x5C)
    ident, m1 = is_identity_detailed(target, f, rng, trials, scan_cap)
    if ident:
        return "identity", m1
    central = True
    method = m1
    for mp in _ml_list(f):
        if not mp.coeffs:
            continue
        g = mp.to_general()
        x = GeneralPoly.variable(mp.n)
        comm = MultilinearPoly(mp.n + 1, dict((g * x - x * g).coeffs))
        ok, m2 = is_identity_detailed(target, comm, rng, trials, scan_cap)
        if not ok:
            central = False
            method = m2
            break
        if m2 == "randomized":
            method = "randomized"
    return ("proper_central" if central else "non_central"), method
