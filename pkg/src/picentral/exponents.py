"""Exponents of Grassmann envelopes via admissible-subalgebra search.

exp(G(B)) is the maximal total dimension of a set of distinct simple blocks
B_i1, ..., B_ik admitting an ordering with B_i1 J B_i2 J ... J B_ik != 0
(single blocks count unconditionally). The proper-central exponent is
bracketed: the admissible maximum is an upper bound, and a lower bound comes
from witness polynomials that are proper central on the envelope with some
nonzero evaluation touching every block of an admissible set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from . import linalg, valuespans
from .algebra import AlgebraError, SuperAlgebra

ZERO = Fraction(0)


@dataclass
class AdmissibleResult:
    max_admissible_dim: int
    best_subset: tuple              # ordered block indices of a best witness
    radical_path: list              # interleaving radical elements
    chain: list = field(default_factory=list)  # full alternating chain
    admissible_sets: dict = field(default_factory=dict)  # frozenset -> dim
    delta_lower: int = 0
    delta_upper: int = 0
    delta_witness: object = None    # (expression, block subset) or None

    @property
    def exp(self) -> int:
        return self.max_admissible_dim

    @property
    def delta_certified(self) -> bool:
        return self.delta_lower == self.delta_upper


def _mul_span(B: SuperAlgebra, left, right):
    rows = []
    for u in left:
        for v in right:
            w = B.multiply(list(u), list(v))
            if any(w):
                rows.append(w)
    if not rows:
        return []
    red, _ = linalg.rref(rows)
    return red


def _ordering_admissible(B: SuperAlgebra, blocks, order, jspan):
    span = [list(v) for v in blocks[order[0]].basis_coords]
    for idx in order[1:]:
        span = _mul_span(B, span, jspan)
        if not span:
            return False
        span = _mul_span(B, span, [list(v) for v in blocks[idx].basis_coords])
        if not span:
            return False
    return True


def _extract_chain(B: SuperAlgebra, blocks, order, jbasis):
    """Concrete alternating basis-element chain with nonzero product."""
    layers = []
    for t, idx in enumerate(order):
        if t:
            layers.append([list(v) for v in jbasis])
        layers.append([list(v) for v in blocks[idx].basis_coords])

    def dfs(depth, acc):
        if depth == len(layers):
            return []
        for cand in layers[depth]:
            prod = B.multiply(acc, cand) if acc is not None else cand
            if any(prod):
                rest = dfs(depth + 1, prod)
                if rest is not None:
                    return [cand] + rest
        return None

    chain = dfs(0, None)
    if chain is None:
        raise AlgebraError("admissible ordering yielded no concrete chain")
    return chain


def pi_exponent(B: SuperAlgebra) -> AdmissibleResult:
    """Maximal admissible dimension, with a realizing chain."""
    if B.wedderburn is None:
        raise AlgebraError("pi_exponent needs Wedderburn data")
    blocks = B.wedderburn.blocks
    jbasis = [list(v) for v in B.wedderburn.radical_basis]
    jspan = jbasis
    admissible: dict[frozenset, tuple] = {}
    for k in range(1, len(blocks) + 1):
        for subset in combinations(range(len(blocks)), k):
            if k == 1:
                admissible[frozenset(subset)] = (subset, blocks[subset[0]].dim)
                continue
            dim = sum(blocks[i].dim for i in subset)
            for order in permutations(subset):
                if _ordering_admissible(B, blocks, order, jspan):
                    admissible[frozenset(subset)] = (order, dim)
                    break
    best_key = max(admissible, key=lambda s: admissible[s][1])
    order, dim = admissible[best_key]
    chain = _extract_chain(B, blocks, order, jbasis) if len(order) > 1 else []
    path = chain[1::2]
    if chain:
        prod = chain[0]
        for v in chain[1:]:
            prod = B.multiply(prod, v)
        if not any(prod):
            raise AlgebraError("radical path re-multiplication vanished")
    return AdmissibleResult(
        max_admissible_dim=dim, best_subset=order, radical_path=path,
        chain=chain,
        admissible_sets={s: d for s, (_o, d) in admissible.items()})


# -- witness library -----------------------------------------------------------

def _compositions(total_min, total_max, parts=(2, 3)):
    out = []

    def rec(acc, s):
        if total_min <= s <= total_max:
            out.append(tuple(acc))
        if s >= total_max:
            return
        for p in parts:
            if s + p <= total_max:
                acc.append(p)
                rec(acc, s + p)
                acc.pop()
    rec([], 0)
    return out


def default_witness_library(degree_cap: int = 8):
    """(expression, factor tree) pairs: products of long commutators of
    lengths 2 and 3 up to the degree cap, the same products bracketed with
    one extra variable, and x1 alone."""
    out = [("x1", valuespans.parse_factor_tree("x1"))]

    def product_expr(comp):
        expr = ""
        v = 1
        for length in comp:
            expr += "[" + ",".join(f"x{v + i}" for i in range(length)) + "]"
            v += length
        return expr

    comps = sorted(_compositions(2, degree_cap), key=lambda c: (sum(c), len(c)))
    for comp in comps:
        expr = product_expr(comp)
        out.append((expr, valuespans.parse_factor_tree(expr)))
    for comp in sorted(_compositions(2, degree_cap - 1),
                       key=lambda c: (sum(c), len(c))):
        expr = "[" + product_expr(comp) + f",x{sum(comp) + 1}]"
        out.append((expr, valuespans.parse_factor_tree(expr)))
    return out


def delta_exponent_bounds(B: SuperAlgebra, witnesses=None,
                          degree_cap: int = 8) -> AdmissibleResult:
    """Certified interval for the proper-central exponent of G(B).

    Lower bound: largest admissible block set such that some witness is
    proper central on G(B) with a nonzero evaluation touching every block of
    the set. Upper bound: the admissible maximum.
    """
    result = pi_exponent(B)
    result.delta_upper = result.max_admissible_dim
    library = list(witnesses or [])
    for w in library[:]:
        if isinstance(w, str):
            library[library.index(w)] = (w, valuespans.parse_factor_tree(w))
    library += default_witness_library(degree_cap)
    subs = valuespans.substitution_set(B, graded=True)
    leaf_cache: dict = {}
    sets_by_dim = sorted(result.admissible_sets.items(),
                         key=lambda kv: -kv[1])
    for expr, tree in library:
        verdict, spans = valuespans.classify_tree(
            B, tree, envelope=True, subs=subs, leaf_cache=leaf_cache)
        if verdict != "proper_central":
            continue
        for subset, dim in sets_by_dim:
            if dim <= result.delta_lower:
                break
            if valuespans.touched_supersets(spans, set(subset)):
                result.delta_lower = dim
                result.delta_witness = (expr, tuple(sorted(subset)))
                break
        if result.delta_lower == result.delta_upper:
            break
    return result
