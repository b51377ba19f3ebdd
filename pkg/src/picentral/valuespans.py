"""Value spans of factored multilinear polynomials on an envelope.

The witness polynomials used for proper-central certification all factor as
products of long commutators on disjoint, consecutive variable blocks,
optionally bracketed against one extra variable. For a substitution by
homogeneous tensors, the Grassmann sign of such a product splits over the
factors (variables of later factors are larger and appear later, so no
inversions cross a factor boundary), and a bracket [u, x] evaluates to the
super-commutator u b - (-1)^(q_u q_b) b u of the factor values.

Values are therefore computed factor-wise as graded subspaces of B, keyed by
(parity, touched block subset): the span of all signed values obtainable
with substitutions from a homogeneous spanning set, where "touched" records
which Wedderburn blocks contributed a substituted element. This turns each
existential question (is some central evaluation nonzero while meeting every
block of a subset?) into exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .algebra import SuperAlgebra, supercenter_component
from .polyspace import GeneralPoly, MultilinearPoly, PolyError, parse_poly

ZERO = Fraction(0)
ONE = Fraction(1)


# -- factor trees ---------------------------------------------------------

@dataclass
class Leaf:
    poly: MultilinearPoly  # on its own variables 0..k-1
    nvars: int


@dataclass
class Prod:
    children: list


@dataclass
class Bracket:
    child: object  # one extra variable is adjoined on the right


def tree_nvars(t) -> int:
    if isinstance(t, Leaf):
        return t.nvars
    if isinstance(t, Prod):
        return sum(tree_nvars(c) for c in t.children)
    return tree_nvars(t.child) + 1


def tree_poly(t, offset: int = 0) -> GeneralPoly:
    """Expand a factor tree back to a polynomial (for cross-checks)."""
    if isinstance(t, Leaf):
        return t.poly.to_general().rename(
            {v: v + offset for v in range(t.nvars)})
    if isinstance(t, Prod):
        out = GeneralPoly.scalar(1)
        for c in t.children:
            out = out * tree_poly(c, offset)
            offset += tree_nvars(c)
        return out
    inner = tree_poly(t.child, offset)
    x = GeneralPoly.variable(offset + tree_nvars(t.child))
    return inner * x - x * inner


def parse_factor_tree(expr: str):
    """Parse witness shapes: juxtaposed commutator factors, each either a
    long commutator of variables or a bracketed (subproduct, variable) pair;
    bare variables are degree-1 leaves. Variables must run x1, x2, ... left
    to right (the factor-sign decomposition needs consecutive blocks)."""
    tree, pos, used = _parse_seq(expr.replace(" ", ""), 0, 0)
    if pos != len(expr.replace(" ", "")):
        raise PolyError(f"trailing input in factor expression {expr!r}")
    return tree


def _parse_seq(s: str, pos: int, next_var: int):
    items = []
    while pos < len(s) and s[pos] != "]" and s[pos] != ",":
        item, pos, next_var = _parse_item(s, pos, next_var)
        items.append(item)
    if not items:
        raise PolyError("empty factor sequence")
    return (items[0] if len(items) == 1 else Prod(items)), pos, next_var


def _parse_item(s: str, pos: int, next_var: int):
    if s[pos] == "x":
        idx, pos = _read_var(s, pos)
        if idx != next_var:
            raise PolyError("factor variables must be consecutive x1, x2, ...")
        return Leaf(MultilinearPoly(1, {(0,): ONE}), 1), pos, next_var + 1
    if s[pos] != "[":
        raise PolyError(f"unexpected {s[pos]!r} in factor expression")
    pos += 1
    # try commutator-of-variables first
    save = pos
    vars_ok, idxs, p2 = _try_vars(s, pos, next_var)
    if vars_ok:
        k = len(idxs)
        poly = _long_commutator(k)
        return Leaf(poly, k), p2, next_var + k
    # otherwise: [ subtree , x ]
    sub, pos, next_var = _parse_seq(s, save, next_var)
    if pos >= len(s) or s[pos] != ",":
        raise PolyError("expected ',' in bracket factor")
    pos += 1
    idx, pos = _read_var(s, pos)
    if idx != next_var:
        raise PolyError("factor variables must be consecutive x1, x2, ...")
    if pos >= len(s) or s[pos] != "]":
        raise PolyError("expected ']' in bracket factor")
    return Bracket(sub), pos + 1, next_var + 1


def _try_vars(s, pos, next_var):
    idxs = []
    want = next_var
    while True:
        if pos < len(s) and s[pos] == "x":
            idx, pos = _read_var(s, pos)
            if idx != want:
                return False, None, None
            idxs.append(idx)
            want += 1
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == "]" and len(idxs) >= 2:
                return True, idxs, pos + 1
            return False, None, None
        return False, None, None


def _read_var(s, pos):
    if s[pos] != "x":
        raise PolyError("expected variable")
    pos += 1
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if start == pos:
        raise PolyError("bad variable")
    return int(s[start:pos]) - 1, pos


def _long_commutator(k: int) -> MultilinearPoly:
    p = GeneralPoly.variable(0)
    for v in range(1, k):
        x = GeneralPoly.variable(v)
        p = p * x - x * p
    return MultilinearPoly.from_general(p)


# -- substitution sets and span arithmetic ---------------------------------

@dataclass
class TaggedElement:
    vec: list          # homogeneous coordinate vector in B
    parity: int
    block: int | None  # Wedderburn block index, None for radical elements


def substitution_set(B: SuperAlgebra, graded: bool = True) -> list[TaggedElement]:
    """Homogeneous spanning set of B respecting the Wedderburn split.

    With graded=False (plain-algebra targets) parities are zeroed so no
    Grassmann signs apply.
    """
    out = []
    if B.wedderburn is not None:
        for bi, block in enumerate(B.wedderburn.blocks):
            for vec in block.basis_coords:
                out.append(TaggedElement(list(vec), _vec_parity(B, vec), bi))
        for vec in B.wedderburn.radical_basis:
            out.append(TaggedElement(list(vec), _vec_parity(B, vec), None))
    else:
        for i in range(B.dim):
            out.append(TaggedElement(B.basis_vector(i), B.parity[i], None))
    if not graded:
        for e in out:
            e.parity = 0
    return out


def _vec_parity(B, vec) -> int:
    pars = {B.parity[i] for i, c in enumerate(vec) if c}
    if len(pars) != 1:
        raise ValueError("substitution element is not homogeneous")
    return pars.pop()


class SpanTable:
    """Map (parity, touched frozenset) -> reduced span (list of vectors)."""

    def __init__(self):
        self.data: dict[tuple, list] = {}

    def add(self, parity, touched, vec):
        if not any(vec):
            return
        key = (parity, frozenset(touched))
        rows = self.data.setdefault(key, [])
        rows.append(list(vec))

    def reduce(self):
        for key, rows in self.data.items():
            red, _ = linalg.rref(rows)
            self.data[key] = red
        self.data = {k: v for k, v in self.data.items() if v}
        return self

    def items(self):
        return self.data.items()


def leaf_spans(B: SuperAlgebra, leaf: Leaf, subs) -> SpanTable:
    table = SpanTable()
    k = leaf.nvars
    for tup in product(range(len(subs)), repeat=k):
        elems = [subs[t] for t in tup]
        vec = _signed_eval(B, leaf.poly, elems)
        parity = sum(e.parity for e in elems) % 2
        touched = {e.block for e in elems if e.block is not None}
        table.add(parity, touched, vec)
    return table.reduce()


def _signed_eval(B: SuperAlgebra, poly: MultilinearPoly, elems):
    out = [ZERO] * B.dim
    pars = [e.parity for e in elems]
    for word, c in poly.coeffs.items():
        odd = [v for v in word if pars[v]]
        inv = sum(1 for a in range(len(odd)) for b in range(a + 1, len(odd))
                  if odd[a] > odd[b])
        val = list(elems[word[0]].vec)
        for v in word[1:]:
            val = B.multiply(val, elems[v].vec)
        if inv & 1:
            c = -c
        for i in range(B.dim):
            out[i] += c * val[i]
    return out


def tree_spans(B: SuperAlgebra, tree, subs=None, _leaf_cache=None) -> SpanTable:
    """Graded, block-tagged span of all signed values of a factor tree."""
    if subs is None:
        subs = substitution_set(B)
    if _leaf_cache is None:
        _leaf_cache = {}
    if isinstance(tree, Leaf):
        key = tuple(sorted(tree.poly.coeffs.items()))
        if key not in _leaf_cache:
            _leaf_cache[key] = leaf_spans(B, tree, subs)
        return _leaf_cache[key]
    if isinstance(tree, Prod):
        acc = tree_spans(B, tree.children[0], subs, _leaf_cache)
        for child in tree.children[1:]:
            nxt = tree_spans(B, child, subs, _leaf_cache)
            out = SpanTable()
            for (qa, ta), rows_a in acc.items():
                for (qb, tb), rows_b in nxt.items():
                    for u in rows_a:
                        for v in rows_b:
                            out.add((qa + qb) % 2, ta | tb, B.multiply(u, v))
            acc = out.reduce()
        return acc
    # Bracket: super-commutator with one extra substituted element
    inner = tree_spans(B, tree.child, subs, _leaf_cache)
    out = SpanTable()
    for (q, touched), rows in inner.items():
        for e in subs:
            sign = -ONE if (q and e.parity) else ONE
            for u in rows:
                ub = B.multiply(u, e.vec)
                bu = B.multiply(e.vec, u)
                vec = [a - sign * b for a, b in zip(ub, bu)]
                t2 = touched | ({e.block} if e.block is not None else set())
                out.add((q + e.parity) % 2, t2, vec)
    return out.reduce()


# -- verdicts -----------------------------------------------------------------

def classify_tree(B: SuperAlgebra, tree, envelope: bool,
                  subs=None, leaf_cache=None) -> tuple[str, SpanTable]:
    """('identity' | 'proper_central' | 'non_central', spans) for the
    envelope of B (or B itself when envelope is false)."""
    if subs is None:
        subs = substitution_set(B, graded=envelope)
    spans = tree_spans(B, tree, subs=subs, _leaf_cache=leaf_cache)
    if not spans.data:
        return "identity", spans
    centers = {}
    for (q, _touched), rows in spans.items():
        if q not in centers:
            if envelope:
                centers[q] = [list(v) for v in supercenter_component(B, q)]
            else:
                from .algebra import center
                centers[q] = [list(v) for v in center(B)]
        zc = centers[q]
        for v in rows:
            if not linalg.in_span(zc, v):
                return "non_central", spans
    return "proper_central", spans


def touched_supersets(spans: SpanTable, blocks: set) -> bool:
    """Does some nonzero value arise from a substitution meeting every
    block in `blocks`?"""
    return any(blocks <= t for (_q, t) in spans.data)
