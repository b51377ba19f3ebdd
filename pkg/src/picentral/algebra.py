"""Finite-dimensional superalgebras given by structure constants.

Algebras are built either from raw structure constants or from a matrix-unit
presentation: an ambient block upper-triangular matrix algebra, an elementary
grading tuple, and linear constraints on the entries ("a11=a44", "a12=0",
and for algebras with Grassmann-valued entries "a23 odd"/"a13 even").
The basis of a constrained algebra consists of the matrix-unit sums picked
out by the equality classes, so every basis element is homogeneous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from . import linalg

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ValueError):
    pass


class AssociativityError(AlgebraError):
    pass


class GradingError(AlgebraError):
    pass


class ClosureError(AlgebraError):
    pass


class DefinitionError(AlgebraError):
    pass


@dataclass
class SimpleBlock:
    """A declared simple summand of the semisimple part."""

    kind: str                      # "F" | "F_plus_cF" | "M_kl" | "M_k_plus_cM_k"
    basis_coords: list[tuple]      # coordinate vectors inside the ambient algebra
    k: int = 1
    l: int = 0

    @property
    def dim(self) -> int:
        return len(self.basis_coords)


@dataclass
class WedderburnData:
    blocks: list[SimpleBlock]
    radical_basis: list[tuple]


@dataclass
class SuperAlgebra:
    """Associative Z2-graded algebra with rational structure constants."""

    name: str
    dim: int
    basis_labels: list[str]
    structure: dict            # (i, j) -> {k: Fraction}, absent means zero
    parity: tuple
    unit: tuple | None = None
    wedderburn: WedderburnData | None = None
    # matrix-unit presentations keep the ambient picture for pretty I/O
    ambient_size: int | None = None
    position_classes: list[list[tuple]] | None = None
    _int_table: np.ndarray | None = field(default=None, repr=False, compare=False)

    # -- arithmetic -----------------------------------------------------------

    def multiply(self, u, v):
        """Bilinear extension of the structure constants."""
        if len(u) != self.dim or len(v) != self.dim:
            raise AlgebraError("dimension mismatch in multiply")
        out = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                prod = self.structure.get((i, j))
                if prod:
                    c = ui * vj
                    for k, ck in prod.items():
                        out[k] += c * ck
        return out

    def multiply_many(self, vectors):
        acc = list(vectors[0])
        for v in vectors[1:]:
            acc = self.multiply(acc, v)
        return acc

    def basis_vector(self, i):
        return [ONE if k == i else ZERO for k in range(self.dim)]

    def int_table(self) -> np.ndarray:
        """Dense int64 structure-constant cube; requires integer constants."""
        if self._int_table is None:
            t = np.zeros((self.dim, self.dim, self.dim), np.int64)
            for (i, j), prod in self.structure.items():
                for k, c in prod.items():
                    if c.denominator != 1:
                        raise AlgebraError("non-integer structure constants")
                    t[i, j, k] = int(c)
            self._int_table = t
        return self._int_table

    def table_mod(self, p: int) -> np.ndarray:
        t = np.zeros((self.dim, self.dim, self.dim), np.int64)
        for (i, j), prod in self.structure.items():
            for k, c in prod.items():
                t[i, j, k] = c.numerator * pow(c.denominator, p - 2, p) % p
        return t

    def parities(self) -> np.ndarray:
        return np.asarray(self.parity, dtype=np.int64)

    @property
    def trivially_graded(self) -> bool:
        return not any(self.parity)

    # -- element I/O ----------------------------------------------------------

    def vector_from_expr(self, expr: str):
        """Parse '2*e12 - e34' (matrix-unit presentations) or basis labels."""
        amb = _parse_entry_expr(expr)
        if self.position_classes is not None:
            return self._from_ambient(amb)
        vec = [ZERO] * self.dim
        for (lbl, coef) in amb.items():
            try:
                vec[self.basis_labels.index(lbl)] += coef
            except ValueError:
                raise AlgebraError(f"unknown basis label {lbl!r} in {self.name}")
        return vec

    def _from_ambient(self, amb: dict):
        vec = [ZERO] * self.dim
        seen = set()
        for ci, cls in enumerate(self.position_classes):
            coefs = {amb.get(_entry_label(*pos), ZERO) for pos in cls}
            if len(coefs) != 1:
                raise AlgebraError("expression not constant on an entry class")
            c = coefs.pop()
            vec[ci] = c
            if c:
                seen.update(_entry_label(*pos) for pos in cls)
        extra = set(k for k, v in amb.items() if v) - seen
        if extra:
            raise AlgebraError(f"expression uses entries outside {self.name}: {sorted(extra)}")
        return vec

    def expr_from_vector(self, vec) -> str:
        terms = []
        for i, c in enumerate(vec):
            if not c:
                continue
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            terms.append(f"{coef}{self.basis_labels[i]}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -- invariants -----------------------------------------------------------

    def check_associativity(self):
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.structure.get((i, j), {})
                for k in range(self.dim):
                    left = {}
                    for m, c in ij.items():
                        for t, ct in self.structure.get((m, k), {}).items():
                            left[t] = left.get(t, ZERO) + c * ct
                    right = {}
                    for m, c in self.structure.get((j, k), {}).items():
                        for t, ct in self.structure.get((i, m), {}).items():
                            right[t] = right.get(t, ZERO) + c * ct
                    for t in set(left) | set(right):
                        if left.get(t, ZERO) != right.get(t, ZERO):
                            raise AssociativityError(
                                f"({self.basis_labels[i]}*{self.basis_labels[j]})*"
                                f"{self.basis_labels[k]} != associativity")

    def check_grading(self):
        for (i, j), prod in self.structure.items():
            want = (self.parity[i] + self.parity[j]) % 2
            for k, c in prod.items():
                if c and self.parity[k] != want:
                    raise GradingError(
                        f"product {self.basis_labels[i]}*{self.basis_labels[j]} "
                        f"is not homogeneous")

    def check_unit(self):
        if self.unit is None:
            return
        for b in range(self.dim):
            bv = self.basis_vector(b)
            if self.multiply(self.unit, bv) != bv or self.multiply(bv, self.unit) != bv:
                raise AlgebraError(f"declared unit fails on {self.basis_labels[b]}")

    def validate(self):
        self.check_associativity()
        self.check_grading()
        self.check_unit()
        return self


# -- entry expression helpers --------------------------------------------------

def _entry_label(i: int, j: int) -> str:
    return f"e{i}{j}" if max(i, j) < 10 else f"e{i},{j}"


def _parse_entry_label(tok: str) -> tuple[int, int]:
    body = tok[1:]
    if "," in body:
        i, j = body.split(",")
        return int(i), int(j)
    if len(body) == 2:
        return int(body[0]), int(body[1])
    raise DefinitionError(f"bad entry label {tok!r}")


def _parse_entry_expr(expr: str) -> dict:
    """'e11 + e44 - 2*e12' -> {label: Fraction}."""
    out: dict[str, Fraction] = {}
    s = expr.replace("-", "+-").replace(" ", "")
    for term in s.split("+"):
        if not term:
            continue
        sign = ONE
        if term.startswith("-"):
            sign, term = -ONE, term[1:]
        if "*" in term:
            coef, term = term.split("*")
            sign *= Fraction(coef)
        if not term.startswith("e"):
            raise DefinitionError(f"bad term {term!r} in {expr!r}")
        lbl = _entry_label(*_parse_entry_label(term))
        out[lbl] = out.get(lbl, ZERO) + sign
    return {k: v for k, v in out.items() if v}


# -- matrix-unit presentations ---------------------------------------------

def _ut_support(sizes) -> list[tuple[int, int]]:
    """Positions (1-based) of the block upper-triangular support."""
    bounds = []
    start = 1
    for s in sizes:
        bounds.append((start, start + s - 1))
        start += s
    support = []
    for bi, (r0, r1) in enumerate(bounds):
        for bj in range(bi, len(bounds)):
            c0, c1 = bounds[bj]
            for i in range(r0, r1 + 1):
                for j in range(c0, c1 + 1):
                    support.append((i, j))
    return support


class _Classes:
    """Union-find over ambient entries, with zero-marked classes."""

    def __init__(self, support):
        self.parent = {pos: pos for pos in support}
        self.zero = set()

    def find(self, pos):
        while self.parent[pos] != pos:
            self.parent[pos] = self.parent[self.parent[pos]]
            pos = self.parent[pos]
        return pos

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
            if rb in self.zero:
                self.zero.discard(rb)
                self.zero.add(ra)

    def mark_zero(self, pos):
        self.zero.add(self.find(pos))

    def classes(self) -> list[list[tuple]]:
        groups: dict[tuple, list[tuple]] = {}
        for pos in self.parent:
            groups.setdefault(self.find(pos), []).append(pos)
        out = [sorted(v) for r, v in groups.items() if r not in self.zero]
        out.sort(key=lambda cls: cls[0])
        return out


def _apply_constraint(cl: _Classes, text: str, slot_map=None):
    """One constraint string. slot_map, if given, maps a slot index pair to
    its (even_pair, odd_pair) doubled entries (Grassmann-valued presentations).
    """
    text = text.strip()
    if slot_map is None:
        parts = [t.strip() for t in text.split("=")]
        entries = []
        zero = False
        for t in parts:
            if t == "0":
                zero = True
            else:
                entries.append(_parse_index_pair(t))
        for a, b in zip(entries, entries[1:]):
            cl.union(a, b)
        if zero:
            for e in entries:
                cl.mark_zero(e)
        return
    # Grassmann-slot language: "a11=a33", "a22 even", "a23 odd", "a31=0"
    if text.endswith(" even") or text.endswith(" odd"):
        idx = _parse_index_pair(text.split()[0])
        even, odd = slot_map[idx]
        cl.mark_zero(odd[0] if text.endswith(" even") else even[0])
        return
    parts = [t.strip() for t in text.split("=")]
    slots, zero = [], False
    for t in parts:
        if t == "0":
            zero = True
        else:
            slots.append(_parse_index_pair(t))
    for a, b in zip(slots, slots[1:]):
        ea, oa = slot_map[a]
        eb, ob = slot_map[b]
        cl.union(ea[0], eb[0])
        cl.union(oa[0], ob[0])
    if zero:
        for s in slots:
            e, o = slot_map[s]
            cl.mark_zero(e[0])
            cl.mark_zero(o[0])


def _parse_index_pair(tok: str) -> tuple[int, int]:
    tok = tok.strip()
    if not tok.startswith("a"):
        raise DefinitionError(f"bad entry {tok!r}")
    return _parse_entry_label("e" + tok[1:])


def _build_from_classes(name, ambient_size, classes, parity_of,
                        zero_positions) -> SuperAlgebra:
    pos_to_class = {}
    for ci, cls in enumerate(classes):
        for pos in cls:
            pos_to_class[pos] = ci
    dim = len(classes)
    if dim == 0:
        raise DefinitionError(f"{name}: constraints leave an empty algebra")
    parity = []
    labels = []
    for cls in classes:
        pars = {parity_of(pos) for pos in cls}
        if len(pars) != 1:
            raise GradingError(f"{name}: entry class {cls} is not homogeneous")
        parity.append(pars.pop())
        labels.append("+".join(_entry_label(*pos) for pos in cls))
    structure = {}
    for a, ca in enumerate(classes):
        for b, cb in enumerate(classes):
            prod: dict[tuple, int] = {}
            for (i, j) in ca:
                for (k, l) in cb:
                    if j == k:
                        prod[(i, l)] = prod.get((i, l), 0) + 1
            if not prod:
                continue
            out: dict[int, Fraction] = {}
            for pos, c in list(prod.items()):
                if pos in zero_positions:
                    raise ClosureError(
                        f"{name}: product {labels[a]}*{labels[b]} hits "
                        f"zero-constrained entry {pos}")
                if pos not in pos_to_class:
                    raise ClosureError(
                        f"{name}: product {labels[a]}*{labels[b]} leaves the "
                        f"support at {pos}")
            hit_classes = {pos_to_class[pos] for pos in prod}
            for ci in hit_classes:
                coefs = {prod.get(pos, 0) for pos in classes[ci]}
                if len(coefs) != 1:
                    raise ClosureError(
                        f"{name}: product {labels[a]}*{labels[b]} is not "
                        f"constant on class {labels[ci]}")
                c = coefs.pop()
                if c:
                    out[ci] = Fraction(c)
            if out:
                structure[(a, b)] = out
    algebra = SuperAlgebra(
        name=name, dim=dim, basis_labels=labels, structure=structure,
        parity=tuple(parity), ambient_size=ambient_size,
        position_classes=classes)
    algebra.unit = find_unit(algebra)
    return algebra


def find_unit(A: SuperAlgebra):
    """Two-sided unit as a coordinate vector, or None."""
    rows, rhs = [], []
    for b in range(A.dim):
        for k in range(A.dim):
            rows.append([A.structure.get((i, b), {}).get(k, ZERO) for i in range(A.dim)])
            rhs.append(ONE if k == b else ZERO)
            rows.append([A.structure.get((b, i), {}).get(k, ZERO) for i in range(A.dim)])
            rhs.append(ONE if k == b else ZERO)
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    # solve() ignores inconsistent systems only via pivots; re-verify
    for b in range(A.dim):
        bv = A.basis_vector(b)
        if A.multiply(sol, bv) != bv or A.multiply(bv, sol) != bv:
            return None
    return tuple(sol)


def build_ut_block_algebra(sizes, grading_tuple, name=None) -> SuperAlgebra:
    """UT(d_1,...,d_m) with the elementary grading of the given tuple."""
    n = sum(sizes)
    if len(grading_tuple) != n:
        raise DefinitionError("grading tuple length must equal total size")
    support = _ut_support(sizes)
    cl = _Classes(support)
    classes = cl.classes()
    parity_of = lambda pos: (grading_tuple[pos[0] - 1] + grading_tuple[pos[1] - 1]) % 2
    label = name or ("UT(" + ",".join(map(str, sizes)) + ")_" + "".join(map(str, grading_tuple)))
    return _build_from_classes(label, n, classes, parity_of, set())


def build_structured_algebra(definition: dict) -> SuperAlgebra:
    """Build a SuperAlgebra from an AlgebraDefinition document (parsed dict)."""
    name = definition.get("name", "anonymous")
    amb = definition.get("ambient")
    if amb is None:
        raise DefinitionError("definition lacks an 'ambient' section")
    kind = amb.get("kind")
    if kind == "structure_constants":
        A = _build_raw(name, amb)
    elif kind in ("ut_blocks", "ut_blocks_g"):
        A = _build_matrix_units(name, amb, definition.get("constraints") or [])
    else:
        raise DefinitionError(f"unknown ambient kind {kind!r}")
    A.validate()
    wd = definition.get("wedderburn")
    if wd:
        A.wedderburn = _parse_wedderburn(A, wd)
    return A


def _build_matrix_units(name, amb, constraints) -> SuperAlgebra:
    sizes = list(amb["sizes"])
    if amb["kind"] == "ut_blocks_g":
        # each slot is an F+cF pair; double the ambient
        n2 = 2 * sum(sizes)
        support = _ut_support([2 * s for s in sizes])
        # full slot grid: slots (i,j) present iff their doubled block is
        n_slots = sum(sizes)
        slot_map = {}
        for i in range(1, n_slots + 1):
            for j in range(1, n_slots + 1):
                even = ((2 * i - 1, 2 * j - 1), (2 * i, 2 * j))
                odd = ((2 * i - 1, 2 * j), (2 * i, 2 * j - 1))
                if even[0] in set(support):
                    slot_map[(i, j)] = (even, odd)
        supset = set(support)
        cl = _Classes(support)
        for (i, j), (even, odd) in slot_map.items():
            cl.union(*even)
            cl.union(*odd)
        grading = amb.get("grading") or [k % 2 for k in range(n2)]
        if len(grading) != n2:
            raise DefinitionError("grading length mismatch for doubled ambient")
        for c in constraints:
            _apply_constraint(cl, c, slot_map=slot_map)
        parity_of = lambda pos: (grading[pos[0] - 1] + grading[pos[1] - 1]) % 2
        zero_pos = {pos for pos in supset if cl.find(pos) in cl.zero}
        return _build_from_classes(name, n2, cl.classes(), parity_of, zero_pos)
    n = sum(sizes)
    grading = amb.get("grading") or [0] * n
    if len(grading) != n:
        raise DefinitionError("grading tuple length must equal total size")
    support = _ut_support(sizes)
    cl = _Classes(support)
    for c in constraints:
        _apply_constraint(cl, c)
    parity_of = lambda pos: (grading[pos[0] - 1] + grading[pos[1] - 1]) % 2
    zero_pos = {pos for pos in support if cl.find(pos) in cl.zero}
    return _build_from_classes(name, n, cl.classes(), parity_of, zero_pos)


def _build_raw(name, amb) -> SuperAlgebra:
    dim = amb["dim"]
    labels = amb.get("labels") or [f"b{i+1}" for i in range(dim)]
    parity = tuple(amb.get("parity") or [0] * dim)
    structure = {}
    for key, prod in (amb.get("products") or {}).items():
        i, j = (int(t) - 1 for t in str(key).split(","))
        out = {int(k) - 1: linalg.frac(v) for k, v in prod.items() if linalg.frac(v)}
        if out:
            structure[(i, j)] = out
    A = SuperAlgebra(name=name, dim=dim, basis_labels=list(labels),
                     structure=structure, parity=parity)
    A.unit = find_unit(A)
    return A


def _parse_wedderburn(A: SuperAlgebra, doc: dict) -> WedderburnData:
    blocks = []
    for b in doc.get("blocks", []):
        coords = [tuple(A.vector_from_expr(e)) for e in b["elements"]]
        blocks.append(SimpleBlock(kind=b["kind"], basis_coords=coords,
                                  k=b.get("k", 1), l=b.get("l", 0)))
    radical = [tuple(A.vector_from_expr(e)) for e in doc.get("radical", [])]
    return WedderburnData(blocks=blocks, radical_basis=radical)


# -- centers -------------------------------------------------------------------

def center(A: SuperAlgebra):
    """Basis of Z(A), each vector homogeneous, evens first."""
    rows = []
    for j in range(A.dim):
        for k in range(A.dim):
            rows.append([
                A.structure.get((i, j), {}).get(k, ZERO)
                - A.structure.get((j, i), {}).get(k, ZERO)
                for i in range(A.dim)])
    basis = linalg.nullspace(rows, ncols=A.dim)
    return _homogenize(A, basis)


def _homogenize(A: SuperAlgebra, basis):
    split = []
    for vec in basis:
        for par in (0, 1):
            part = [c if A.parity[i] == par else ZERO for i, c in enumerate(vec)]
            if any(part):
                split.append(part)
    red, _ = linalg.rref(split)
    red.sort(key=lambda v: next(A.parity[i] for i, c in enumerate(v) if c))
    return red


def supercenter_component(A: SuperAlgebra, q: int):
    """{v in B^(q) : v b = (-1)^(q r) b v for homogeneous b of parity r}.

    These are exactly the tensor factors of central elements g (x) v of the
    Grassmann envelope, with g of parity q.
    """
    rows = []
    for j in range(A.dim):
        sign = -ONE if (q and A.parity[j]) else ONE
        for k in range(A.dim):
            rows.append([
                A.structure.get((i, j), {}).get(k, ZERO)
                - sign * A.structure.get((j, i), {}).get(k, ZERO)
                if A.parity[i] == q else ZERO
                for i in range(A.dim)])
    # restrict unknowns to parity-q coordinates: coordinates with the wrong
    # parity get an identity row forcing them to zero
    for i in range(A.dim):
        if A.parity[i] != q:
            row = [ZERO] * A.dim
            row[i] = ONE
            rows.append(row)
    return linalg.nullspace(rows, ncols=A.dim)


# -- Wedderburn verification ---------------------------------------------------

@dataclass
class Report:
    ok: bool
    failures: list[str]

    def __bool__(self):
        return self.ok


def _block_unit(A: SuperAlgebra, block: SimpleBlock):
    """The unit element of a declared block (sum of its diagonal units)."""
    if block.kind == "F":
        return list(block.basis_coords[0])
    if block.kind == "F_plus_cF":
        return list(block.basis_coords[0])
    m = block.k + block.l if block.kind == "M_kl" else block.k
    unit = [ZERO] * A.dim
    for t in range(m):
        uv = block.basis_coords[t * m + t]
        unit = [a + b for a, b in zip(unit, uv)]
    return unit


def _reference_products(block: SimpleBlock):
    """Expected products and parities for the declared block kind."""
    if block.kind == "F":
        return {(0, 0): {0: ONE}}, [0]
    if block.kind == "F_plus_cF":
        return ({(0, 0): {0: ONE}, (0, 1): {1: ONE},
                 (1, 0): {1: ONE}, (1, 1): {0: ONE}}, [0, 1])
    if block.kind == "M_kl":
        m = block.k + block.l
        prods = {}
        for (i, j) in product(range(m), repeat=2):
            for (k, l) in product(range(m), repeat=2):
                if j == k:
                    prods[(i * m + j, k * m + l)] = {i * m + l: ONE}
        pars = [(int(i >= block.k) + int(j >= block.k)) % 2
                for i in range(m) for j in range(m)]
        return prods, pars
    if block.kind == "M_k_plus_cM_k":
        k = block.k
        sq = k * k
        prods = {}
        for ca in (0, 1):
            for cb in (0, 1):
                for (i, j) in product(range(k), repeat=2):
                    for (u, v) in product(range(k), repeat=2):
                        if j == u:
                            prods[(ca * sq + i * k + j, cb * sq + u * k + v)] = {
                                ((ca + cb) % 2) * sq + i * k + v: ONE}
        pars = [0] * sq + [1] * sq
        return prods, pars
    raise DefinitionError(f"unknown block kind {block.kind!r}")


def verify_wedderburn(A: SuperAlgebra, data: WedderburnData) -> Report:
    """Check a claimed Wedderburn-Malcev decomposition; first failure wins."""
    failures: list[str] = []

    def fail(msg):
        failures.append(msg)

    # block structure and parities
    for bi, block in enumerate(data.blocks):
        prods, pars = _reference_products(block)
        if len(pars) != block.dim:
            fail(f"block {bi}: wrong number of basis elements for {block.kind}")
            break
        for t, want in enumerate(pars):
            vec = block.basis_coords[t]
            if any(c and A.parity[i] != want for i, c in enumerate(vec)):
                fail(f"block {bi}: element {t} not homogeneous of parity {want}")
        for (a, b) in product(range(block.dim), repeat=2):
            got = A.multiply(block.basis_coords[a], block.basis_coords[b])
            want = [ZERO] * A.dim
            for k, c in prods.get((a, b), {}).items():
                want = [w + c * x for w, x in zip(want, block.basis_coords[k])]
            if got != want:
                fail(f"block {bi}: structure constants do not match {block.kind}")
                break
        else:
            continue
        break
    # orthogonality between blocks
    if not failures:
        for bi, ba in enumerate(data.blocks):
            for bj, bb in enumerate(data.blocks):
                if bi == bj:
                    continue
                for x in ba.basis_coords:
                    for y in bb.basis_coords:
                        if any(A.multiply(x, y)):
                            fail(f"blocks {bi},{bj}: not orthogonal")
                            break
                    if failures:
                        break
                if failures:
                    break
            if failures:
                break
    # radical: two-sided ideal, nilpotent
    if not failures and data.radical_basis:
        jspan = [list(v) for v in data.radical_basis]
        for j in data.radical_basis:
            for b in range(A.dim):
                bv = A.basis_vector(b)
                for prod in (A.multiply(bv, list(j)), A.multiply(list(j), bv)):
                    if any(prod) and not linalg.in_span(jspan, prod):
                        fail("radical span is not a two-sided ideal")
                        break
                if failures:
                    break
            if failures:
                break
        if not failures:
            power = jspan
            for _ in range(A.dim):
                if not power:
                    break
                nxt = []
                for u in power:
                    for v in jspan:
                        w = A.multiply(u, v)
                        if any(w):
                            nxt.append(w)
                power, _ = (linalg.rref(nxt)[0], None) if nxt else ([], None)
            if power:
                fail("radical is not nilpotent")
    # direct sum decomposition
    if not failures:
        all_vecs = [list(v) for b in data.blocks for v in b.basis_coords]
        all_vecs += [list(v) for v in data.radical_basis]
        if len(all_vecs) != A.dim or linalg.rank(all_vecs) != A.dim:
            fail("blocks + radical do not decompose the algebra directly")
    return Report(ok=not failures, failures=failures)


def multiply(A: SuperAlgebra, u, v):
    return A.multiply(u, v)
