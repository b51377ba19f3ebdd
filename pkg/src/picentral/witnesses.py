"""Idempotent/radical witness patterns certifying proper central exponent > 2.

Six patterns are recognized. Each asks for orthogonal even idempotents
e_i (units of Wedderburn blocks) and homogeneous radical elements j_t
making an alternating product nonzero:

    L4.1  e1 j1 e2 j2 e3 j3 e1   -> target A_3
    L4.2  j1 e1 j2 e2 j3 e3 j4   -> target A_4
    L4.3  e2 j2 e1 j1 e2         -> target A_5   (e2 in an F+cF block)
    L4.4  j1 e1 j2 e2 j3         -> target A_6   (e2 in an F+cF block)
    L4.5  j1 e2 j2 e1 j3         -> target A_7   (e2 in an F+cF block)
    L4.6  e1 j1 e2 j2 e1         -> target A_8/A_9 (e2 in an F+cF block)

A firing pattern certifies Id(G(B)) <= Id(A_target), hence
exp^delta(G(B)) >= 3. Existence of the j's is decided constructively:
the pattern product is multilinear in the j slots, so it is nonzero for
some radical elements iff it is nonzero on tuples of homogeneous radical
basis vectors, which a depth-first search enumerates.

realize_pattern rebuilds the construction behind the pattern: the graded
subalgebra Bbar generated by the pattern's generators, the kernel I of
the structure map onto the target, and the quotient Bbar/I together with
the explicit coset basis. The kernel is computed from a pair algebra
P <= Bbar (+) T generated by (generator, image) pairs: the map is well
defined iff P meets 0 (+) T trivially, and I is the slice of P with zero
T-part. Where the construction lists kernel generators explicitly, the
ideal they generate is checked to equal the computed kernel.

Simple blocks larger than F and F+cF short-circuit: a matrix block
M_{k,l} with l > 0 certifies target A_2 and a k >= 2 block certifies
target A_1, no radical needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations

from . import linalg
from .algebra import (SuperAlgebra, WedderburnData, verify_wedderburn,
                      AlgebraError, _block_unit)
from .linalg import frac

ZERO = frac(0)

__all__ = ["PatternMatch", "WitnessReport", "detect_patterns",
           "realize_pattern", "certify_delta_gt_two"]


@dataclass
class PatternMatch:
    lemma: str                      # "L4.1".."L4.6" or "simple-block"
    target: str                     # catalog name
    idempotents: list               # coordinate vectors, pattern order e1,e2[,e3]
    radical_elements: list          # (vector, parity), in j1,j2,... order
    nonzero_product: tuple | None
    block_indices: tuple = ()

    def to_record(self, algebra="?"):
        return json.dumps({
            "algebra": algebra, "lemma": self.lemma, "target": self.target,
            "idempotents": [[str(c) for c in v] for v in self.idempotents],
            "radical_elements": [{"vector": [str(c) for c in v], "parity": p}
                                 for v, p in self.radical_elements],
            "nonzero_product": [str(c) for c in self.nonzero_product]
            if self.nonzero_product else None,
        }, sort_keys=True)


@dataclass
class WitnessReport:
    algebra: str
    verdict: str                    # "certified" or "no witness found"
    matches: list = field(default_factory=list)
    realization: dict | None = None
    delta_bounds: tuple | None = None
    checks_passed: list = field(default_factory=list)

    @property
    def certified(self):
        return self.verdict == "certified"

    def to_record(self):
        return json.dumps({
            "algebra": self.algebra, "verdict": self.verdict,
            "lemma": self.matches[0].lemma if self.matches else None,
            "target": self.matches[0].target if self.matches else None,
            "delta_bounds": self.delta_bounds,
            "checks_passed": self.checks_passed,
        }, sort_keys=True)


# pattern grammar: integers index the idempotent tuple, "J" is a radical slot.
# jorder maps slot position to the j subscript used by generator recipes.
_PATTERNS = {
    "L4.1": {"seq": [0, "J", 1, "J", 2, "J", 0], "nidem": 3, "fcf": None,
             "jorder": [0, 1, 2]},
    "L4.2": {"seq": ["J", 0, "J", 1, "J", 2, "J"], "nidem": 3, "fcf": None,
             "jorder": [0, 1, 2, 3]},
    "L4.3": {"seq": [1, "J", 0, "J", 1], "nidem": 2, "fcf": 1,
             "jorder": [1, 0]},     # product reads e2 j2 e1 j1 e2
    "L4.4": {"seq": ["J", 0, "J", 1, "J"], "nidem": 2, "fcf": 1,
             "jorder": [0, 1, 2]},
    "L4.5": {"seq": ["J", 1, "J", 0, "J"], "nidem": 2, "fcf": 1,
             "jorder": [0, 1, 2]},
    "L4.6": {"seq": [0, "J", 1, "J", 0], "nidem": 2, "fcf": 1,
             "jorder": [0, 1]},
}


def _homogeneous_radical(B: SuperAlgebra):
    """Radical basis split into homogeneous parts (J is a graded ideal)."""
    out = []
    for vec in B.wedderburn.radical_basis:
        for par in (0, 1):
            part = [c if B.parity[i] == par else ZERO for i, c in enumerate(vec)]
            if any(part):
                out.append(([frac(c) for c in part], par))
    return out


def _block_units(B: SuperAlgebra):
    units = []
    for block in B.wedderburn.blocks:
        even = [frac(c) for c in _block_unit(B, block)]
        odd = None
        if block.kind == "F_plus_cF":
            odd = [frac(c) for c in block.basis_coords[1]]
        units.append((block.kind, even, odd))
    return units


def _find_radicals(B, seq, idems, radical):
    """First tuple of homogeneous radical elements making the pattern
    product nonzero, or None. Complete by multilinearity in the J slots."""
    def dfs(i, current, chosen):
        if i == len(seq):
            return (chosen, current) if any(current) else None
        tok = seq[i]
        if tok == "J":
            for j, p in radical:
                nxt = j if current is None else B.multiply(current, j)
                if any(nxt):
                    hit = dfs(i + 1, nxt, chosen + [(j, p)])
                    if hit:
                        return hit
            return None
        e = idems[tok]
        nxt = e if current is None else B.multiply(current, e)
        if not any(nxt):
            return None
        return dfs(i + 1, nxt, chosen)

    return dfs(0, None, [])


def _short_circuits(B: SuperAlgebra):
    out = []
    for bi, block in enumerate(B.wedderburn.blocks):
        target = None
        if block.kind == "M_kl" and block.l > 0:
            target = "A_2"
        elif block.kind == "M_kl" and block.k >= 2:
            target = "A_1"
        elif block.kind == "M_k_plus_cM_k" and block.k >= 2:
            target = "A_1"
        if target:
            out.append(PatternMatch(
                lemma="simple-block", target=target,
                idempotents=[tuple(_block_unit(B, block))],
                radical_elements=[], nonzero_product=None,
                block_indices=(bi,)))
    return out


def _resolve_target(lemma, parities):
    """Catalog name the quotient lands on, given the j parities."""
    if lemma == "L4.1":
        return "A_3"
    if lemma == "L4.2":
        return "A_4"
    if lemma == "L4.3":
        return "A_5"
    if lemma == "L4.4":
        return "A_6"
    if lemma == "L4.5":
        return "A_7"
    return "A_8" if parities[0] == parities[1] else "A_9"


def detect_patterns(B: SuperAlgebra) -> list[PatternMatch]:
    """All pattern matches on B, one per (pattern, ordered block choice)."""
    if B.wedderburn is None:
        raise AlgebraError("detect_patterns needs Wedderburn data")
    rep = verify_wedderburn(B, B.wedderburn)
    if not rep.ok:
        raise AlgebraError("invalid Wedderburn data: " + "; ".join(rep.failures))
    matches = list(_short_circuits(B))
    units = _block_units(B)
    small = [i for i, (kind, _, _) in enumerate(units)
             if kind in ("F", "F_plus_cF")]
    radical = _homogeneous_radical(B)
    if not radical:
        return matches
    for lemma, spec in _PATTERNS.items():
        for combo in permutations(small, spec["nidem"]):
            if spec["fcf"] is not None and \
                    units[combo[spec["fcf"]]][0] != "F_plus_cF":
                continue
            idems = [units[b][1] for b in combo]
            hit = _find_radicals(B, spec["seq"], idems, radical)
            if hit is None:
                continue
            chosen, product = hit
            js = [None] * len(chosen)
            for slot, j in zip(spec["jorder"], chosen):
                js[slot] = j
            matches.append(PatternMatch(
                lemma=lemma,
                target=_resolve_target(lemma, [p for _, p in js]),
                idempotents=[tuple(e) for e in idems],
                radical_elements=[(tuple(v), p) for v, p in js],
                nonzero_product=tuple(product),
                block_indices=combo))
    return matches


# -- realization ----------------------------------------------------------------

# generator recipes: each generator is a product of pattern pieces.
# tokens: ("e", i) idempotent i, ("c", i) odd unit of idempotent i's block,
# ("j", t) radical element j_{t+1}.
_GENS = {
    "L4.1": [[("e", 0)], [("e", 1)], [("e", 2)],
             [("e", 0), ("j", 0), ("e", 1)],
             [("e", 1), ("j", 1), ("e", 2)],
             [("e", 2), ("j", 2), ("e", 0)]],
    "L4.2": [[("e", 0)], [("e", 1)], [("e", 2)],
             [("j", 0), ("e", 0)],
             [("e", 0), ("j", 1), ("e", 1)],
             [("e", 1), ("j", 2), ("e", 2)],
             [("e", 2), ("j", 3)]],
    "L4.3": [[("e", 0)], [("e", 1)], [("c", 1)],
             [("e", 0), ("j", 0), ("e", 1)],
             [("e", 1), ("j", 1), ("e", 0)]],
    "L4.4": [[("e", 0)], [("e", 1)], [("c", 1)],
             [("j", 0), ("e", 0)],
             [("e", 0), ("j", 1), ("e", 1)],
             [("e", 1), ("j", 2)]],
    "L4.5": [[("e", 0)], [("e", 1)], [("c", 1)],
             [("j", 0), ("e", 1)],
             [("e", 1), ("j", 1), ("e", 0)],
             [("e", 0), ("j", 2)]],
    "L4.6": [[("e", 0)], [("e", 1)], [("c", 1)],
             [("e", 0), ("j", 0), ("e", 1)],
             [("e", 1), ("j", 1), ("e", 0)]],
}

# coset bases, as products of generators (indices into the lists above)
_WORDS = {
    "L4.1": [[0], [1], [2], [3], [4], [5], [3, 4], [4, 5], [3, 4, 5]],
    "L4.2": [[0], [1], [2], [3], [4], [5], [6], [3, 4], [4, 5], [5, 6],
             [3, 4, 5], [4, 5, 6], [3, 4, 5, 6]],
    "L4.3": [[0], [1], [2], [3], [4], [3, 2], [2, 4], [4, 3], [2, 4, 3]],
    "L4.4": [[0], [1], [2], [3], [4], [5], [3, 4], [3, 4, 2], [3, 4, 5],
             [4, 2], [4, 5], [2, 5]],
    "L4.5": [[0], [1], [2], [3], [4], [5], [3, 2], [3, 4], [2, 4],
             [4, 5], [2, 4, 5], [3, 4, 5]],
    "L4.6": [[0], [1], [2], [3], [4], [3, 2], [2, 4], [3, 4]],
}

# explicitly listed kernel-ideal generators, same word encoding; patterns
# L4.4/L4.5 state no list, so only the computed kernel is available there.
_KERNEL_WORDS = {
    "L4.1": [[5, 3]],
    "L4.2": [[6, 0], [6, 1], [6, 2], [6, 3], [2, 3], [1, 3], [0, 3]],
    "L4.3": [[3, 4], [3, 2, 4]],
    "L4.4": None,
    "L4.5": None,
    "L4.6": [[4, 3], [3, 2, 4]],
}

_VARIANTS = {
    "L4.4": ["A_6", "A_6^1", "A_6^2", "A_6^3"],
    "L4.5": ["A_7", "A_7^1", "A_7^2", "A_7^3"],
    "L4.6": ["A_8", "A_9"],
}


def _slot_expr(i, j, parity):
    """Entry expression for slot (i,j) of a doubled (F+cF-valued) ambient."""
    if parity == 0:
        return f"e{2*i-1}{2*j-1}+e{2*i}{2*j}"
    return f"e{2*i-1}{2*j}+e{2*i}{2*j-1}"


def _variant_grading(name):
    from .catalog import catalog_entry
    return catalog_entry(name).definition["ambient"]["grading"]


def _target_images(lemma, parities):
    """(variant catalog name, generator image expressions)."""
    if lemma == "L4.1":
        return "A_3", ["e11+e44", "e22", "e33", "e12", "e23", "e34"]
    if lemma == "L4.2":
        return "A_4", ["e22", "e33", "e44", "e12", "e23", "e34", "e45"]
    if lemma == "L4.3":
        p1, p2 = parities
        return "A_5", ["e33+e44", "e11+e22+e55+e66", "e12+e21+e56+e65",
                       _slot_expr(2, 3, p1), _slot_expr(1, 2, p2)]
    if lemma == "L4.4":
        p1, p2, p3 = parities
        for name in _VARIANTS[lemma]:
            g = _variant_grading(name)
            if g[1] != p1:
                continue
            for k in (3, 4):
                if (g[1] + g[k - 1]) % 2 == p2 and (g[k - 1] + g[4]) % 2 == p3:
                    return name, ["e22", "e33+e44", "e34+e43",
                                  "e12", f"e2{k}", f"e{k}5"]
    if lemma == "L4.5":
        p1, p2, p3 = parities
        for name in _VARIANTS[lemma]:
            g = _variant_grading(name)
            for k in (2, 3):
                if g[k - 1] == p1 and (g[k - 1] + g[3]) % 2 == p2 \
                        and (g[3] + g[4]) % 2 == p3:
                    return name, ["e44", "e22+e33", "e23+e32",
                                  f"e1{k}", f"e{k}4", "e45"]
    if lemma == "L4.6":
        p1, p2 = parities
        for name in _VARIANTS[lemma]:
            g = _variant_grading(name)
            for k in (2, 3):
                if g[k - 1] == p1 and (g[k - 1] + g[3]) % 2 == p2:
                    return name, ["e11+e44", "e22+e33", "e23+e32",
                                  f"e1{k}", f"e{k}4"]
    raise AlgebraError(f"no target variant fits parities {parities} for {lemma}")


def _build_generators(B, lemma, match):
    units = _block_units(B)
    gens = []
    for recipe in _GENS[lemma]:
        vec = None
        for kind, idx in recipe:
            if kind == "e":
                piece = list(match.idempotents[idx])
            elif kind == "c":
                odd = units[match.block_indices[idx]][2]
                if odd is None:
                    raise AlgebraError("pattern needs an F+cF block odd unit")
                piece = odd
            else:
                piece = list(match.radical_elements[idx][0])
            vec = piece if vec is None else B.multiply(vec, piece)
        gens.append([frac(c) for c in vec])
    return gens


def _span_closure(mult, rows):
    """rref basis of the subalgebra span generated by the given vectors."""
    basis, _ = linalg.rref([list(r) for r in rows])
    while True:
        new = []
        for u in basis:
            for v in basis:
                w = mult(u, v)
                if any(w):
                    new.append(w)
        bigger, _ = linalg.rref(basis + new)
        if len(bigger) == len(basis):
            return bigger
        basis = bigger


def _ideal_closure(B, span_basis, gens):
    """Two-sided ideal generated by gens inside the subalgebra with the
    given basis (gens assumed inside it)."""
    ideal, _ = linalg.rref([list(g) for g in gens])
    while True:
        new = []
        for u in ideal:
            for b in span_basis:
                for w in (B.multiply(u, b), B.multiply(b, u)):
                    if any(w):
                        new.append(w)
        bigger, _ = linalg.rref(ideal + new)
        if len(bigger) == len(ideal):
            return ideal
        ideal = bigger


def _word_product(mult, gens, word):
    vec = list(gens[word[0]])
    for idx in word[1:]:
        vec = mult(vec, gens[idx])
    return vec


def _quotient_algebra(T, taus, parities, name):
    """Superalgebra on the coset basis: structure transported from T
    through the tau coordinates, grading inherited from Bbar."""
    cols = [list(t) for t in taus]
    structure = {}
    for a in range(len(taus)):
        for b in range(len(taus)):
            prod = T.multiply(taus[a], taus[b])
            coeffs = linalg.solve([[cols[t][i] for t in range(len(taus))]
                                   for i in range(T.dim)], prod)
            if coeffs is None:
                raise AlgebraError("coset basis does not close under product")
            out = {k: c for k, c in enumerate(coeffs) if c}
            if out:
                structure[(a, b)] = out
    Q = SuperAlgebra(name=name, dim=len(taus),
                     basis_labels=[f"w{t+1}" for t in range(len(taus))],
                     structure=structure, parity=tuple(parities))
    Q.validate()
    return Q


def _graded_basis(B, rows):
    """Parity-blocked basis of a graded subspace (even vectors first)."""
    split = {0: [], 1: []}
    for v in rows:
        for par in (0, 1):
            part = [c if B.parity[i] == par else ZERO
                    for i, c in enumerate(v)]
            if any(part):
                split[par].append(part)
    out = []
    for par in (0, 1):
        if split[par]:
            out.extend(linalg.rref(split[par])[0])
    return out


def _restricted_algebra(B, basis, name):
    """B's multiplication transported to the span of the given basis."""
    amb = [[row[i] for row in basis] for i in range(B.dim)]
    structure = {}
    parity = []
    for vec in basis:
        pars = {B.parity[i] for i, c in enumerate(vec) if c}
        parity.append(pars.pop() if len(pars) == 1 else 0)
    for a in range(len(basis)):
        for b in range(len(basis)):
            prod = B.multiply(basis[a], basis[b])
            coeffs = linalg.solve(amb, prod)
            if coeffs is None:
                raise AlgebraError("span is not multiplicatively closed")
            out = {k: c for k, c in enumerate(coeffs) if c}
            if out:
                structure[(a, b)] = out
    S = SuperAlgebra(name=name, dim=len(basis),
                     basis_labels=[f"s{t+1}" for t in range(len(basis))],
                     structure=structure, parity=tuple(parity))
    S.validate()
    return S


def realize_pattern(B: SuperAlgebra, match: PatternMatch, id_degrees=(1, 2, 3, 4)):
    """(subalgebra Bbar, quotient Bbar/I, verification report dict).

    id_degrees are the degrees at which the quotient envelope's multilinear
    identity space is compared exactly against the target's; pass () to skip.
    """
    if match.lemma == "simple-block":
        raise AlgebraError("simple-block matches have no pattern realization")
    from .catalog import catalog_algebra
    lemma = match.lemma
    checks = {}
    parities = [p for _, p in match.radical_elements]
    variant, image_exprs = _target_images(lemma, parities)
    T, _ = catalog_algebra(variant)
    gens = _build_generators(B, lemma, match)
    images = [[frac(c) for c in T.vector_from_expr(e)] for e in image_exprs]

    nB, nT = B.dim, T.dim
    def pair_mult(u, v):
        left = B.multiply(u[:nB], v[:nB])
        right = T.multiply(u[nB:], v[nB:])
        return list(left) + list(right)

    pairs = [g + im for g, im in zip(gens, images)]
    P = _span_closure(pair_mult, pairs)
    bbar = _graded_basis(B, [row[:nB] for row in P])
    image_span = [r for r in linalg.rref([row[nB:] for row in P])[0]]
    checks["map_well_defined"] = len(bbar) == len(P)
    checks["map_surjective"] = len(image_span) == nT

    # kernel = B-parts of pair combinations with zero T-part
    combos = linalg.nullspace([[P[r][nB + c] for r in range(len(P))]
                               for c in range(nT)], ncols=len(P))
    kernel = []
    for combo in combos:
        vec = [sum(combo[r] * P[r][i] for r in range(len(P)))
               for i in range(nB)]
        if any(vec):
            kernel.append(vec)
    kernel, _ = linalg.rref(kernel) if kernel else ([], ())
    checks["dim_subalgebra"] = len(bbar)
    checks["dim_kernel"] = len(kernel)

    words = _WORDS[lemma]
    basis_elems = [_word_product(B.multiply, gens, w) for w in words]
    taus = [_word_product(T.multiply, [im for im in images], w) for w in words]
    checks["coset_count_matches_target"] = len(words) == nT
    checks["coset_images_independent"] = linalg.rank(
        [list(t) for t in taus]) == len(words)
    checks["coset_basis_independent_mod_kernel"] = linalg.rank(
        [list(v) for v in kernel] + [list(b) for b in basis_elems]) \
        == len(kernel) + len(words)
    checks["coset_basis_spans"] = len(kernel) + len(words) == len(bbar)

    kw = _KERNEL_WORDS[lemma]
    if kw is not None:
        kgens = [_word_product(B.multiply, gens, w) for w in kw]
        kgens = [g for g in kgens if any(g)]
        ideal = _ideal_closure(B, bbar, kgens) if kgens else []
        kernel_l = [list(v) for v in kernel]
        if not kernel_l and not ideal:
            checks["kernel_generators_match"] = True
        else:
            checks["kernel_generators_match"] = bool(kernel_l) and \
                bool(ideal) and linalg.span_equal(ideal, kernel_l)

    # grading: coset representatives must be homogeneous, with parities
    # matching the target variant's grading
    qpar = []
    homog = True
    for b, t in zip(basis_elems, taus):
        pb = {B.parity[i] for i, c in enumerate(b) if c}
        pt = {T.parity[i] for i, c in enumerate(t) if c}
        if len(pb) != 1 or pb != pt:
            homog = False
            qpar.append(0)
        else:
            qpar.append(pb.pop())
    checks["grading_matches_target"] = homog

    quotient = None
    if all(checks.get(k) for k in ("map_well_defined", "map_surjective",
                                   "coset_images_independent",
                                   "coset_basis_spans")):
        quotient = _quotient_algebra(T, taus, qpar, f"{B.name}/{lemma}")

    if quotient is not None and id_degrees:
        from .codim import identity_space
        from .catalog import catalog_target
        from .grassmann import EnvelopeContext
        tgt = catalog_target(match.target)
        qt = EnvelopeContext(quotient)
        same = True
        for n in id_degrees:
            fq = identity_space(qt, n, mode="exact").basis
            ft = identity_space(tgt, n, mode="exact").basis
            if len(fq) != len(ft) or (fq and not linalg.span_equal(
                    [list(v) for v in fq], [list(v) for v in ft])):
                same = False
                break
        checks["identity_spaces_match"] = same

    subalgebra = _restricted_algebra(B, bbar, f"{B.name}|{lemma}")
    report = {"lemma": lemma, "target": match.target, "variant": variant,
              "checks": checks, "subalgebra_basis": bbar,
              "kernel_basis": kernel,
              "ok": all(v for v in checks.values() if isinstance(v, bool))}
    return subalgebra, quotient, report


def certify_delta_gt_two(B: SuperAlgebra) -> WitnessReport:
    """Certify exp^delta(G(B)) > 2 through a pattern match, when one exists.

    "no witness found" is not a proof of exp^delta <= 2; the report then
    carries the admissible-subalgebra bounds instead.
    """
    from .exponents import delta_exponent_bounds
    matches = detect_patterns(B)
    if matches:
        best = matches[0]
        realization = None
        checks = []
        if best.lemma != "simple-block":
            _, _, rep = realize_pattern(B, best)
            realization = rep
            checks = [k for k, v in rep["checks"].items() if v is True]
        return WitnessReport(
            algebra=B.name, verdict="certified", matches=matches,
            realization=realization, checks_passed=checks)
    bounds = delta_exponent_bounds(B)
    return WitnessReport(
        algebra=B.name, verdict="no witness found", matches=[],
        delta_bounds=(bounds.delta_lower, bounds.delta_upper))
