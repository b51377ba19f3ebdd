"""Grassmann algebra models and the sign rule for envelope evaluations.

The envelope of a superalgebra B places even Grassmann coefficients on the
even part of B and odd ones on the odd part. Substituting homogeneous
tensors g_i (x) b_i into a multilinear monomial x_{s(1)}...x_{s(n)} gives

    (g_{s(1)}...g_{s(n)}) (x) (b_{s(1)}...b_{s(n)})
        = sign * (g_1...g_n) (x) (b_{s(1)}...b_{s(n)})

where sign counts, mod 2, the inversions of s among the positions whose
substituted value is odd. Vanishing of a multilinear polynomial on the
envelope therefore reduces to vanishing of all these signed B-products,
checked over basis tuples of B. This module has the slow exact versions;
`kernels` has the fast ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import SuperAlgebra, supercenter_component

ZERO = Fraction(0)
ONE = Fraction(1)


def grassmann_sign(word, value_parities) -> int:
    """+1/-1 sign for reordering x_{s(1)}..x_{s(n)} to x_1..x_n when the
    value of variable v has parity value_parities[v]. word holds 0-based
    variable indices in monomial order."""
    odd = [v for v in word if value_parities[v]]
    inv = 0
    for r in range(len(odd)):
        for s in range(r + 1, len(odd)):
            if odd[r] > odd[s]:
                inv += 1
    return -1 if inv & 1 else 1


def signed_monomial_value(B: SuperAlgebra, word, basis_tuple):
    """Exact signed value of one monomial at basis elements of B.

    word: 0-based variable indices; basis_tuple[v] is the basis index of B
    substituted for variable v.
    """
    pars = [B.parity[basis_tuple[v]] for v in range(len(basis_tuple))]
    sign = grassmann_sign(word, pars)
    vec = B.basis_vector(basis_tuple[word[0]])
    for v in word[1:]:
        vec = B.multiply(vec, B.basis_vector(basis_tuple[v]))
    if sign < 0:
        vec = [-c for c in vec]
    return vec


def signed_value(B: SuperAlgebra, words, coeffs, basis_tuple):
    """Signed value of a multilinear polynomial sum(coeffs[m] * words[m])."""
    out = [ZERO] * B.dim
    for word, c in zip(words, coeffs):
        val = signed_monomial_value(B, word, basis_tuple)
        for k in range(B.dim):
            out[k] += c * val[k]
    return out


@dataclass
class EnvelopeContext:
    """Marks a computation target as the Grassmann envelope of `base`.

    truncation is the number of Grassmann generators needed by truncated
    models (degree-n multilinear work needs at least n); sign-rule
    computations ignore it.
    """

    base: object               # SuperAlgebra
    truncation: int = 0
    mode: str = "sign_rule"    # or "truncated_model"


def sign_rule_evaluate(ctx: EnvelopeContext, poly, parities, elements):
    """Evaluate a multilinear polynomial at homogeneous tensors g_i (x) v_i.

    elements[i] is the coordinate vector v_i in the base algebra and
    parities[i] the Grassmann parity of g_i (which must equal the parity of
    v_i). Returns the base-algebra coordinate vector of the common tensor
    factor, per the sign rule.
    """
    B = ctx.base
    for i, v in enumerate(elements):
        if any(c and B.parity[k] != parities[i] for k, c in enumerate(v)):
            raise ValueError(f"element {i} is not homogeneous of its parity")
    out = [ZERO] * B.dim
    for word, c in poly.coeffs.items():
        odd = [v for v in word if parities[v]]
        inv = sum(1 for a in range(len(odd)) for b in range(a + 1, len(odd))
                  if odd[a] > odd[b])
        val = list(elements[word[0]])
        for v in word[1:]:
            val = B.multiply(val, elements[v])
        sign = -1 if inv & 1 else 1
        for k in range(B.dim):
            out[k] += sign * c * val[k]
    return out


def envelope_center_test(ctx: EnvelopeContext, value_parity: int, value) -> bool:
    """Is g (x) value central in G(base), for g of the given parity?"""
    return envelope_central_factor(ctx.base, value, value_parity)


# -- truncated Grassmann algebra ------------------------------------------

def build_truncated_grassmann(k: int) -> "GrassmannTruncated":
    if k < 1:
        raise ValueError("need at least one generator")
    return GrassmannTruncated(k)


@dataclass
class GrassmannTruncated:
    """Grassmann algebra on ngens anticommuting generators, as subsets
    (bitmasks) of generators. Elements are {mask: Fraction} dicts."""

    ngens: int

    def gen(self, i: int) -> dict:
        if not 0 <= i < self.ngens:
            raise ValueError("generator index out of range")
        return {1 << i: ONE}

    def one(self) -> dict:
        return {0: ONE}

    @staticmethod
    def mask_parity(mask: int) -> int:
        return bin(mask).count("1") & 1

    @staticmethod
    def _merge_sign(a: int, b: int) -> int:
        """Sign of e_A * e_B for disjoint masks: (-1)^#{(i,j): i in A, j in B, i>j}."""
        inv = 0
        rest = a
        while rest:
            low = rest & -rest
            inv += bin(b & (low - 1)).count("1")
            rest ^= low
        return -1 if inv & 1 else 1

    def multiply(self, u: dict, v: dict) -> dict:
        out: dict[int, Fraction] = {}
        for a, ca in u.items():
            for b, cb in v.items():
                if a & b:
                    continue
                c = ca * cb * self._merge_sign(a, b)
                m = a | b
                out[m] = out.get(m, ZERO) + c
        return {m: c for m, c in out.items() if c}

    def component(self, u: dict, parity: int) -> dict:
        return {m: c for m, c in u.items() if self.mask_parity(m) == parity}

    def random_homogeneous(self, rng, parity: int) -> dict:
        """Random small-integer element of G^(parity), nonzero."""
        while True:
            out = {}
            for m in range(1 << self.ngens):
                if self.mask_parity(m) == parity:
                    c = rng.randint(-3, 3)
                    if c:
                        out[m] = Fraction(c)
            if out:
                return out


def build_envelope_model(B: SuperAlgebra, ngens: int) -> SuperAlgebra:
    """The envelope of B over a truncated Grassmann algebra, as an honest
    structure-constant algebra. Basis: e_S (x) b_i with |S| = parity(b_i)
    mod 2. Slow and exponential in ngens; oracle use only."""
    G = GrassmannTruncated(ngens)
    basis = [(m, i) for m in range(1 << ngens) for i in range(B.dim)
             if G.mask_parity(m) == B.parity[i]]
    index = {be: t for t, be in enumerate(basis)}
    labels = [f"g{m:0{ngens}b}*{B.basis_labels[i]}" for m, i in basis]
    structure = {}
    for a, (ma, ia) in enumerate(basis):
        for b, (mb, ib) in enumerate(basis):
            if ma & mb:
                continue
            prod = B.structure.get((ia, ib))
            if not prod:
                continue
            sign = G._merge_sign(ma, mb)
            out = {index[(ma | mb, k)]: sign * c for k, c in prod.items()}
            if out:
                structure[(a, b)] = out
    return SuperAlgebra(
        name=f"G({B.name})[{ngens}]", dim=len(basis), basis_labels=labels,
        structure=structure, parity=(0,) * len(basis))


def envelope_element(model: SuperAlgebra, B: SuperAlgebra, gmask: int, bidx: int):
    """Coordinate vector of e_gmask (x) b_bidx inside an envelope model."""
    lbl = None
    ngens = len(model.basis_labels[0].split("*")[0]) - 1
    lbl = f"g{gmask:0{ngens}b}*{B.basis_labels[bidx]}"
    vec = [ZERO] * model.dim
    vec[model.basis_labels.index(lbl)] = ONE
    return vec


# -- envelope centers --------------------------------------------------------

def envelope_center(B: SuperAlgebra) -> dict:
    """Center of the envelope G(B), described by its tensor factors.

    Returns {0: even_part_basis, 1: odd_part_basis}: the center is
    G^(0) (x) span(even_part_basis) + G^(1) (x) span(odd_part_basis),
    where parity-q factors v satisfy v b = (-1)^(q r) b v for all
    homogeneous b in B of parity r.
    """
    return {q: supercenter_component(B, q) for q in (0, 1)}


def envelope_central_factor(B: SuperAlgebra, vec, q: int) -> bool:
    """Is g (x) vec central in G(B) for g of parity q? vec must lie in B^(q)."""
    if any(c and B.parity[i] != q for i, c in enumerate(vec)):
        return False
    comp = supercenter_component(B, q)
    from . import linalg
    return linalg.in_span([list(v) for v in comp], list(vec))
