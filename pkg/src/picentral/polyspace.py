"""Free-algebra polynomials: parsing, multilinearization, P_n machinery.

Words are tuples of 0-based variable indices. A multilinear polynomial of
degree n has every word equal to a permutation of (0,...,n-1); monomials of
P_n are indexed by the lexicographic rank of that permutation.

Expression grammar (EBNF):

    expr    = ["-"] term { ("+" | "-") term } ;
    term    = factor { factor } ;            (* juxtaposition = product *)
    factor  = atom [ "^" integer ] ;
    atom    = integer | variable | "(" expr ")"
            | "[" expr { "," expr } "]"      (* left-normed commutator *)
            | "St" integer ;
    variable = "x" integer ;

Long commutators are left-normed: [a,b,c] means [[a,b],c].
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import linalg

ZERO = Fraction(0)
ONE = Fraction(1)


class PolyError(ValueError):
    pass


def _clean(coeffs: dict) -> dict:
    return {w: c for w, c in coeffs.items() if c}


@dataclass
class GeneralPoly:
    """Element of the free associative algebra, sparse on words."""

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = _clean(self.coeffs)

    @staticmethod
    def variable(i: int) -> "GeneralPoly":
        return GeneralPoly({(i,): ONE})

    @staticmethod
    def scalar(c) -> "GeneralPoly":
        c = linalg.frac(c)
        return GeneralPoly({(): c} if c else {})

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, ZERO) + c
        return GeneralPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GeneralPoly({w: -c for w, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GeneralPoly.scalar(other)
        out: dict[tuple, Fraction] = {}
        for wa, ca in self.coeffs.items():
            for wb, cb in other.coeffs.items():
                w = wa + wb
                out[w] = out.get(w, ZERO) + ca * cb
        return GeneralPoly(out)

    def __pow__(self, k: int):
        if k < 1:
            raise PolyError("powers must be positive integers")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, GeneralPoly) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def variables(self) -> list[int]:
        vs = set()
        for w in self.coeffs:
            vs.update(w)
        return sorted(vs)

    def degree_vector(self, word) -> tuple:
        vs = self.variables()
        return tuple(word.count(v) for v in vs)

    def is_multilinear(self) -> bool:
        vs = self.variables()
        want = tuple(range(len(vs)))
        if tuple(vs) != want:
            return False
        return all(sorted(w) == list(want) for w in self.coeffs)

    def rename(self, mapping: dict) -> "GeneralPoly":
        return GeneralPoly({tuple(mapping[v] for v in w): c
                            for w, c in self.coeffs.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs):
            c = self.coeffs[w]
            mono = "".join(f"x{v+1}" for v in w) or "1"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def commutator(a: GeneralPoly, b: GeneralPoly) -> GeneralPoly:
    return a * b - b * a


def standard_poly(k: int) -> GeneralPoly:
    """St_k = sum over S_k of sgn(s) x_{s(1)}...x_{s(k)}."""
    out = {}
    for perm in permutations(range(k)):
        out[perm] = Fraction(_perm_sign(perm))
    return GeneralPoly(out)


def _perm_sign(perm) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
              if perm[i] > perm[j])
    return -1 if inv & 1 else 1


# -- parsing -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.toks = []
        pos = 0
        pat = re.compile(r"\s*(St\d+|x\d+|\d+|\*|\^|[-+()\[\],])")
        while pos < len(text):
            m = pat.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise PolyError(f"bad token at {text[pos:][:10]!r}")
                break
            self.toks.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, tok=None):
        t = self.peek()
        if t is None or (tok is not None and t != tok):
            raise PolyError(f"expected {tok!r}, got {t!r}")
        self.i += 1
        return t

    def parse(self) -> GeneralPoly:
        p = self.expr()
        if self.peek() is not None:
            raise PolyError(f"trailing input at {self.peek()!r}")
        return p

    def expr(self) -> GeneralPoly:
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        elif self.peek() == "+":
            self.take()
        p = self.term()
        if neg:
            p = -p
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p - q if op == "-" else p + q
        return p

    def term(self) -> GeneralPoly:
        p = self.factor()
        while True:
            t = self.peek()
            if t == "*":
                self.take()
                p = p * self.factor()
            elif t is not None and (t.startswith(("x", "St")) or t.isdigit()
                                    or t in ("(", "[")):
                p = p * self.factor()
            else:
                return p

    def factor(self) -> GeneralPoly:
        p = self.atom()
        if self.peek() == "^":
            self.take()
            k = self.take()
            if not k.isdigit():
                raise PolyError("power exponent must be an integer")
            p = p ** int(k)
        return p

    def atom(self) -> GeneralPoly:
        t = self.take()
        if t == "(":
            p = self.expr()
            self.take(")")
            return p
        if t == "[":
            args = [self.expr()]
            while self.peek() == ",":
                self.take()
                args.append(self.expr())
            self.take("]")
            if len(args) < 2:
                raise PolyError("commutator needs at least two arguments")
            p = args[0]
            for q in args[1:]:
                p = commutator(p, q)
            return p
        if t.startswith("St"):
            return standard_poly(int(t[2:]))
        if t.startswith("x"):
            idx = int(t[1:])
            if idx < 1:
                raise PolyError("variables are numbered from x1")
            return GeneralPoly.variable(idx - 1)
        if t.isdigit():
            return GeneralPoly.scalar(int(t))
        raise PolyError(f"unexpected token {t!r}")


def parse_poly(expr: str) -> GeneralPoly:
    return _Parser(expr).parse()


# -- multilinear polynomials ---------------------------------------------------

@dataclass
class MultilinearPoly:
    """Element of P_n: every word is a permutation of (0..n-1)."""

    n: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = _clean(self.coeffs)
        want = list(range(self.n))
        for w in self.coeffs:
            if sorted(w) != want:
                raise PolyError(f"word {w} is not a permutation of 0..{self.n-1}")

    @staticmethod
    def from_general(p: GeneralPoly) -> "MultilinearPoly":
        vs = p.variables()
        if tuple(vs) != tuple(range(len(vs))):
            p = p.rename({v: i for i, v in enumerate(vs)})
        return MultilinearPoly(len(vs), dict(p.coeffs))

    def to_general(self) -> GeneralPoly:
        return GeneralPoly(dict(self.coeffs))

    def words(self):
        return list(self.coeffs)

    def coefficient_vector(self):
        """Dense length-n! vector over the lex-ordered permutation basis."""
        vec = [ZERO] * _factorial(self.n)
        for w, c in self.coeffs.items():
            vec[perm_rank(w)] = c
        return vec

    def permute_variables(self, sigma) -> "MultilinearPoly":
        """Apply x_i -> x_{sigma(i)}."""
        return MultilinearPoly(
            self.n, {tuple(sigma[v] for v in w): c for w, c in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, MultilinearPoly)
                and self.n == other.n and self.coeffs == other.coeffs)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def perm_rank(perm) -> int:
    """Lexicographic rank of a permutation of 0..n-1 (Lehmer code)."""
    n = len(perm)
    rank = 0
    fact = _factorial(n - 1) if n else 1
    avail = list(range(n))
    for i, v in enumerate(perm):
        rank += avail.index(v) * fact
        avail.remove(v)
        if n - 1 - i:
            fact //= (n - 1 - i)
    return rank


def perm_unrank(rank: int, n: int):
    avail = list(range(n))
    fact = _factorial(n - 1) if n else 1
    out = []
    for i in range(n):
        q, rank = divmod(rank, fact)
        out.append(avail.pop(q))
        if n - 1 - i:
            fact //= (n - 1 - i)
    return tuple(out)


def multilinearize(f: GeneralPoly) -> list[MultilinearPoly]:
    """Full linearization of each multihomogeneous component.

    Over a characteristic-zero field, f is an identity iff every returned
    multilinear polynomial is.
    """
    comps: dict[tuple, dict] = {}
    vs = f.variables()
    for w, c in f.coeffs.items():
        dv = tuple(w.count(v) for v in vs)
        comps.setdefault(dv, {})[w] = c
    out = []
    for dv, coeffs in sorted(comps.items()):
        n = sum(dv)
        if n == 0:
            continue  # a scalar is an identity iff zero; zero terms are absent
        # fresh indices: variable vs[t] owns the block starting at offset[t]
        offset = []
        acc = 0
        for d in dv:
            offset.append(acc)
            acc += d
        lin: dict[tuple, Fraction] = {}
        for w, c in coeffs.items():
            _distribute(w, c, vs, dv, offset, lin)
        mp = MultilinearPoly(n, lin)
        if mp.coeffs:
            out.append(mp)
    return out


def _distribute(word, coef, vs, dv, offset, out):
    """Sum over all bijective assignments of fresh copies to occurrences."""
    var_pos = {v: [] for v in vs}
    for pos, v in enumerate(word):
        var_pos[v].append(pos)
    assign = [0] * len(word)

    def rec(t):
        if t == len(vs):
            out[tuple(assign)] = out.get(tuple(assign), ZERO) + coef
            return
        v = vs[t]
        positions = var_pos[v]
        fresh = list(range(offset[t], offset[t] + dv[t]))
        for perm in permutations(fresh):
            for pos, fi in zip(positions, perm):
                assign[pos] = fi
            rec(t + 1)
    rec(0)


# -- T-ideal multilinear spans ---------------------------------------------

def tideal_span_polys(generators, n: int, mode: str = "reduced"):
    """Yield a spanning family of P_n intersect the T-ideal of the generators.

    Elements are w0 * g(m_1,...,m_d) * w1 with the m_i multilinear monomials
    over disjoint variable sets and w0, w1 words on the leftover variables,
    everything together covering {x1..xn} exactly once. In reduced mode the
    border words w0, w1 are emitted in sorted variable order only, relying on
    closure of the span under variable permutations.
    """
    if mode not in ("reduced", "full"):
        raise PolyError(f"unknown span mode {mode!r}")
    gens: list[MultilinearPoly] = []
    for g in generators:
        if isinstance(g, str):
            g = parse_poly(g)
        if isinstance(g, GeneralPoly):
            gens.extend(multilinearize(g))
        else:
            gens.append(g)
    for g in gens:
        d = g.n
        if d > n or d == 0:
            continue
        yield from _span_for_generator(g, n, mode)


def _span_for_generator(g: MultilinearPoly, n: int, mode: str):
    d = g.n
    slots = d + 2  # 0..d-1: substitution monomials, d: left border, d+1: right
    assign = [0] * n

    def emit():
        groups = [[] for _ in range(slots)]
        for v in range(n):
            groups[assign[v]].append(v)
        if any(not groups[i] for i in range(d)):
            return
        left, right = groups[d], groups[d + 1]
        sub_orders = [permutations(groups[i]) for i in range(d)]
        for subs in _product_lists(sub_orders):
            if mode == "full":
                lefts = permutations(left) if left else [()]
                rights_src = right
            else:
                lefts = [tuple(left)]
                rights_src = None
            for w0 in lefts:
                rights = (permutations(right) if mode == "full" and right
                          else [tuple(right)])
                for w1 in rights:
                    coeffs = {}
                    for gw, c in g.coeffs.items():
                        word = tuple(w0) + tuple(
                            v for gv in gw for v in subs[gv]) + tuple(w1)
                        coeffs[word] = coeffs.get(word, ZERO) + c
                    mp = MultilinearPoly(n, coeffs)
                    if mp.coeffs:
                        yield mp

    def rec(v):
        if v == n:
            yield from emit()
            return
        for s in range(slots):
            assign[v] = s
            yield from rec(v + 1)

    yield from rec(0)


def _product_lists(iterables):
    pools = [list(it) for it in iterables]
    if not pools:
        yield []
        return
    idx = [0] * len(pools)
    while True:
        yield [pools[i][idx[i]] for i in range(len(pools))]
        for i in reversed(range(len(pools))):
            idx[i] += 1
            if idx[i] < len(pools[i]):
                break
            idx[i] = 0
        else:
            return


def tideal_multilinear_span(generators, n: int, mode: str = "reduced"):
    """Reduced exact basis (coefficient vectors over the P_n monomial basis)
    of P_n intersect the T-ideal of the generators. Exact; small n only."""
    rows = [p.coefficient_vector() for p in tideal_span_polys(generators, n, mode)]
    if not rows:
        return []
    basis, _ = linalg.rref(rows)
    return basis


def rewrite_check(n: int) -> dict:
    """Congruences modulo the multilinear consequences of [x1,x2,x3]x4.

    Checks that [x1,x2]x3x4 - x3[x1,x2]x4 (degree 4) and
    [x1,x2][x3,x4]x5 + [x1,x3][x2,x4]x5 (degree 5) lie in the span of the
    T-ideal consequences at their degree, for whichever fits n in {4, 5}.
    Also reports the membership value of [x1,x2]x3x4 - x3x4[x1,x2], which is
    computed rather than asserted.
    """
    if n not in (4, 5):
        raise PolyError("rewrite_check supports n in {4, 5}")
    span = tideal_multilinear_span(["[x1,x2,x3]x4"], n)
    report = {}

    def member(expr):
        p = parse_poly(expr)
        mls = multilinearize(p)
        if len(mls) != 1:
            raise PolyError("congruence expression is not multilinear")
        if mls[0].n != n:
            return None
        return linalg.in_span(span, mls[0].coefficient_vector())

    report["eq1"] = member("[x1,x2]x3x4 - x3[x1,x2]x4")
    report["eq2"] = member("[x1,x2][x3,x4]x5 + [x1,x3][x2,x4]x5")
    report["swap_both_sides"] = member("[x1,x2]x3x4 - x3x4[x1,x2]")
    report["ok"] = all(v for v in (report["eq1"], report["eq2"]) if v is not None)
    return report
