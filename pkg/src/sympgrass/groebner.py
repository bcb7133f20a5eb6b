"""Good pairs, the eight term orders, and initial-ideal certification.

An admissible pair (t, u) is good for (v, w) when u sits above v, t is
not below w, and the canonical monomial of the orbit representative
theta is an up-folded chain.  The minors of the good pairs generate the
tangent-cone ideal; under suitable term orders their initial terms are
exactly those chain monomials, which is certified here by counting:
the degree-m monomials avoiding every good chain monomial must be as
many as the w-dominated ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .grid import Point, VGrid, dominates_chain, is_v_chain, s_chain
from .hilbert import DominatedComplex, dominated_complex
from .monw import monw_points
from .plucker import Monomial, Polynomial, minor
from .poset import IndexSet
from .smt import AdmissiblePair, enumerate_admissible_pairs, pair_to_theta

# variable-order rules: (r,c) precedes (r',c') when its key is smaller
_ORDER_KEYS = {
    1: lambda p: (p[0], -p[1]),
    2: lambda p: (-p[1], p[0]),
    3: lambda p: (p[0], p[1]),
    4: lambda p: (-p[1], -p[0]),
    5: lambda p: (p[1], p[0]),
    6: lambda p: (-p[0], -p[1]),
    7: lambda p: (p[1], -p[0]),
    8: lambda p: (-p[0], p[1]),
}

SCHEMES = ("lex", "revlex")


class TermOrder:
    """One of the eight variable orders, graded, with lex or reverse-lex
    tie break.  The listed comparison rule is applied uniformly to every
    point of the staircase ground set."""

    def __init__(self, grid: VGrid, index: int, scheme: str):
        if index not in _ORDER_KEYS:
            raise ValueError(f"order index must be in 1..8, got {index}")
        if scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {scheme!r}")
        self.index = index
        self.scheme = scheme
        self.variables = sorted(grid.roots, key=_ORDER_KEYS[index])
        self._rank = {p: i for i, p in enumerate(self.variables)}

    def _exponents(self, m: Monomial) -> list[int]:
        vec = [0] * len(self.variables)
        for p, e in m:
            vec[self._rank[p]] = e
        return vec

    def greater(self, a: Monomial, b: Monomial) -> bool:
        da, db = sum(e for _, e in a), sum(e for _, e in b)
        if da != db:
            return da > db
        va, vb = self._exponents(a), self._exponents(b)
        if va == vb:
            return False
        if self.scheme == "lex":
            for x, y in zip(va, vb):
                if x != y:
                    return x > y
        else:
            for x, y in zip(reversed(va), reversed(vb)):
                if x != y:
                    return x < y
        return False

    def initial_term(self, f: Polynomial) -> tuple[int, Monomial]:
        if f.is_zero():
            raise ValueError("the zero polynomial has no initial term")
        best = None
        for m in f.terms:
            if best is None or self.greater(m, best):
                best = m
        return f.terms[best], best

    def describe(self) -> str:
        return f">{self.index} {self.scheme}"


@dataclass(frozen=True)
class GoodPair:
    pair: AdmissiblePair
    theta: IndexSet
    chain: tuple[Point, ...]  # the canonical monomial of theta, a v-chain


def good_pairs(v: IndexSet, w: IndexSet) -> list[GoodPair]:
    """All good admissible pairs for v <= w in I(d)."""
    if not (v.is_isotropic() and w.is_isotropic()):
        raise ValueError("good pairs need isotropic v and w")
    if not v.leq(w):
        raise ValueError(f"need v <= w, got v={v}, w={w}")
    grid = VGrid(v)
    out = []
    for pair in enumerate_admissible_pairs(v.d):
        t, u = pair.top, pair.bottom
        if not v.leq(u) or t.leq(w):
            continue
        theta, _ = pair_to_theta(pair)
        if not v.leq(theta):
            continue
        pts = monw_points(v, theta)
        if any(grid.up(p) != p for p in pts):
            continue
        chain = tuple(sorted(pts, key=lambda p: -p[0]))
        if not is_v_chain(chain):
            continue
        assert set(chain) <= grid.pos, f"good chain {chain} escapes the staircase"
        out.append(GoodPair(pair, theta, chain))
    return out


def chain_to_good_pair(v: IndexSet, w: IndexSet, chain) -> GoodPair:
    """Build the good pair whose chain monomial is the given non-dominated
    chain (points listed with decreasing rows)."""
    grid = VGrid(v)
    pts = tuple(chain)
    if not is_v_chain(pts):
        raise ValueError(f"not a chain: {pts}")
    for p in pts:
        grid.check_point(p, "pos")
    if dominates_chain(w, v, pts):
        raise ValueError(f"chain {pts} is dominated by w={w}")
    n, d = v.n, v.d
    star = lambda j: n + 1 - j
    rows = [r for r, _ in pts]
    cols = [c for _, c in pts]
    s = 0
    while s < len(rows) and rows[s] >= star(rows[s]):
        s += 1
    vset = set(v.entries)
    u_set = (vset | set(rows[:s])) - {star(r) for r in rows[:s]}
    t_set = (vset | {star(c) for c in cols} | set(rows[s:])) - (
        set(cols) | {star(r) for r in rows[s:]}
    )
    theta_set = (vset | set(rows)) - set(cols)
    u = IndexSet(n, tuple(sorted(u_set)))
    t = IndexSet(n, tuple(sorted(t_set)))
    theta = IndexSet(n, tuple(sorted(theta_set)))
    pair = AdmissiblePair(t, u)
    got_theta, _ = pair_to_theta(pair)
    assert got_theta == theta, f"theta mismatch: {got_theta} vs {theta}"
    assert tuple(sorted(monw_points(v, theta))) == tuple(sorted(pts)), (
        f"chain round trip failed for {pts}"
    )
    result = GoodPair(pair, theta, pts)
    hits = [g for g in good_pairs(v, w) if g.pair == pair]
    assert hits and hits[0].theta == theta, f"pair {pair} is not good for w={w}"
    return result


@dataclass
class CertificationReport:
    v: IndexSet
    w: IndexSet
    order: TermOrder
    good: list[GoodPair]
    violations: list[dict] = field(default_factory=list)
    per_degree: list[dict] = field(default_factory=list)
    counting_ok: bool = True

    @property
    def initial_terms_ok(self) -> bool:
        return not self.violations

    @property
    def ok(self) -> bool:
        return self.initial_terms_ok and self.counting_ok

    def to_json(self) -> dict:
        return {
            "v": str(self.v),
            "w": str(self.w),
            "order": self.order.index,
            "scheme": self.order.scheme,
            "good_pairs": [
                {
                    "top": str(g.pair.top),
                    "bottom": str(g.pair.bottom),
                    "theta": str(g.theta),
                    "chain": [list(p) for p in g.chain],
                }
                for g in self.good
            ],
            "violations": self.violations,
            "counting_ok": self.counting_ok,
            "per_degree": self.per_degree,
        }


def _square_free_monomial(points) -> Monomial:
    return tuple(sorted((p, 1) for p in points))


def complement_complex_f_vector(v: IndexSet, forbidden: list[frozenset]) -> list[int]:
    """f-vector of the supports containing none of the forbidden sets."""
    points = sorted(VGrid(v).roots)
    fvec = [0]

    def grow(start: int, face: frozenset):
        if len(face) >= len(fvec):
            fvec.append(0)
        fvec[len(face)] += 1
        for k in range(start, len(points)):
            p = points[k]
            nxt = face | {p}
            if all(not g <= nxt for g in forbidden):
                grow(k + 1, nxt)

    grow(0, frozenset())
    return fvec


def certify(
    v: IndexSet,
    w: IndexSet,
    order: TermOrder,
    max_degree: int = 4,
    complex_: DominatedComplex | None = None,
) -> CertificationReport:
    """Check initial terms of all good pairs and the avoidance count.

    The count of degree-m monomials divisible by no good chain monomial
    must equal the number of w-dominated degree-m monomials; this part
    depends only on the chain monomials, not on the order.
    """
    good = good_pairs(v, w)
    report = CertificationReport(v, w, order, good)
    for g in good:
        f = minor(v, g.theta)
        coeff, lead = order.initial_term(f)
        expected = _square_free_monomial(g.chain)
        mono_coeff = f.coefficient(expected)
        assert mono_coeff in (-1, 1), (
            f"chain monomial has coefficient {mono_coeff} in the minor of {g.theta}"
        )
        if lead != expected:
            report.violations.append(
                {
                    "top": str(g.pair.top),
                    "bottom": str(g.pair.bottom),
                    "theta": str(g.theta),
                    "expected": [list(p) for p in g.chain],
                    "got": [[list(p), e] for p, e in lead],
                    "coeff": coeff,
                }
            )
    cx = complex_ if complex_ is not None else dominated_complex(v, w)
    forbidden = [frozenset(g.chain) for g in good]
    fvec = complement_complex_f_vector(v, forbidden)
    for m in range(max_degree + 1):
        if m == 0:
            avoid = 1
        else:
            avoid = sum(fi * comb(m - 1, i - 1) for i, fi in enumerate(fvec) if i >= 1)
        dominated = cx.hilbert_value(m)
        report.per_degree.append(
            {"m": m, "avoiding": str(avoid), "dominated": str(dominated)}
        )
        if avoid != dominated:
            report.counting_ok = False
    return report


def find_initial_term_violation(order_index: int, scheme: str, max_d: int = 4):
    """Deterministic search for a (d, v, w, good pair) whose initial term
    is not its chain monomial under the given order."""
    from .poset import enumerate_isotropic

    for d in range(2, max_d + 1):
        iso = enumerate_isotropic(d)
        for v in iso:
            grid = VGrid(v)
            order = TermOrder(grid, order_index, scheme)
            for w in iso:
                if not v.leq(w):
                    continue
                for g in good_pairs(v, w):
                    f = minor(v, g.theta)
                    _, lead = order.initial_term(f)
                    if lead != _square_free_monomial(g.chain):
                        return {
                            "d": d,
                            "v": str(v),
                            "w": str(w),
                            "top": str(g.pair.top),
                            "bottom": str(g.pair.bottom),
                            "theta": str(g.theta),
                            "chain": [list(p) for p in g.chain],
                            "initial": [[list(p), e] for p, e in lead],
                        }
    return None
