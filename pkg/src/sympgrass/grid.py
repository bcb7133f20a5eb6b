"""The grid attached to a base point v, chains, and domination.

Grid points are bare (row, column) tuples with row not in v and column
in v.  Three ground sets matter:

* ``roots``   -- points with row <= column*, where j* = 2d+1-j.  These
  index the coordinates of the isotropic affine patch at v.
* ``pos``     -- roots with row > column ("positive" staircase part).
* ``pos_all`` -- every point with row > column, no staircase cut.  The
  type-A grid that chains and the canonical monomial of `monw` live on.

A chain is a sequence of points with strictly decreasing rows and
strictly increasing columns.  Applying a chain to v replaces the chain's
columns by its rows; w dominates a monomial when every chain inside the
monomial's support applies to something componentwise below w.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poset import IndexSet, enumerate_isotropic, meet

Point = tuple[int, int]


class VGrid:
    """Ground sets of grid points for a fixed v in I(d,2d)."""

    def __init__(self, v: IndexSet):
        if v.n != 2 * v.d:
            raise ValueError(f"grid needs v in I(d,2d), got d={v.d}, n={v.n}")
        self.v = v
        self.d = v.d
        self.n = v.n
        vset = set(v.entries)
        self.rows = tuple(r for r in range(1, self.n + 1) if r not in vset)
        self.cols = v.entries
        star = lambda j: self.n + 1 - j
        self.roots = frozenset(
            (r, c) for r in self.rows for c in self.cols if r <= star(c)
        )
        self.pos_all = frozenset((r, c) for r in self.rows for c in self.cols if r > c)
        self.pos = self.roots & self.pos_all
        self.diag = frozenset(p for p in self.pos_all if p[0] == star(p[1]))

    def star(self, j: int) -> int:
        return self.n + 1 - j

    def mirror(self, p: Point) -> Point:
        """(r,c) -> (c*, r*); involution on pos_all, fixes the diagonal.

        Well defined on the grid only when v is isotropic (so that row and
        column sets swap under *).
        """
        self._require_isotropic()
        r, c = p
        return (self.star(c), self.star(r))

    def up(self, p: Point) -> Point:
        """p itself if row <= column*, else its mirror."""
        r, c = p
        return p if r <= self.star(c) else self.mirror(p)

    def down(self, p: Point) -> Point:
        """p itself if row >= column*, else its mirror."""
        r, c = p
        return p if r >= self.star(c) else self.mirror(p)

    def _require_isotropic(self):
        if not self.v.is_isotropic():
            raise ValueError(f"mirror needs isotropic v, got v={self.v}")

    def check_point(self, p: Point, ground: str = "pos_all"):
        gset = getattr(self, ground)
        if p not in gset:
            raise ValueError(f"point {p} not in {ground} of the grid at v={self.v}")


@dataclass(frozen=True)
class GridMonomial:
    """Multiset of grid points, canonically sorted, on a declared ground set."""

    grid: VGrid
    counts: tuple[tuple[Point, int], ...]
    ground: str = "pos_all"

    def __post_init__(self):
        if self.ground not in ("roots", "pos", "pos_all"):
            raise ValueError(f"unknown ground set {self.ground!r}")
        gset = getattr(self.grid, self.ground)
        seen = set()
        for p, m in self.counts:
            if p not in gset:
                raise ValueError(f"point {p} not in {self.ground} at v={self.grid.v}")
            if m < 1:
                raise ValueError(f"multiplicity of {p} must be >= 1, got {m}")
            if p in seen:
                raise ValueError(f"repeated support point {p}")
            seen.add(p)
        object.__setattr__(self, "counts", tuple(sorted(self.counts)))

    @classmethod
    def from_points(cls, grid: VGrid, points, ground: str = "pos_all") -> "GridMonomial":
        """Build from an iterable of points, accumulating multiplicities."""
        acc: dict[Point, int] = {}
        for p in points:
            acc[p] = acc.get(p, 0) + 1
        return cls(grid, tuple(sorted(acc.items())), ground)

    @property
    def support(self) -> frozenset[Point]:
        return frozenset(p for p, _ in self.counts)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.counts)

    def multiplicity(self, p: Point) -> int:
        return dict(self.counts).get(p, 0)

    def mirror(self) -> "GridMonomial":
        mirrored = tuple(sorted((self.grid.mirror(p), m) for p, m in self.counts))
        return GridMonomial(self.grid, mirrored, self.ground)

    def union(self, other: "GridMonomial") -> "GridMonomial":
        acc = dict(self.counts)
        for p, m in other.counts:
            acc[p] = acc.get(p, 0) + m
        return GridMonomial(self.grid, tuple(sorted(acc.items())), self.ground)

    def is_special(self) -> bool:
        """Mirror stable with even multiplicity on every diagonal point."""
        if self.mirror() != self:
            return False
        return all(m % 2 == 0 for p, m in self.counts if p in self.grid.diag)

    def __str__(self) -> str:
        if not self.counts:
            return "{}"
        parts = []
        for (r, c), m in self.counts:
            parts.append(f"({r},{c})" + (f"^{m}" if m > 1 else ""))
        return "{" + ", ".join(parts) + "}"

    def to_json(self) -> list[list[int]]:
        return [[r, c, m] for (r, c), m in self.counts]


def is_v_chain(points) -> bool:
    """True iff rows strictly decrease and columns strictly increase along the list."""
    pts = list(points)
    return all(
        a[0] > b[0] and a[1] < b[1] for a, b in zip(pts, pts[1:])
    )


def s_chain(v: IndexSet, chain) -> IndexSet:
    """Replace the chain's columns in v by its rows.

    The result is an element of I(d,2d); it need not be isotropic even
    when v is, so callers compare it in the ambient componentwise order.
    An empty chain returns v.
    """
    pts = list(chain)
    if not is_v_chain(pts):
        raise ValueError(f"not a chain: {pts}")
    entries = set(v.entries)
    for r, c in pts:
        if c not in entries:
            raise ValueError(f"chain column {c} not in v={v}")
        if r in entries:
            raise ValueError(f"chain row {r} already in v={v}")
        entries.discard(c)
        entries.add(r)
    return IndexSet(v.n, tuple(sorted(entries)))


def dominates_chain(w: IndexSet, v: IndexSet, chain) -> bool:
    return s_chain(v, chain).leq(w)


def _apply_point(entries: tuple[int, ...], p: Point) -> tuple[int, ...]:
    # replace column p[1] by row p[0] in a sorted tuple
    out = [x for x in entries if x != p[1]]
    r = p[0]
    lo, hi = 0, len(out)
    while lo < hi:
        mid = (lo + hi) // 2
        if out[mid] < r:
            lo = mid + 1
        else:
            hi = mid
    out.insert(lo, r)
    return tuple(out)


def _leq_tuple(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def dominates_support(w: IndexSet, v: IndexSet, support) -> bool:
    """Does w dominate every chain of distinct points of the support?

    Only points with row > column can sit in a chain, so the support may
    come from any ground set.  All chains are checked, not only maximal
    ones, with memoization on (last point, current index set).
    """
    pts = sorted(
        (p for p in support if p[0] > p[1]), key=lambda p: (-p[0], p[1])
    )
    wt = w.entries
    seen: set[tuple[int, tuple[int, ...]]] = set()

    def extend(idx: int, last: Point, state: tuple[int, ...]) -> bool:
        key = (idx, state)
        if key in seen:
            return True
        for k in range(idx, len(pts)):
            q = pts[k]
            if q[0] < last[0] and q[1] > last[1]:
                nxt = _apply_point(state, q)
                if not _leq_tuple(nxt, wt):
                    return False
                if not extend(k + 1, q, nxt):
                    return False
        seen.add(key)
        return True

    base = v.entries
    for i, p in enumerate(pts):
        state = _apply_point(base, p)
        if not _leq_tuple(state, wt):
            return False
        if not extend(i + 1, p, state):
            return False
    return True


def dominates_monomial(w: IndexSet, v: IndexSet, mon) -> bool:
    """Domination of a monomial; depends on the support only."""
    support = mon.support if isinstance(mon, GridMonomial) else frozenset(mon)
    return dominates_support(w, v, support)


def extension_dominated(w: IndexSet, v: IndexSet, face, p: Point) -> bool:
    """Given a dominated support `face`, is face + {p} still dominated?

    Checks exactly the chains through p: every chain above p combined
    with p and every chain below it.  Chains avoiding p were already
    verified for `face`.
    """
    if p[0] <= p[1]:
        return True
    wt = w.entries
    above = sorted(
        (q for q in face if q[0] > p[0] and q[1] < p[1]), key=lambda q: (-q[0], q[1])
    )
    below = sorted(
        (q for q in face if q[0] < p[0] and q[1] > p[1]), key=lambda q: (-q[0], q[1])
    )
    ok_below: set[tuple[int, tuple[int, ...]]] = set()
    ok_above: set[tuple[int, tuple[int, ...]]] = set()

    def extend_below(idx: int, last: Point, state: tuple[int, ...]) -> bool:
        key = (idx, state)
        if key in ok_below:
            return True
        for k in range(idx, len(below)):
            q = below[k]
            if q[0] < last[0] and q[1] > last[1]:
                nxt = _apply_point(state, q)
                if not _leq_tuple(nxt, wt):
                    return False
                if not extend_below(k + 1, q, nxt):
                    return False
        ok_below.add(key)
        return True

    def descend_above(idx: int, last, state: tuple[int, ...]) -> bool:
        # state covers the chain chosen so far among `above`; always try
        # closing with p, and every way of extending above first.
        key = (idx, state)
        if key in ok_above:
            return True
        closed = _apply_point(state, p)
        if not _leq_tuple(closed, wt):
            return False
        if not extend_below(0, p, closed):
            return False
        for k in range(idx, len(above)):
            q = above[k]
            if last is None or (q[0] < last[0] and q[1] > last[1]):
                nxt = _apply_point(state, q)
                # prefixes not through p are chains of `face`: already known
                # dominated, no need to retest them here.
                if not descend_above(k + 1, q, nxt):
                    return False
        ok_above.add(key)
        return True

    return descend_above(0, None, v.entries)


def dominator(v: IndexSet, mon) -> IndexSet:
    """Least isotropic w >= v dominating the monomial (brute force over I(d)).

    Candidates below v only matter for the empty monomial, whose value is
    v by convention; any dominator of a nonempty monomial lies above v
    already because single-point chains force it.
    """
    if not v.is_isotropic():
        raise ValueError(f"dominator needs isotropic v, got {v}")
    support = mon.support if isinstance(mon, GridMonomial) else frozenset(mon)
    dominating = [
        u
        for u in enumerate_isotropic(v.d)
        if v.leq(u) and dominates_support(u, v, support)
    ]
    best = dominating[0]
    for u in dominating[1:]:
        best = meet(best, u)
    assert best.is_isotropic(), f"meet of isotropic dominators left I(d): {best}"
    assert dominates_support(best, v, support), "meet of dominators fails to dominate"
    return best
