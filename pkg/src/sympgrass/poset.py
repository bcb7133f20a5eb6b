"""Index sets I(d,n), the isotropic subfamily I(d), and their involutions.

An index set is a strictly increasing tuple of d integers in [1..n],
compared componentwise (the Bruhat order on a Grassmannian).  For n = 2d
there are two order reversing involutions, `star` (entrywise j -> 2d+1-j)
and complementation, whose composite `sharp` is order preserving.  The
fixed points of `sharp` are the index sets containing exactly one of j,
2d+1-j for every j <= d; these index the T-fixed points of the
symplectic Grassmannian.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing tuple of integers in [1..n], ordered componentwise."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError(f"ambient size must be positive, got {self.n}")
        e = tuple(self.entries)
        object.__setattr__(self, "entries", e)
        if not e:
            raise ValueError("index set must be nonempty")
        if any(x < 1 or x > self.n for x in e):
            raise ValueError(f"entries {e} not contained in [1..{self.n}]")
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ValueError(f"entries {e} not strictly increasing")

    @property
    def d(self) -> int:
        return len(self.entries)

    def __contains__(self, x) -> bool:
        return x in self.entries

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.entries)

    def _check_comparable(self, other: "IndexSet"):
        if not isinstance(other, IndexSet):
            raise TypeError(f"cannot compare IndexSet with {type(other).__name__}")
        if self.n != other.n or self.d != other.d:
            raise ValueError(
                f"incomparable index sets: ({self.d} of [1..{self.n}]) vs "
                f"({other.d} of [1..{other.n}])"
            )

    def leq(self, other: "IndexSet") -> bool:
        self._check_comparable(other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __le__(self, other):
        return self.leq(other)

    def __ge__(self, other):
        return other.leq(self)

    def star(self) -> "IndexSet":
        """Entrywise n+1-j, resorted; order reversing involution (needs n = 2d)."""
        self._require_square()
        return IndexSet(self.n, tuple(sorted(self.n + 1 - x for x in self.entries)))

    def sharp(self) -> "IndexSet":
        """Complement of star(); order preserving involution (needs n = 2d)."""
        dual = set(self.star().entries)
        return IndexSet(self.n, tuple(x for x in range(1, self.n + 1) if x not in dual))

    def is_isotropic(self) -> bool:
        """True iff n = 2d and exactly one of j, 2d+1-j occurs for each j <= d."""
        if self.n != 2 * self.d:
            return False
        s = set(self.entries)
        return all((j in s) != (self.n + 1 - j in s) for j in range(1, self.d + 1))

    def _require_square(self):
        if self.n != 2 * self.d:
            raise ValueError(f"operation needs n = 2d, got d={self.d}, n={self.n}")


def parse_index_set(text: str, n: int) -> IndexSet:
    """Parse a comma separated ascending list such as "1,2,3,6,7"."""
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed index set {text!r}: expected comma separated integers")
    return IndexSet(n, entries)


def enumerate_index_sets(d: int, n: int) -> list[IndexSet]:
    """All C(n,d) index sets, lexicographically."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return [IndexSet(n, c) for c in combinations(range(1, n + 1), d)]


def enumerate_isotropic(d: int) -> list[IndexSet]:
    """The 2^d sharp-fixed index sets in I(d,2d), lexicographically.

    Built directly from the one binary choice (j vs 2d+1-j) per j <= d.
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    out = []
    for mask in range(1 << d):
        entries = sorted(
            (2 * d + 1 - j) if mask >> (j - 1) & 1 else j for j in range(1, d + 1)
        )
        out.append(IndexSet(2 * d, tuple(entries)))
    out.sort(key=lambda u: u.entries)
    return out


def leq(u: IndexSet, w: IndexSet) -> bool:
    return u.leq(w)


def join(u: IndexSet, w: IndexSet) -> IndexSet:
    """Least upper bound: componentwise max of the sorted entries."""
    u._check_comparable(w)
    return IndexSet(u.n, tuple(max(a, b) for a, b in zip(u.entries, w.entries)))


def meet(u: IndexSet, w: IndexSet) -> IndexSet:
    """Greatest lower bound: componentwise min of the sorted entries."""
    u._check_comparable(w)
    return IndexSet(u.n, tuple(min(a, b) for a, b in zip(u.entries, w.entries)))


def eps_degree(x: IndexSet) -> int:
    """Number of entries above d (distance from the minimal element 1..d)."""
    return sum(1 for e in x.entries if e > x.d)


def v_degree(x: IndexSet, v: IndexSet) -> int:
    """|x \\ v|, which equals |v \\ x| for index sets of equal size."""
    x._check_comparable(v)
    return len(set(x.entries) - set(v.entries))


def top_isotropic(d: int) -> IndexSet:
    """Largest element (d+1,...,2d) of the isotropic family."""
    return IndexSet(2 * d, tuple(range(d + 1, 2 * d + 1)))
