"""The canonical square-free monomial attached to a pair v <= w.

For v <= w in I(d,2d) there is exactly one way to pair the rows w \\ v
with the columns v \\ w into grid points (r,c) with r > c such that for
any two pairs with r_i < r_j, either c_j < c_i or r_i < c_j.  Replacing
the columns by the rows then recovers w.  The monomial has one point per
unit of |w \\ v| and w is the least index set dominating it.
"""

from __future__ import annotations

from itertools import permutations

from .grid import GridMonomial, Point, VGrid
from .poset import IndexSet


def _pairing_ok(pairs: list[Point]) -> bool:
    for i, (ri, ci) in enumerate(pairs):
        if ri <= ci:
            return False
        for rj, cj in pairs:
            if ri < rj and not (cj < ci or ri < cj):
                return False
    return True


def _rows_cols(v: IndexSet, w: IndexSet) -> tuple[list[int], list[int]]:
    if v.n != 2 * v.d:
        raise ValueError(f"need index sets in I(d,2d), got n={v.n}, d={v.d}")
    if not v.leq(w):
        raise ValueError(f"need v <= w, got v={v}, w={w}")
    vs, ws = set(v.entries), set(w.entries)
    return sorted(ws - vs), sorted(vs - ws)


def monw_points(v: IndexSet, w: IndexSet) -> tuple[Point, ...]:
    """Fast construction by backtracking: rows ascending, trying the largest
    free column first.  Differentially tested against `monw_points_exhaustive`.
    """
    rows, cols = _rows_cols(v, w)

    def place(i: int, chosen: list[Point], free: list[int]):
        if i == len(rows):
            return tuple(chosen)
        r = rows[i]
        for c in reversed(free):
            if c >= r:
                continue
            # rows are processed in increasing order, so the pair condition
            # only needs checking against already placed points
            if all(c < cp or rp < c for rp, cp in chosen):
                rest = [x for x in free if x != c]
                got = place(i + 1, chosen + [(r, c)], rest)
                if got is not None:
                    return got
        return None

    got = place(0, [], cols)
    if got is None:
        raise AssertionError(f"no valid pairing for v={v}, w={w}")
    assert _pairing_ok(list(got)), f"backtracking produced an invalid pairing {got}"
    return tuple(sorted(got))


def monw_points_exhaustive(v: IndexSet, w: IndexSet) -> tuple[Point, ...]:
    """Reference construction: search all bijections rows <-> columns and
    assert exactly one satisfies the pairing conditions."""
    rows, cols = _rows_cols(v, w)
    hits = []
    for perm in permutations(cols):
        pairs = list(zip(rows, perm))
        if _pairing_ok(pairs):
            hits.append(tuple(sorted(pairs)))
    if len(hits) != 1:
        raise AssertionError(
            f"expected exactly one valid pairing for v={v}, w={w}, found {len(hits)}"
        )
    return hits[0]


def monw(v: IndexSet, w: IndexSet) -> GridMonomial:
    """The canonical monomial as a square-free GridMonomial on pos_all."""
    grid = VGrid(v)
    return GridMonomial.from_points(grid, monw_points(v, w), "pos_all")
