"""Hilbert function and multiplicity via the dominated-support complex.

The square-free w-dominated supports inside the staircase ground set
form a simplicial complex (domination is downward closed).  Its f-vector
determines the number of dominated monomials of each degree, hence the
Hilbert function of the tangent cone; the maximum faces give the
multiplicity, and the standard binomial transform gives the h-vector of
the Hilbert series.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .grid import VGrid, extension_dominated
from .poset import IndexSet


@dataclass(frozen=True)
class DominatedComplex:
    v: IndexSet
    w: IndexSet
    faces: tuple[frozenset, ...]
    f_vector: tuple[int, ...]

    @property
    def dimension(self) -> int:
        """Maximum face cardinality = Krull dimension of the tangent cone."""
        return len(self.f_vector) - 1

    @property
    def max_faces(self) -> tuple[frozenset, ...]:
        top = self.dimension
        return tuple(f for f in self.faces if len(f) == top)

    @property
    def multiplicity(self) -> int:
        return self.f_vector[-1]

    def hilbert_value(self, m: int) -> int:
        if m < 0:
            raise ValueError(f"degree must be >= 0, got {m}")
        if m == 0:
            return 1
        return sum(
            fi * comb(m - 1, i - 1) for i, fi in enumerate(self.f_vector) if i >= 1
        )

    def h_vector(self) -> tuple[int, ...]:
        dim = self.dimension
        h = [
            sum(
                (-1) ** (k - i) * comb(dim - i, k - i) * fi
                for i, fi in enumerate(self.f_vector)
                if i <= k
            )
            for k in range(dim + 1)
        ]
        while len(h) > 1 and h[-1] == 0:
            h.pop()
        return tuple(h)

    def hilbert_value_from_h(self, m: int) -> int:
        """Coefficient extraction from h(t) / (1-t)^dimension."""
        dim = self.dimension
        h = self.h_vector()
        if dim == 0:
            return h[0] if m == 0 else 0
        return sum(hk * comb(m - k + dim - 1, dim - 1) for k, hk in enumerate(h) if k <= m)


@lru_cache(maxsize=256)
def dominated_complex(v: IndexSet, w: IndexSet) -> DominatedComplex:
    """Census of all w-dominated square-free supports on the staircase grid.

    Depth-first over the points in a fixed order; a face is only extended
    through points that keep it dominated, which is sound because any
    subset of a dominated support is dominated.  Each extension is tested
    incrementally on the chains through the new point only.
    """
    if not v.is_isotropic():
        raise ValueError(f"need isotropic v, got {v}")
    if not w.is_isotropic():
        raise ValueError(f"need isotropic w, got {w}")
    if not v.leq(w):
        raise ValueError(f"need v <= w, got v={v}, w={w}")
    points = sorted(VGrid(v).roots)
    faces: list[frozenset] = []

    def grow(start: int, face: tuple):
        faces.append(frozenset(face))
        for k in range(start, len(points)):
            p = points[k]
            if extension_dominated(w, v, face, p):
                grow(k + 1, face + (p,))

    grow(0, ())
    top = max(len(f) for f in faces)
    fvec = [0] * (top + 1)
    for f in faces:
        fvec[len(f)] += 1
    return DominatedComplex(v, w, tuple(faces), tuple(fvec))


def hilbert_value(v: IndexSet, w: IndexSet, m: int) -> int:
    return dominated_complex(v, w).hilbert_value(m)


def hilbert_vector(v: IndexSet, w: IndexSet, max_degree: int) -> list[int]:
    cx = dominated_complex(v, w)
    return [cx.hilbert_value(m) for m in range(max_degree + 1)]


def multiplicity(v: IndexSet, w: IndexSet) -> int:
    return dominated_complex(v, w).multiplicity


def tangent_cone_dimension(v: IndexSet, w: IndexSet) -> int:
    return dominated_complex(v, w).dimension


def h_vector(v: IndexSet, w: IndexSet) -> tuple[int, ...]:
    return dominated_complex(v, w).h_vector()


def multiplicity_from_hilbert_polynomial(cx: DominatedComplex) -> int:
    """(dim-1)! times the leading coefficient of the Hilbert polynomial.

    The Hilbert function agrees with a polynomial of degree dim-1 at every
    m >= 1, so the (dim-1)-st finite difference is constant and equals the
    normalized leading coefficient.  A window of extra values checks both
    facts exactly.
    """
    dim = cx.dimension
    if dim == 0:
        return 1
    values = [cx.hilbert_value(m) for m in range(1, dim + 6)]
    diffs = values
    for _ in range(dim - 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    assert len(set(diffs)) == 1, f"nonconstant top difference {diffs}"
    higher = [b - a for a, b in zip(diffs, diffs[1:])]
    assert all(x == 0 for x in higher), f"Hilbert polynomial degree too high: {higher}"
    return diffs[0]
