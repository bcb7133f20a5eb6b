"""Exact minors of the anti-diagonal-symmetric affine patch matrix.

The affine patch of the symplectic Grassmannian at v is coordinatized by
variables X_(r,c) indexed by the staircase ground set of the grid at v.
The patch matrix is 2d x d: the rows indexed by v form an identity
block, and the entry in row r (not in v), column c = v_j is +/-X_beta,
where beta is (r,c) folded into the staircase by the anti-diagonal
mirror when r > c*, and the sign is negative exactly on the first d
rows.  Index-set minors of this matrix are exact integer polynomials;
taking the rows of theta gives the local equation attached to theta.
"""

from __future__ import annotations

from .grid import Point, VGrid
from .poset import IndexSet

# a monomial is a sorted tuple of ((r,c), exponent); a polynomial maps
# monomials to nonzero integer coefficients
Monomial = tuple[tuple[Point, int], ...]


class Polynomial:
    """Immutable multivariate polynomial with exact integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        clean = {m: c for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls({})

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, p: Point, coeff: int = 1) -> "Polynomial":
        return cls({((p, 1),): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mul_monomials(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(acc)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial({m: c * cm for m, cm in self.terms.items()})

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e for _, e in m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = "·".join(
                f"X({r},{cc})" + (f"^{e}" if e > 1 else "") for (r, cc), e in m
            )
            if not body:
                parts.append(f"{c:+d}")
            elif c == 1:
                parts.append(f"+{body}")
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c:+d}·{body}")
        return " ".join(parts)

    def to_json(self) -> list:
        return [
            {"coeff": str(c), "monomial": [[r, cc, e] for (r, cc), e in m]}
            for m, c in self.sorted_terms()
        ]


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    acc: dict[Point, int] = dict(a)
    for p, e in b:
        acc[p] = acc.get(p, 0) + e
    return tuple(sorted(acc.items()))


def monomial_from_points(points) -> Monomial:
    acc: dict[Point, int] = {}
    for p in points:
        acc[p] = acc.get(p, 0) + 1
    return tuple(sorted(acc.items()))


def patch_matrix(v: IndexSet) -> list[list[tuple[int, Point | None]]]:
    """2d x d matrix of entries (coefficient, variable).

    Variable None means a constant; the coefficient then is 0 or 1 of the
    identity block.  All variables lie in the staircase ground set.
    """
    if not v.is_isotropic():
        raise ValueError(f"patch matrix needs isotropic v, got {v}")
    grid = VGrid(v)
    d, n = v.d, v.n
    vpos = {c: j for j, c in enumerate(v.entries)}
    rows: list[list[tuple[int, Point | None]]] = []
    for r in range(1, n + 1):
        if r in vpos:
            row = [(1 if j == vpos[r] else 0, None) for j in range(d)]
        else:
            row = []
            for c in v.entries:
                beta = (r, c) if r <= grid.star(c) else (grid.star(c), grid.star(r))
                sign = -1 if r <= d else 1
                assert beta in grid.roots, f"entry {beta} escapes the staircase"
                row.append((sign, beta))
        rows.append(row)
    return rows


def _determinant(rows: list[list[tuple[int, Point | None]]]) -> Polynomial:
    """Exact determinant by row expansion, skipping zero entries."""
    k = len(rows)
    assert all(len(r) == k for r in rows), "determinant needs a square matrix"
    result: dict[Monomial, int] = {}

    def expand(i: int, used: int, sign: int, coeff: int, points: tuple):
        if coeff == 0:
            return
        if i == k:
            m = monomial_from_points(points)
            result[m] = result.get(m, 0) + sign * coeff
            return
        used_before = 0
        for j in range(k):
            if used >> j & 1:
                used_before += 1
                continue
            c, var = rows[i][j]
            if c == 0:
                continue
            # cofactor parity: rank of column j among the available columns
            s = sign if (j - used_before) % 2 == 0 else -sign
            expand(
                i + 1,
                used | 1 << j,
                s,
                coeff * c,
                points + (var,) if var is not None else points,
            )

    expand(0, 0, 1, 1, ())
    return Polynomial(result)


def minor(v: IndexSet, theta: IndexSet) -> Polynomial:
    """Determinant of the theta-rows of the patch matrix at v.

    Homogeneous of degree |theta \\ v|; equals 1 when theta = v.
    """
    if theta.n != v.n or theta.d != v.d:
        raise ValueError(f"theta={theta} incompatible with v={v}")
    matrix = patch_matrix(v)
    chosen = [matrix[r - 1] for r in theta.entries]
    poly = _determinant(chosen)
    assert poly.is_homogeneous(), f"minor at theta={theta} is not homogeneous"
    return poly


def minor_of_pair(v: IndexSet, pair) -> Polynomial:
    """Minor of the canonical index set attached to an admissible pair.

    The minors of theta and of its sharp dual agree up to the explicit
    sign `mirror_sign`, so taking the canonical theta fixes the choice.
    """
    from .smt import pair_to_theta

    theta, _ = pair_to_theta(pair)
    return minor(v, theta)


def mirror_sign(theta: IndexSet) -> int:
    """Relative sign between the minors of theta and of its sharp dual.

    Row-sorted determinants satisfy minor(v, theta) ==
    mirror_sign(theta) * minor(v, theta#) for every v: extracting the
    identity-block rows contributes (-1)^inv with inv the number of
    low-column crossings, and the anti-diagonal symmetry of the variable
    block matches the residual minors exactly.
    """
    d = theta.d

    def inv(ts: IndexSet) -> int:
        low = [x for x in ts.entries if x <= d]
        other = [c for c in range(1, d + 1) if c not in set(low)]
        return sum(1 for l in low for c in other if c < l)

    return -1 if (inv(theta) + inv(theta.sharp())) % 2 else 1
