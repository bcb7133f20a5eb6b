"""Admissible pairs, standard tableaux, and the coordinate-ring count.

An admissible pair is an ordered pair (top, bottom) of isotropic index
sets with top >= bottom and equal distance from (1,...,d).  Pairs
correspond to sharp-orbits {theta, theta#} in I(d,2d) subject to two
side conditions; the correspondence can fail in reverse, producing an
incomparable pair (see `theta_to_pair`).

A standard tableau is a weakly decreasing sequence of admissible pairs
(bottom of each >= top of the next).  Counting the tableaux compatible
with a base point v, dominated by w and of fixed total degree gives the
graded dimensions of the coordinate ring of the affine patch of the
Schubert variety at v: the geometric side of the double count performed
by the `hilbert` module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poset import IndexSet, enumerate_isotropic, eps_degree, v_degree


class NotAdmissibleError(ValueError):
    """Raised when a sharp-orbit does not come from an admissible pair."""

    def __init__(self, x: IndexSet, y: IndexSet, reason: str):
        super().__init__(f"recovered ({x}) and ({y}): {reason}")
        self.x = x
        self.y = y


@dataclass(frozen=True)
class AdmissiblePair:
    top: IndexSet
    bottom: IndexSet

    def __post_init__(self):
        if not (self.top.is_isotropic() and self.bottom.is_isotropic()):
            raise ValueError(f"pair entries must be isotropic: {self.top}, {self.bottom}")
        if not self.bottom.leq(self.top):
            raise ValueError(f"need top >= bottom, got {self.top} vs {self.bottom}")
        if eps_degree(self.top) != eps_degree(self.bottom):
            raise ValueError(
                f"unequal degrees: {self.top} ({eps_degree(self.top)}) vs "
                f"{self.bottom} ({eps_degree(self.bottom)})"
            )

    def follows(self, other: "AdmissiblePair") -> bool:
        """self >= other in the tableau order: bottom(self) >= top(other)."""
        return other.top.leq(self.bottom)

    def dual(self) -> "AdmissiblePair":
        return AdmissiblePair(self.bottom.star(), self.top.star())

    def __str__(self) -> str:
        return f"({self.top})>=({self.bottom})"


def enumerate_admissible_pairs(d: int) -> list[AdmissiblePair]:
    iso = enumerate_isotropic(d)
    out = []
    for x in iso:
        ex = eps_degree(x)
        for y in iso:
            if eps_degree(y) == ex and y.leq(x):
                out.append(AdmissiblePair(x, y))
    return out


def pair_to_theta(pair: AdmissiblePair) -> tuple[IndexSet, IndexSet]:
    """theta = (top inside [d]) + (bottom above d); tau is its sharp dual."""
    d, n = pair.top.d, pair.top.n
    x, y = set(pair.top.entries), set(pair.bottom.entries)
    low = set(range(1, d + 1))
    theta = IndexSet(n, tuple(sorted((x & low) | (y - low))))
    tau = IndexSet(n, tuple(sorted((y & low) | (x - low))))
    assert tau == theta.sharp(), f"dual mismatch for {pair}: {tau} vs {theta.sharp()}"
    return theta, tau


def theta_to_pair(theta: IndexSet, tau: IndexSet) -> AdmissiblePair:
    """Invert `pair_to_theta`; raises NotAdmissibleError when the recovered
    candidates are incomparable (not every sharp-orbit is hit)."""
    if tau != theta.sharp():
        raise ValueError(f"tau={tau} is not the sharp dual of theta={theta}")
    d, n = theta.d, theta.n
    t, s = set(theta.entries), set(tau.entries)
    low = set(range(1, d + 1))
    xe = tuple(sorted((t & low) | (s - low)))
    ye = tuple(sorted((s & low) | (t - low)))
    if len(xe) != d or len(ye) != d:
        # sizes break exactly when |theta ∩ [d]| != |tau ∩ [d]|
        raise NotAdmissibleError(
            IndexSet(n, xe) if len(xe) == d else theta,
            IndexSet(n, ye) if len(ye) == d else tau,
            "unequal low parts",
        )
    x, y = IndexSet(n, xe), IndexSet(n, ye)
    if not y.leq(x):
        raise NotAdmissibleError(x, y, "incomparable")
    return AdmissiblePair(x, y)


def pair_v_degree(pair: AdmissiblePair, v: IndexSet) -> int:
    """Half of |top \\ v| + |bottom \\ v|; cross-checked against |theta \\ v|."""
    total = v_degree(pair.top, v) + v_degree(pair.bottom, v)
    assert total % 2 == 0, f"odd degree sum for {pair} at v={v}"
    half = total // 2
    theta, _ = pair_to_theta(pair)
    via_theta = v_degree(theta, v)
    assert half == via_theta, f"degree mismatch for {pair} at v={v}: {half} vs {via_theta}"
    return half


def pair_is_v_compatible(pair: AdmissiblePair, v: IndexSet) -> bool:
    """Comparable to v on the appropriate side and not the trivial pair (v,v)."""
    if pair.top == v and pair.bottom == v:
        return False
    return pair.top.leq(v) or v.leq(pair.bottom)


def is_standard_tableau(pairs) -> bool:
    seq = list(pairs)
    return all(a.follows(b) for a, b in zip(seq, seq[1:]))


def is_v_compatible(pairs, v: IndexSet) -> bool:
    return all(pair_is_v_compatible(p, v) for p in pairs)


def is_w_dominated(pairs, w: IndexSet) -> bool:
    seq = list(pairs)
    return not seq or seq[0].top.leq(w)


@lru_cache(maxsize=64)
def _compatible_pool(v: IndexSet) -> tuple:
    pool = []
    for pair in enumerate_admissible_pairs(v.d):
        if pair_is_v_compatible(pair, v):
            pool.append((pair, pair_v_degree(pair, v)))
    return tuple(pool)


def count_standard_monomials(v: IndexSet, w: IndexSet, m: int) -> int:
    """Number of v-compatible w-dominated standard tableaux of total degree m."""
    if not v.leq(w):
        raise ValueError(f"need v <= w, got v={v}, w={w}")
    if m < 0:
        raise ValueError(f"degree must be >= 0, got {m}")
    pool = _compatible_pool(v)
    cache: dict[tuple[tuple[int, ...], int], int] = {}

    def count(bound: IndexSet, rem: int) -> int:
        if rem == 0:
            return 1
        key = (bound.entries, rem)
        got = cache.get(key)
        if got is None:
            got = 0
            for pair, deg in pool:
                if deg <= rem and pair.top.leq(bound):
                    got += count(pair.bottom, rem - deg)
            cache[key] = got
        return got

    return count(w, m)


def count_vector(v: IndexSet, w: IndexSet, max_degree: int) -> list[int]:
    return [count_standard_monomials(v, w, m) for m in range(max_degree + 1)]


def enumerate_tableaux(v: IndexSet, w: IndexSet, m: int):
    """Yield every tableau counted by `count_standard_monomials` (test oracle)."""
    pool = _compatible_pool(v)

    def rec(bound: IndexSet, rem: int, prefix: tuple):
        if rem == 0:
            yield prefix
            return
        for pair, deg in pool:
            if deg <= rem and pair.top.leq(bound):
                yield from rec(pair.bottom, rem - deg, prefix + (pair,))

    yield from rec(w, m, ())
