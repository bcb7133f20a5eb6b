import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from sympgrass.grid import (
    GridMonomial,
    VGrid,
    dominates_chain,
    dominates_monomial,
    dominates_support,
    dominator,
    extension_dominated,
    is_v_chain,
    s_chain,
)
from sympgrass.poset import IndexSet, enumerate_index_sets, enumerate_isotropic, leq


V2 = IndexSet(4, (1, 2))
V5 = IndexSet(10, (1, 2, 3, 6, 7))
W5 = IndexSet(10, (3, 5, 7, 9, 10))


def test_build_grid_d2():
    g = VGrid(V2)
    assert g.roots == {(3, 1), (4, 1), (3, 2)}
    assert g.pos == {(3, 1), (4, 1), (3, 2)}
    assert g.diag == {(4, 1), (3, 2)}
    assert g.pos_all == {(3, 1), (4, 1), (3, 2), (4, 2)}


def test_grid_sizes_d5():
    assert len(VGrid(V5).roots) == 15


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_roots_size_is_triangle_number(d):
    for v in enumerate_isotropic(d):
        assert len(VGrid(v).roots) == d * (d + 1) // 2


def test_grid_at_minimal_point():
    # every staircase point has row > column, so pos fills the staircase
    for d in (2, 3, 4):
        g = VGrid(IndexSet(2 * d, tuple(range(1, d + 1))))
        assert g.pos == g.roots


def test_is_v_chain():
    assert is_v_chain([(10, 1), (9, 6)])
    assert is_v_chain([(5, 2)])
    assert not is_v_chain([(5, 2), (9, 6)])


def test_s_chain_examples():
    assert s_chain(V2, [(3, 2)]).entries == (1, 3)
    assert s_chain(V2, []) == V2
    out = s_chain(V2, [(3, 1)])
    assert out.entries == (2, 3)
    assert not out.is_isotropic()


def test_s_chain_rejects_non_chain():
    with pytest.raises(ValueError):
        s_chain(V5, [(5, 2), (9, 6)])


def test_dominates_chain_examples():
    assert dominates_chain(W5, V5, [(5, 2)])
    assert dominates_chain(V5, V5, [])
    for p in VGrid(V5).pos:
        assert not dominates_chain(V5, V5, [p])


def test_dominates_monomial_examples():
    g5 = VGrid(V5)
    monw = GridMonomial.from_points(g5, [(5, 2), (9, 6), (10, 1)])
    assert dominates_monomial(W5, V5, monw)
    off = VGrid(V2).roots - VGrid(V2).pos
    if off:
        assert dominates_monomial(V2, V2, GridMonomial.from_points(VGrid(V2), off, "roots"))
    for p in VGrid(V2).pos:
        assert not dominates_monomial(V2, V2, [p])


def _dominates_brute_force(w, v, support):
    # every subset that happens to be a chain, checked one by one
    pts = sorted((p for p in support if p[0] > p[1]), key=lambda p: (-p[0], p[1]))
    for size in range(1, len(pts) + 1):
        for sub in itertools.combinations(pts, size):
            if is_v_chain(sub) and not s_chain(v, sub).leq(w):
                return False
    return True


@pytest.mark.parametrize("d", [1, 2, 3])
def test_memoized_domination_matches_brute_force(d):
    iso = enumerate_isotropic(d)
    for v in iso:
        pts = sorted(VGrid(v).pos_all)
        for w in iso:
            if not v.leq(w):
                continue
            for size in range(len(pts) + 1):
                for sup in itertools.combinations(pts, size):
                    assert dominates_support(w, v, set(sup)) == _dominates_brute_force(
                        w, v, set(sup)
                    )


def test_domination_depends_on_support_only():
    rng = random.Random(5)
    iso = enumerate_isotropic(3)
    for _ in range(30):
        v = rng.choice(iso)
        w = rng.choice([u for u in iso if v.leq(u)])
        pts = sorted(VGrid(v).roots)
        support = frozenset(rng.sample(pts, rng.randint(0, len(pts))))
        base = dominates_support(w, v, support)
        g = VGrid(v)
        counts = tuple((p, rng.randint(1, 4)) for p in sorted(support))
        mon = GridMonomial(g, counts, "roots")
        assert dominates_monomial(w, v, mon) == base


def test_domination_monotone_in_w():
    iso = enumerate_isotropic(3)
    for v in iso:
        pts = sorted(VGrid(v).roots)
        for w in iso:
            if not v.leq(w):
                continue
            for wp in iso:
                if not w.leq(wp):
                    continue
                for size in (1, 2):
                    for sup in itertools.combinations(pts, size):
                        if dominates_support(w, v, sup):
                            assert dominates_support(wp, v, sup)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_dominated_supports_downward_closed(d):
    for v in enumerate_isotropic(d):
        pts = sorted(VGrid(v).roots)
        for w in enumerate_isotropic(d):
            if not v.leq(w):
                continue
            for size in range(len(pts) + 1):
                for sup in itertools.combinations(pts, size):
                    if dominates_support(w, v, set(sup)):
                        for sub in itertools.combinations(sup, max(size - 1, 0)):
                            assert dominates_support(w, v, set(sub))


def test_extension_check_agrees_with_full_check():
    rng = random.Random(11)
    iso = enumerate_isotropic(3)
    for _ in range(200):
        v = rng.choice(iso)
        w = rng.choice([u for u in iso if v.leq(u)])
        pts = sorted(VGrid(v).roots)
        face = []
        rng.shuffle(pts)
        for p in pts:
            if dominates_support(w, v, face + [p]):
                face.append(p)
        rest = [p for p in pts if p not in face]
        for p in rest:
            assert extension_dominated(w, v, tuple(face), p) == dominates_support(
                w, v, face + [p]
            )
        if face:
            q = face.pop()
            assert extension_dominated(w, v, tuple(face), q)


def test_dominator_examples():
    assert dominator(V2, []) == V2
    assert dominator(V2, [(4, 1)]).entries == (2, 4)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_dominator_minimality(d):
    rng = random.Random(3)
    iso = enumerate_isotropic(d)
    for v in iso:
        pts = sorted(VGrid(v).pos_all)
        for _ in range(10):
            sup = frozenset(rng.sample(pts, rng.randint(0, len(pts))))
            best = dominator(v, sup)
            assert dominates_support(best, v, sup) and v.leq(best)
            for u in iso:
                if v.leq(u) and dominates_support(u, v, sup):
                    assert best.leq(u)


def test_dominator_of_canonical_monomial():
    from sympgrass.monw import monw_points

    for d in (2, 3):
        iso = enumerate_isotropic(d)
        for v in iso:
            for w in iso:
                if v.leq(w):
                    assert dominator(v, monw_points(v, w)) == w


def test_mirror_examples():
    g5 = VGrid(V5)
    assert g5.mirror((9, 6)) == (5, 2)
    assert g5.mirror((10, 1)) == (10, 1)
    for p in g5.diag:
        assert g5.mirror(p) == p
    mon = GridMonomial.from_points(g5, [(5, 2), (9, 6), (10, 1)])
    assert mon.mirror().mirror() == mon


def test_mirror_requires_isotropic_base():
    g = VGrid(IndexSet(4, (1, 4)))
    with pytest.raises(ValueError):
        g.mirror((2, 1))


def test_up_down():
    g4 = VGrid(IndexSet(8, (1, 2, 3, 4)))
    assert g4.up((7, 3)) == (6, 2)
    g5 = VGrid(V5)
    for p in g5.diag:
        assert g5.up(p) == p and g5.down(p) == p
    for p in g5.pos_all:
        assert g5.down(g5.up(p)) in (p, g5.mirror(p))


def test_is_special_examples():
    g2 = VGrid(V2)
    assert GridMonomial(g2, (((3, 2), 2),)).is_special()
    assert not GridMonomial(g2, (((3, 2), 1),)).is_special()
    assert not GridMonomial.from_points(g2, [(4, 1), (3, 2)]).is_special()
    assert GridMonomial(g2, (((4, 1), 2),)).is_special()


def _halves(counts, grid):
    # try to write the monomial as N together with the mirror of N
    half = {}
    for p, m in counts:
        q = grid.mirror(p)
        if p == q:
            if m % 2:
                return None
            half[p] = m // 2
        elif q not in half:
            half[p] = m
    return half


@pytest.mark.parametrize("d", [2, 3])
def test_special_iff_union_with_mirror(d):
    rng = random.Random(23)
    for v in enumerate_isotropic(d):
        g = VGrid(v)
        pts = sorted(g.pos_all)
        for _ in range(40):
            support = rng.sample(pts, rng.randint(0, len(pts)))
            counts = tuple((p, rng.randint(1, 3)) for p in sorted(support))
            mon = GridMonomial(g, counts)
            half = _halves(counts, g)
            decomposable = False
            if half is not None:
                n = GridMonomial(g, tuple((p, m) for p, m in sorted(half.items()) if m))
                decomposable = n.union(n.mirror()) == mon
            assert mon.is_special() == decomposable
        # the union form is special by construction
        support = rng.sample(pts, rng.randint(0, len(pts)))
        counts = tuple((p, rng.randint(1, 2)) for p in sorted(support))
        n = GridMonomial(g, counts)
        assert n.union(n.mirror()).is_special()


def test_grid_rejects_wrong_ambient_size():
    with pytest.raises(ValueError):
        VGrid(IndexSet(5, (1, 2)))


def test_monomial_validation_and_formats():
    g2 = VGrid(V2)
    with pytest.raises(ValueError):
        GridMonomial(g2, (((4, 2), 1),), "roots")  # not in the staircase
    with pytest.raises(ValueError):
        GridMonomial(g2, (((3, 1), 0),))
    mon = GridMonomial.from_points(g2, [(3, 1), (3, 1), (4, 1)])
    assert str(mon) == "{(3,1)^2, (4,1)}"
    assert mon.to_json() == [[3, 1, 2], [4, 1, 1]]
    assert mon.degree == 3 and mon.support == {(3, 1), (4, 1)}


def _square_free_up_fixed_monomials(g: VGrid):
    pts = sorted(p for p in g.pos_all if g.up(p) == p)
    for size in range(len(pts) + 1):
        yield from itertools.combinations(pts, size)


@pytest.mark.parametrize("d", [2, 3])
def test_mirror_union_stays_dominated(d):
    # w fixed by sharp dominating an up-fixed monomial also dominates the
    # union with its mirror image
    for v in enumerate_isotropic(d):
        g = VGrid(v)
        for w in enumerate_isotropic(d):
            if not v.leq(w):
                continue
            for sup in _square_free_up_fixed_monomials(g):
                if dominates_support(w, v, sup):
                    doubled = set(sup) | {g.mirror(p) for p in sup}
                    assert dominates_support(w, v, doubled)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_mirror_union_stays_dominated_d4_random(data):
    iso = enumerate_isotropic(4)
    v = data.draw(st.sampled_from(iso))
    w = data.draw(st.sampled_from([u for u in iso if v.leq(u)]))
    g = VGrid(v)
    pts = sorted(p for p in g.pos_all if g.up(p) == p)
    sup = data.draw(st.sets(st.sampled_from(pts), max_size=4)) if pts else set()
    if dominates_support(w, v, sup):
        doubled = set(sup) | {g.mirror(p) for p in sup}
        assert dominates_support(w, v, doubled)
