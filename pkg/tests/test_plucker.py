import random

import pytest

from sympgrass.plucker import (
    Polynomial,
    minor,
    minor_of_pair,
    mirror_sign,
    monomial_from_points,
    patch_matrix,
)
from sympgrass.plucker import _determinant
from sympgrass.poset import (
    IndexSet,
    enumerate_index_sets,
    enumerate_isotropic,
    v_degree,
)
from sympgrass.smt import enumerate_admissible_pairs

EPS4 = IndexSet(8, (1, 2, 3, 4))
V5 = IndexSet(10, (3, 4, 6, 9, 10))


def test_polynomial_arithmetic():
    x = Polynomial.variable((5, 1))
    y = Polynomial.variable((6, 2))
    p = x * y - y * x
    assert p.is_zero()
    q = (x + y) * (x - y)
    assert q == x * x - y * y
    assert q.degree() == 2 and q.is_homogeneous()
    assert (x + Polynomial.constant(1)).is_homogeneous() is False
    assert Polynomial.zero().degree() == -1
    assert x.scale(0).is_zero()


def test_polynomial_text_and_json():
    x = Polynomial.variable((5, 1))
    p = x * x - Polynomial.variable((6, 2)).scale(3)
    assert str(p) == "+X(5,1)^2 -3·X(6,2)"
    assert p.to_json() == [
        {"coeff": "1", "monomial": [[5, 1, 2]]},
        {"coeff": "-3", "monomial": [[6, 2, 1]]},
    ]
    assert str(Polynomial.zero()) == "0"


def test_determinant_against_numeric_oracle():
    rng = random.Random(9)

    def numeric_det(m):
        k = len(m)
        if k == 1:
            return m[0][0]
        total = 0
        for j in range(k):
            sub = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * numeric_det(sub)
        return total

    for k in (1, 2, 3, 4):
        for _ in range(20):
            m = [[rng.randint(-5, 5) for _ in range(k)] for _ in range(k)]
            rows = [[(x, None) for x in row] for row in m]
            got = _determinant(rows)
            expected = numeric_det(m)
            assert got == Polynomial.constant(expected) or (
                expected == 0 and got.is_zero()
            )


def test_patch_matrix_d5_display():
    m = patch_matrix(V5)
    display = {
        1: [(-1, (1, 3)), (-1, (1, 4)), (-1, (1, 6)), (-1, (1, 9)), (-1, (1, 10))],
        2: [(-1, (2, 3)), (-1, (2, 4)), (-1, (2, 6)), (-1, (2, 9)), (-1, (1, 9))],
        5: [(-1, (5, 3)), (-1, (5, 4)), (-1, (5, 6)), (-1, (2, 6)), (-1, (1, 6))],
        7: [(1, (7, 3)), (1, (7, 4)), (1, (5, 4)), (1, (2, 4)), (1, (1, 4))],
        8: [(1, (8, 3)), (1, (7, 3)), (1, (5, 3)), (1, (2, 3)), (1, (1, 3))],
    }
    for r, row in display.items():
        assert m[r - 1] == row
    for j, c in enumerate(V5.entries):
        assert m[c - 1] == [(1 if i == j else 0, None) for i in range(5)]


def test_patch_matrix_minimal_point_is_generic_symmetric():
    # at v = (1..d) the variable block realizes every staircase variable,
    # symmetric with respect to the anti-diagonal
    m = patch_matrix(EPS4)
    block = {(r, j + 1): m[r - 1][j] for r in range(5, 9) for j in range(4)}
    assert block[(5, 1)] == (1, (5, 1))
    assert block[(6, 4)] == block[(5, 3)]  # fold across the anti-diagonal
    assert block[(8, 1)] == (1, (8, 1))
    assert block[(8, 4)] == block[(5, 1)]
    seen = {var for _, var in block.values()}
    from sympgrass.grid import VGrid

    assert seen == VGrid(EPS4).roots


def test_patch_matrix_rejects_non_isotropic():
    with pytest.raises(ValueError):
        patch_matrix(IndexSet(8, (1, 2, 3, 8)))


def test_minor_at_v_is_one():
    assert minor(EPS4, EPS4) == Polynomial.constant(1)
    assert minor(V5, V5) == Polynomial.constant(1)


def test_minor_worked_example():
    f1 = minor(EPS4, IndexSet(8, (1, 2, 7, 8)))
    x51, x62 = Polynomial.variable((5, 1)), Polynomial.variable((6, 2))
    x52, x61 = Polynomial.variable((5, 2)), Polynomial.variable((6, 1))
    assert f1 == x51 * x62 - x52 * x61


def test_minor_linear_relation():
    f1 = minor(EPS4, IndexSet(8, (1, 2, 7, 8)))
    f2 = minor(EPS4, IndexSet(8, (1, 4, 5, 8)))
    f3 = minor(EPS4, IndexSet(8, (1, 3, 6, 8)))
    assert (f1 + f2 + f3).is_zero()


def test_minor_mirror_equality_on_worked_instances():
    for entries in [(1, 2, 7, 8), (1, 4, 5, 8), (1, 3, 6, 8)]:
        theta = IndexSet(8, entries)
        assert mirror_sign(theta) == 1
        assert minor(EPS4, theta) == minor(EPS4, theta.sharp())


@pytest.mark.parametrize("d", [1, 2, 3])
def test_minor_mirror_sign_law_exhaustive(d):
    for v in enumerate_isotropic(d):
        for theta in enumerate_index_sets(d, 2 * d):
            assert minor(v, theta) == minor(v, theta.sharp()).scale(mirror_sign(theta))


def test_minor_mirror_sign_law_sampled_d4():
    rng = random.Random(1)
    iso = enumerate_isotropic(4)
    all4 = enumerate_index_sets(4, 8)
    for _ in range(40):
        v, theta = rng.choice(iso), rng.choice(all4)
        assert minor(v, theta) == minor(v, theta.sharp()).scale(mirror_sign(theta))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_minor_homogeneous_of_v_degree(d):
    for v in enumerate_isotropic(d):
        for theta in enumerate_index_sets(d, 2 * d):
            f = minor(v, theta)
            assert f.is_homogeneous()
            if not f.is_zero():
                assert f.degree() == v_degree(theta, v)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_pair_minor_degree(d):
    for v in enumerate_isotropic(d):
        for pair in enumerate_admissible_pairs(d):
            from sympgrass.smt import pair_v_degree

            f = minor_of_pair(v, pair)
            if not f.is_zero():
                assert f.degree() == pair_v_degree(pair, v)


def test_isotropy_of_patch_columns():
    # the columns of the patch matrix span an isotropic plane for every
    # assignment of integers to the variables
    rng = random.Random(17)
    for v in (EPS4, V5, IndexSet(6, (2, 3, 6))):
        d, n = v.d, v.n
        m = patch_matrix(v)
        pts = sorted({var for row in m for _, var in row if var is not None})
        for _ in range(5):
            vals = {p: rng.randint(-7, 7) for p in pts}
            b = [
                [c * (vals[var] if var is not None else 1) for c, var in row]
                for row in m
            ]
            for a in range(d):
                for bb in range(d):
                    s = sum(
                        b[i - 1][a] * b[n - i][bb] * (1 if i <= n - i else -1)
                        for i in range(1, n + 1)
                    )
                    assert s == 0


def test_monomial_from_points():
    assert monomial_from_points([(5, 1), (5, 1), (6, 2)]) == (((5, 1), 2), ((6, 2), 1))
