from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cybe import (
    QQ,
    PrimeField,
    Tensor2,
    Tensor3,
    change_basis,
    cycle_xi,
    determinant,
    is_alpha_beta_skew,
    is_skew_symmetric,
    is_strongly_symmetric,
    is_symmetric,
    strongly_symmetric_reduced,
    symmetry_flags,
    twist_tau,
)
from conftest import all_tensors, rand_fraction, rand_tensor

F3 = PrimeField(3)
F5 = PrimeField(5)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def grid_strategy(n):
    return st.lists(
        st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(lambda rows: Tensor2.from_rows(rows, QQ))


def cube_strategy(n):
    z = Tensor3.zero(n, QQ)
    cell = st.tuples(
        st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, n - 1), fracs
    )
    def fill(cells):
        t = [[list(row) for row in plane] for plane in z.t]
        for i, j, m, val in cells:
            t[i][j][m] = val
        return Tensor3(n, tuple(tuple(tuple(r) for r in p) for p in t), QQ)
    return st.lists(cell, max_size=12).map(fill)


@given(grid_strategy(3))
def test_twist_is_an_involution(r):
    assert twist_tau(twist_tau(r)) == r


@given(grid_strategy(2))
def test_twist_is_an_involution_dim2(r):
    assert twist_tau(twist_tau(r)) == r


@given(cube_strategy(3))
def test_cycle_has_order_three(t):
    assert cycle_xi(cycle_xi(cycle_xi(t))) == t


def test_cycle_transport_on_a_single_cell():
    # e_1 (x) e_2 (x) e_3 -> e_2 (x) e_3 (x) e_1
    z = QQ.zero()
    t = [[[z] * 3 for _ in range(3)] for _ in range(3)]
    t[0][1][2] = QQ.one()
    cube = Tensor3(3, tuple(tuple(tuple(r) for r in p) for p in t), QQ)
    moved = cycle_xi(cube)
    assert moved.entries() == [((1, 2, 0), QQ.one())]
    moved = cycle_xi(moved)
    assert moved.entries() == [((2, 0, 1), QQ.one())]


def test_twist_transposes():
    r = Tensor2.from_rows([[1, 2], [3, 4]], QQ)
    assert twist_tau(r).k == ((1, 3), (2, 4))


# strong symmetry: the reduced systems must agree with the quantifier form


def test_reduced_strong_symmetry_exhaustive_dim2_f3():
    for r in all_tensors(2, F3):
        assert strongly_symmetric_reduced(r) == is_strongly_symmetric(r)


def test_reduced_strong_symmetry_sampled_dim3(rng):
    # random grids land on the negative branch with overwhelming odds, so
    # feed the positive branch rank-one grids and near misses explicitly
    for _ in range(400):
        r = rand_tensor(rng, 3, F3)
        assert strongly_symmetric_reduced(r) == is_strongly_symmetric(r)
    one = F3.one()
    for _ in range(100):
        v = [F3.from_int(rng.randrange(3)) for _ in range(3)]
        rows = [[a * b for b in v] for a in v]
        r = Tensor2.from_rows(rows, F3)
        assert strongly_symmetric_reduced(r) and is_strongly_symmetric(r)
        # poke one off-diagonal cell: agreement must survive the perturbation
        bumped = [list(row) for row in rows]
        bumped[0][1] = bumped[0][1] + one
        r = Tensor2.from_rows(bumped, F3)
        assert strongly_symmetric_reduced(r) == is_strongly_symmetric(r)


def test_reduced_strong_symmetry_rank_one_grids(rng):
    # v (x) v is strongly symmetric for every vector v, over both fields
    for field in (QQ, F5):
        for _ in range(50):
            if field is QQ:
                v = [rand_fraction(rng) for _ in range(3)]
            else:
                v = [field.from_int(rng.randrange(5)) for _ in range(3)]
            rows = [[a * b for b in v] for a in v]
            r = Tensor2.from_rows(rows, field)
            assert is_strongly_symmetric(r)
            assert strongly_symmetric_reduced(r)


def test_strong_symmetry_needs_symmetry():
    r = Tensor2.from_rows([[0, 1], [0, 0]], QQ)
    assert not is_strongly_symmetric(r)
    assert not strongly_symmetric_reduced(r)


def test_reduced_system_rejects_dim4():
    with pytest.raises(ValueError):
        strongly_symmetric_reduced(Tensor2.zero(4, QQ))


def test_rank_two_symmetric_grid_is_not_strong():
    r = Tensor2.from_rows([[1, 0], [0, 1]], QQ)
    assert is_symmetric(r)
    assert not is_strongly_symmetric(r)


# skew and alpha,beta-skew


def test_skew_predicate():
    r = Tensor2.from_rows([[0, 2], [-2, 0]], QQ)
    assert is_skew_symmetric(r)
    assert not is_skew_symmetric(Tensor2.from_rows([[1, 0], [0, 0]], QQ))


def test_skew_requires_zero_diagonal_even_mod_p():
    one = F3.one()
    r = Tensor2.from_entries(2, F3, {(0, 0): one})
    assert not is_skew_symmetric(r)


def test_alpha_beta_skew_examples():
    a, b = Fraction(4), Fraction(-4)   # the sl2 values
    z = QQ.zero()
    # p = 2s with u = 0, z = 0: 16 s^2?  pick the quadric directly:
    # b s^2 + a u^2 + p^2 = -4 s^2 + 4 u^2 + p^2 = 0 at (p,s,u)=(0,1,1)
    r = Tensor2.from_rows(
        [[z, z, 1], [z, z, 1], [-1, -1, z]], QQ
    )
    assert is_alpha_beta_skew(r, a, b)
    r = Tensor2.from_rows(
        [[z, z, 1], [z, z, z], [-1, z, z]], QQ
    )
    assert not is_alpha_beta_skew(r, a, b)   # -4 s^2 = -4 != 0
    with pytest.raises(ValueError):
        is_alpha_beta_skew(Tensor2.zero(2, QQ), a, b)


def test_alpha_beta_skew_with_nonzero_z():
    # alpha=1, beta=-1: quadric -z^2 - s^2 + u^2 + p^2, zero at z=u=1, s=p=0
    one = QQ.one()
    r = Tensor2.from_entries(
        3, QQ, {(0, 0): one, (1, 1): -one, (2, 2): one, (1, 2): one, (2, 1): -one}
    )
    assert is_alpha_beta_skew(r, Fraction(1), Fraction(-1))


def test_symmetry_flags_shape():
    r = Tensor2.zero(3, QQ)
    flags = symmetry_flags(r)
    assert flags == {"strongly_symmetric": True, "skew_symmetric": True}
    flags = symmetry_flags(r, alpha=Fraction(1), beta=Fraction(1))
    assert flags["alpha_beta_skew"] is True
    # alpha/beta ignored off dimension 3
    assert "alpha_beta_skew" not in symmetry_flags(
        Tensor2.zero(2, QQ), alpha=Fraction(1), beta=Fraction(1)
    )


# change of basis


def invertible_grid(rng, n, field):
    while True:
        if field is QQ:
            rows = [[rand_fraction(rng, 3) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[field.from_int(rng.randrange(field.p)) for _ in range(n)]
                    for _ in range(n)]
        if determinant(rows, field):
            return rows


def test_change_basis_rejects_singular():
    r = Tensor2.zero(2, QQ)
    with pytest.raises(ValueError, match="singular"):
        change_basis(r, [[1, 1], [1, 1]])
    with pytest.raises(ValueError, match="2x2"):
        change_basis(r, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_change_basis_identity_and_composition(rng):
    r = rand_tensor(rng, 3, QQ)
    ident = [[QQ.one() if i == j else QQ.zero() for j in range(3)] for i in range(3)]
    assert change_basis(r, ident) == r


def test_change_basis_scaling_squares():
    one = QQ.one()
    r = Tensor2.from_entries(2, QQ, {(0, 1): one})
    two = [[2 * one, QQ.zero()], [QQ.zero(), 2 * one]]
    assert change_basis(r, two).entry(0, 1) == 4 * one


def test_strong_symmetry_survives_any_basis_change(rng):
    # congruence k -> Q k Q^T keeps both symmetry and the rank bound, so
    # strong symmetry is basis independent; 200 random invertible changes
    for field in (QQ, F5):
        for _ in range(100):
            n = rng.choice([2, 3])
            if field is QQ:
                v = [rand_fraction(rng) for _ in range(n)]
            else:
                v = [field.from_int(rng.randrange(field.p)) for _ in range(n)]
            r = Tensor2.from_rows([[a * b for b in v] for a in v], field)
            q = invertible_grid(rng, n, field)
            assert is_strongly_symmetric(change_basis(r, q))


def test_skewness_survives_any_basis_change(rng):
    one = QQ.one()
    r = Tensor2.from_entries(3, QQ, {(0, 1): one, (1, 0): -one, (0, 2): 2 * one,
                                     (2, 0): -2 * one})
    for _ in range(50):
        q = invertible_grid(rng, 3, QQ)
        assert is_skew_symmetric(change_basis(r, q))


def test_determinant_matches_cofactor_expansion(rng):
    for _ in range(60):
        rows = [[rand_fraction(rng, 3) for _ in range(3)] for _ in range(3)]
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, i = rows[2]
        want = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        assert determinant(rows, QQ) == want


# plain container behaviour


def test_tensor2_algebra():
    r = Tensor2.from_rows([[1, 2], [3, 4]], QQ)
    s = Tensor2.from_rows([[4, 3], [2, 1]], QQ)
    assert (r + s).k == ((5, 5), (5, 5))
    assert (r - r).is_zero()
    assert (-r).entry(0, 1) == -2
    assert r.scale(Fraction(1, 2)).entry(1, 1) == 2
    assert r != s and r == Tensor2.from_rows([[1, 2], [3, 4]], QQ)
    assert hash(r) == hash(Tensor2.from_rows([[1, 2], [3, 4]], QQ))
    assert r.entries()[0] == ((0, 0), 1)
    assert "k[1][2]=2" in repr(r)
    assert repr(Tensor2.zero(2, QQ)) == "Tensor2(0)"


def test_tensor3_algebra():
    z = Tensor3.zero(2, QQ)
    assert z.is_zero() and repr(z) == "Tensor3(0)"
    t = [[[QQ.zero()] * 2 for _ in range(2)] for _ in range(2)]
    t[1][0][1] = Fraction(7)
    cube = Tensor3(2, tuple(tuple(tuple(r) for r in p) for p in t), QQ)
    assert (cube + z) == cube
    assert cube.entries() == [((1, 0, 1), Fraction(7))]
    assert cube.entry(1, 0, 1) == 7
    assert "t[2][1][2]=7" in repr(cube)
    assert hash(cube + z) == hash(cube)


def test_named_view_matches_grid():
    r = Tensor2.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]], QQ)
    assert (r.x, r.y, r.z) == (1, 5, 9)
    assert (r.p, r.q) == (2, 4)
    assert (r.s, r.t) == (3, 7)
    assert (r.u, r.v) == (6, 8)


def test_named_view_guards_dimension():
    r = Tensor2.from_rows([[1, 2], [3, 4]], QQ)
    assert (r.x, r.y, r.p, r.q) == (1, 4, 2, 3)    # these exist in dim 2
    for name in ("z", "s", "t", "u", "v"):
        with pytest.raises(ValueError, match="dimension 3"):
            getattr(r, name)


def test_from_entries_defaults_to_zero():
    r = Tensor2.from_entries(3, QQ, {(2, 1): Fraction(5)})
    assert r.entries() == [((2, 1), Fraction(5))]
    assert r.entry(0, 0) == QQ.zero()
