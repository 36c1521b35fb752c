"""Matrix layer: determinants against a recursive oracle, echelon form
properties, the small matrix groups counted against the closed forms, and
Cauchy-Binet."""

import random

import pytest

from agcodes.fields import field_for_order
from agcodes.limits import CapExceeded
from agcodes.matrices import (
    MatrixGF,
    cauchy_binet,
    enumerate_gl,
    enumerate_matrices,
    enumerate_rref,
    enumerate_sl,
    rref_rows_with_transform,
)
from agcodes.params import gaussian_binomial, gl_order, sl_order

gf2 = field_for_order(2)
gf3 = field_for_order(3)
gf4 = field_for_order(4)


def rand_matrix(rng, gf, r, c):
    return MatrixGF(gf, r, c, tuple(rng.randrange(gf.q) for _ in range(r * c)))


def laplace_det(gf, rows):
    """Independent recursive determinant, first-row expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    out = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor_rows = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = gf.mul(rows[0][j], laplace_det(gf, minor_rows))
        if j % 2:
            term = gf.neg(term)
        out = gf.add(out, term)
    return out


def test_constructors_and_access():
    m = MatrixGF.from_rows(gf3, [(1, 2, 0), (0, 1, 2)])
    assert (m.nrows, m.ncols) == (2, 3)
    assert m.entry(1, 2) == 2
    assert m.entry(2, 3) == 2
    assert m.row(2) == (0, 1, 2)
    assert m.col(2) == (2, 1)
    assert m.rows() == [(1, 2, 0), (0, 1, 2)]
    assert m.tolists() == [[1, 2, 0], [0, 1, 2]]
    assert not m.is_zero
    assert MatrixGF.zeros(gf3, 2, 2).is_zero
    assert MatrixGF.identity(gf3, 2).det() == 1
    with pytest.raises(IndexError):
        m.entry(0, 1)
    with pytest.raises(IndexError):
        m.entry(1, 4)
    with pytest.raises(IndexError):
        m.row(3)
    with pytest.raises(ValueError):
        MatrixGF(gf3, 2, 2, (0, 1, 2))
    with pytest.raises(ValueError):
        MatrixGF(gf3, 1, 2, (0, 3))
    with pytest.raises(ValueError):
        MatrixGF.from_rows(gf3, [(1, 2), (0,)])


def test_det_against_recursive_oracle():
    rng = random.Random(7)
    for _ in range(150):
        gf = rng.choice([gf2, gf3, gf4])
        n = rng.randint(0, 4)
        m = rand_matrix(rng, gf, n, n)
        assert m.det() == laplace_det(gf, m.tolists())


def test_det_known_values():
    assert MatrixGF(gf3, 2, 2, (0, 1, 1, 0)).det() == 2
    assert MatrixGF(gf2, 0, 0, ()).det() == 1
    assert MatrixGF(gf3, 3, 3, (1, 0, 0, 0, 2, 0, 0, 0, 2)).det() == 1
    with pytest.raises(ValueError):
        MatrixGF.zeros(gf2, 2, 3).det()


def test_arithmetic_laws():
    rng = random.Random(11)
    for _ in range(40):
        gf = rng.choice([gf2, gf3, gf4])
        a = rand_matrix(rng, gf, 2, 3)
        b = rand_matrix(rng, gf, 2, 3)
        c = rand_matrix(rng, gf, 3, 2)
        assert a + b == b + a
        assert a - a == MatrixGF.zeros(gf, 2, 3)
        assert (a + b) @ c == a @ c + b @ c
        assert (a @ c).transpose() == c.transpose() @ a.transpose()
        assert a.scale(0).is_zero
    with pytest.raises(ValueError):
        rand_matrix(rng, gf2, 2, 3) + rand_matrix(rng, gf3, 2, 3)
    with pytest.raises(ValueError):
        rand_matrix(rng, gf2, 2, 3) @ rand_matrix(rng, gf2, 2, 3)


def test_submatrix_and_minor():
    m = MatrixGF.from_rows(gf3, [(1, 2, 0), (0, 1, 2)])
    assert m.submatrix((1,), (1, 3)).rows() == [(1, 0)]
    assert m.minor((1, 2), (1, 2)) == 1
    assert m.minor((1, 2), (2, 3)) == 1  # det [[2,0],[1,2]] = 4 = 1 mod 3
    assert m.minor((), ()) == 1
    with pytest.raises(ValueError):
        m.minor((1, 2), (1,))
    with pytest.raises(ValueError):
        m.submatrix((2, 1), (1,))
    with pytest.raises(ValueError):
        m.submatrix((1, 3), (1,))


def test_rref_properties():
    rng = random.Random(3)
    for _ in range(80):
        gf = rng.choice([gf2, gf3])
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        m = rand_matrix(rng, gf, r, c)
        reduced, trans = rref_rows_with_transform(m)
        assert trans @ m == reduced
        assert trans.det() != 0
        assert reduced.rref_rows() == reduced
        assert reduced.rank() == m.rank()
        # canonical under left multiplication by anything invertible
        while True:
            s = rand_matrix(rng, gf, r, r)
            if s.det() != 0:
                break
        assert (s @ m).rref_rows() == m.rref_rows()


def test_inverse():
    rng = random.Random(5)
    for gf in (gf2, gf3, gf4):
        for _ in range(20):
            while True:
                m = rand_matrix(rng, gf, 3, 3)
                if m.det() != 0:
                    break
            assert m @ m.inverse() == MatrixGF.identity(gf, 3)
            assert m.inverse() @ m == MatrixGF.identity(gf, 3)
    with pytest.raises(ValueError):
        MatrixGF.zeros(gf2, 2, 2).inverse()
    with pytest.raises(ValueError):
        MatrixGF.zeros(gf2, 2, 3).inverse()


def test_enumerate_matrices_order_and_count():
    mats = list(enumerate_matrices(gf2, 1, 2))
    assert [m.row(1) for m in mats] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(list(enumerate_matrices(gf3, 2, 2))) == 81


def test_group_counts_match_formulas():
    assert len(list(enumerate_gl(1, gf2))) == gl_order(1, 2) == 1
    assert len(list(enumerate_gl(2, gf2))) == gl_order(2, 2) == 6
    assert len(list(enumerate_gl(3, gf2))) == gl_order(3, 2) == 168
    assert len(list(enumerate_gl(2, gf3))) == gl_order(2, 3) == 48
    assert len(list(enumerate_sl(2, gf2))) == sl_order(2, 2) == 6
    assert len(list(enumerate_sl(2, gf3))) == sl_order(2, 3) == 24
    for m in enumerate_sl(2, gf4):
        assert m.det() == 1


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        list(enumerate_gl(2, gf2, cap=10))
    with pytest.raises(CapExceeded):
        list(enumerate_sl(3, gf3, cap=100))


def test_enumerate_rref_counts_and_canonicality():
    for k, n, q in [(2, 4, 2), (1, 3, 3), (2, 3, 2), (0, 3, 2), (3, 3, 2)]:
        gf = field_for_order(q)
        reps = list(enumerate_rref(k, n, gf))
        assert len(reps) == gaussian_binomial(n, k, q)
        assert len(set(reps)) == len(reps)
        for w in reps:
            assert w.rank() == k
            if k:
                assert w.rref_rows() == w
    with pytest.raises(ValueError):
        list(enumerate_rref(3, 2, gf2))


def test_cauchy_binet():
    rng = random.Random(13)
    for _ in range(200):
        gf = rng.choice([gf2, gf3, gf4])
        r = rng.randint(0, 3)
        s = rng.randint(r, 4)
        a = rand_matrix(rng, gf, r, s)
        b = rand_matrix(rng, gf, s, r)
        lhs, rhs = cauchy_binet(a, b)
        assert lhs == rhs
    with pytest.raises(ValueError):
        cauchy_binet(rand_matrix(rng, gf2, 3, 2), rand_matrix(rng, gf2, 2, 3))
    with pytest.raises(ValueError):
        cauchy_binet(rand_matrix(rng, gf2, 2, 3), rand_matrix(rng, gf2, 2, 3))
