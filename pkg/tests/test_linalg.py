from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from supercoho.linalg import (Mat, in_span, intersect, kernel_basis, left_annihilator, rank, rat, rref,
                              solve, span_basis)


def dense_rank(rows):
    """Textbook Gaussian elimination over Fraction, used as an independent oracle."""
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=6))


def test_rank_of_dependent_rows():
    assert rank(Mat.from_dense([[1, 2], [2, 4]])) == 1


def test_kernel_of_row_vector():
    ker = kernel_basis(Mat.from_dense([[1, 1]]))
    assert len(ker) == 1
    v = ker[0]
    assert v[0] == -v[1] != 0


def test_solve_inconsistent_returns_none():
    assert solve(Mat.from_dense([[1], [1]]), [0, 1]) is None


def test_solve_length_mismatch():
    import pytest
    with pytest.raises(ValueError):
        solve(Mat.from_dense([[1, 0]]), [1, 2])


def test_intersection_of_spans():
    got = intersect([[1, 1], [0, 1]], [[1, 0]])
    assert got == [[1, 0]]


def test_rat_normalizes():
    assert rat("4/2") == 2 and type(rat("4/2")) is int
    assert rat(Fraction(1, 3)) == Fraction(1, 3)


def test_fraction_entries():
    m = Mat.from_dense([[Fraction(1, 2), Fraction(1, 3)], [1, Fraction(2, 3)]])
    assert rank(m) == 1
    assert solve(m, [1, 2]) == [2, 0]


def test_json_round_trip():
    m = Mat.from_dense([[Fraction(-1, 2), 0], [3, 7]])
    assert Mat.from_json(m.to_json()) == m


def test_kron_and_matmul():
    a = Mat.from_dense([[0, 1], [0, 0]])
    b = Mat.identity(2)
    k = a.kron(b)
    assert k.shape == (4, 4)
    assert k[0, 2] == 1 and k[1, 3] == 1
    assert (a @ a).is_zero()


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_matches_oracle(rows):
    m = Mat.from_dense(rows)
    assert rank(m) == dense_rank(rows)
    assert rank(m) == rank(m.T)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_nullity(rows):
    m = Mat.from_dense(rows)
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices, st.data())
def test_solve_consistent_systems(rows, data):
    m = Mat.from_dense(rows)
    x = data.draw(st.lists(st.integers(-3, 3), min_size=m.cols, max_size=m.cols))
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None and m.apply(sol) == b


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_left_annihilator_kills_span(rows):
    m = Mat.from_dense(rows)
    ann = left_annihilator(m)
    assert (ann @ m).is_zero()
    assert ann.rows == 0 or rank(ann) == m.rows - rank(m)


def test_rref_deterministic():
    m = Mat.from_dense([[2, 4, 1], [1, 2, 0]])
    assert rref(m) == rref(Mat.from_dense([[2, 4, 1], [1, 2, 0]]))
    red, free = rref(m)
    assert free == [1]


def test_span_basis_and_membership():
    basis = span_basis([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert len(basis) == 2
    assert in_span(Mat.from_columns(basis), [1, 2, 5])
    assert not in_span(Mat.from_columns(basis), [0, 1, 0])
