from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from auslander import exact

small_ints = st.integers(-3, 3)


@st.composite
def int_matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return exact.matrix(rows, shape=(r, c))


@given(int_matrices())
def test_rank_matches_floating_point_on_small_integers(a):
    expected = np.linalg.matrix_rank(a.astype(float)) if a.size else 0
    assert exact.rank(a) == expected


@given(int_matrices())
def test_nullspace_is_a_kernel_basis(a):
    basis = exact.nullspace(a)
    assert len(basis) == a.shape[1] - exact.rank(a)
    for v in basis:
        assert exact.is_zero(a @ v.reshape(-1, 1)) if a.shape[0] else True
    if basis:
        stacked = exact.matrix([list(v) for v in basis])
        assert exact.rank(stacked) == len(basis)


@given(int_matrices(), st.data())
def test_solve_recovers_a_consistent_right_hand_side(a, data):
    x = exact.matrix([[data.draw(small_ints)] for _ in range(a.shape[1])], shape=(a.shape[1], 1))
    y = a @ x
    sol = exact.solve(a, y)
    assert np.array_equal(a @ sol, y)


def test_solve_rejects_inconsistent_systems():
    a = exact.matrix([[1, 0], [1, 0]])
    with pytest.raises(ValueError):
        exact.solve(a, exact.matrix([[1], [2]]))


def test_fractions_are_kept_exact():
    a = exact.matrix([[2, 0], [0, 3]])
    sol = exact.solve(a, exact.identity(2))
    assert sol[0, 0] == Fraction(1, 2) and sol[1, 1] == Fraction(1, 3)


def test_inexact_entries_are_refused():
    with pytest.raises(TypeError):
        exact.matrix([[0.5]])


@given(int_matrices())
def test_complete_basis_extends_column_space(a):
    cols = exact.column_space(a)
    extra = exact.complete_basis(cols)
    assert cols.shape[1] == exact.rank(a)
    assert cols.shape[1] + len(extra) == a.shape[0]
    full = exact.hstack([cols] + [exact.identity(a.shape[0])[:, [i]] for i in extra], a.shape[0])
    assert exact.rank(full) == a.shape[0]
