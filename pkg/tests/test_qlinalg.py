from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from homleibniz.qlinalg import (
    ContainmentError,
    Subspace,
    as_qarray,
    column_space,
    format_rational,
    nullspace,
    parse_rational,
    quotient_dim,
    rank,
    rref,
    solve,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # sparse-ish entries give interesting ranks
    entry = st.one_of(st.just(Fraction(0)), small)
    return [[draw(entry) for _ in range(c)] for _ in range(r)]


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("−4/6", Fraction(-2, 3)), (" 7 ", Fraction(7)), (5, Fraction(5)),
])
def test_parse_rational_accepts(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "1.5", "abc", "", 1.5, True, None, "1//2"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(small)
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_as_qarray_keeps_integers_as_int():
    a = as_qarray([["2/2", "1/3"], [4, Fraction(6, 3)]])
    assert type(a[0, 0]) is int and a[0, 0] == 1
    assert a[0, 1] == Fraction(1, 3)
    assert type(a[1, 1]) is int


def test_as_qarray_rejects_bool():
    with pytest.raises(ValueError):
        as_qarray([True])


@given(matrices())
def test_rref_matches_sympy(rows):
    r, k, piv = rref(rows)
    sr, spiv = to_sympy(rows).rref()
    assert k == len(spiv)
    assert tuple(piv) == tuple(spiv)
    assert all(Fraction(r[i, j]) == Fraction(str(sr[i, j])) for i in range(len(rows)) for j in range(len(rows[0])))


@given(matrices())
def test_nullspace_dimension_and_kernel(rows):
    a = as_qarray(rows)
    ns = nullspace(a)
    assert ns.dim == a.shape[1] - to_sympy(rows).rank()
    assert not np.any(a.dot(ns.basis) != 0)


@given(matrices())
def test_rank_nullity(rows):
    a = as_qarray(rows)
    assert rank(a) + nullspace(a).dim == a.shape[1]
    assert column_space(a).dim == rank(a)


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_finds_solution_when_consistent(rows, xs):
    a = as_qarray(rows)
    x = as_qarray(xs[: a.shape[1]])
    b = a.dot(x)
    sol = solve(a, b)
    assert sol is not None and not np.any(a.dot(sol) != b)


def test_solve_inconsistent_returns_none():
    assert solve([[1, 0], [1, 0]], [1, 2]) is None


@given(matrices())
def test_subspace_canonical_basis_is_independent_of_spanning_set(rows):
    a = as_qarray(rows).T  # columns = vectors
    doubled = np.hstack([a, a[:, ::-1] * 2])
    assert Subspace.span(a, a.shape[0]) == Subspace.span(doubled, a.shape[0])


def test_subspace_membership_and_coordinates():
    s = Subspace.span([[1, 0], [1, 1], [0, 1]], 3)
    assert [1, 2, 1] in s
    assert [1, 0, 0] not in s
    coords = s.coordinates([2, 3, 1])
    assert not np.any(s.basis.dot(coords) != as_qarray([2, 3, 1]))


def test_quotient_dim_checks_containment():
    z = Subspace.span([[1], [0]], 2)
    b = Subspace.span([[0], [1]], 2)
    with pytest.raises(ContainmentError):
        quotient_dim(z, b)
    assert quotient_dim(Subspace.full(2), b) == 1
