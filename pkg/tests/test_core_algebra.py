from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import consistent
from tropmat.errors import DimensionMismatch, InvertBottom, ParseError
from tropmat.linalg import determinant, feasible_strict, kernel, mat_vec, rank, solve_affine
from tropmat.scalar import (
    BOTTOM,
    bool_add,
    bool_mul,
    bool_project,
    format_scalar,
    parse_rational,
    parse_scalar,
    trop,
    trop_add,
    trop_inv,
    trop_mul,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
scalars = st.one_of(st.just(BOTTOM), rationals)


@given(scalars, scalars, scalars)
def test_semifield_axioms(a, b, c):
    assert trop_add(a, trop_add(b, c)) == trop_add(trop_add(a, b), c)
    assert trop_mul(a, trop_mul(b, c)) == trop_mul(trop_mul(a, b), c)
    assert trop_add(a, b) == trop_add(b, a)
    assert trop_mul(a, b) == trop_mul(b, a)
    assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))
    assert trop_add(a, a) == a
    assert trop_mul(a, BOTTOM) is BOTTOM
    assert trop_add(a, BOTTOM) == a
    assert trop_mul(a, Fraction(0)) == a


@given(scalars, scalars)
def test_bool_projection_is_a_homomorphism(a, b):
    assert bool_project(trop_add(a, b)) == bool_add(bool_project(a), bool_project(b))
    assert bool_project(trop_mul(a, b)) == bool_mul(bool_project(a), bool_project(b))


@given(rationals)
def test_inverse(a):
    assert trop_mul(a, trop_inv(a)) == 0


def test_bottom_has_no_inverse():
    with pytest.raises(InvertBottom):
        trop_inv(BOTTOM)


def test_bottom_is_below_everything():
    assert BOTTOM < Fraction(-10**9)
    assert max(BOTTOM, Fraction(-3)) == -3
    assert max(Fraction(-3), BOTTOM) == -3


@pytest.mark.parametrize("bad", ["1.5", "1e3", "", "abc", "1/0", 1.5, None, True])
def test_parse_rejects_non_rationals(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_floats_are_rejected_at_construction():
    with pytest.raises(ParseError):
        trop(0.5)


@pytest.mark.parametrize("text,value", [("3/6", Fraction(1, 2)), ("-2", Fraction(-2)), (" 7 ", Fraction(7))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@given(scalars)
def test_scalar_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_bottom_serializes_as_minus_inf():
    assert format_scalar(BOTTOM) == "-inf"
    assert parse_scalar("-inf") is BOTTOM
    assert format_scalar(Fraction(6, 4)) == "3/2"


small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=150)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solve_affine_output_is_verified(m, n, data):
    A = [[Fraction(data.draw(small)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(data.draw(small)) for _ in range(m)]
    sol = solve_affine(A, b, ncols=n)
    assert (sol is not None) == consistent(A, b)
    if sol is not None:
        assert list(mat_vec(A, sol.particular)) == b
        for k in sol.kernel_basis:
            assert not any(mat_vec(A, k))
        assert sol.dimension == n - rank(A, ncols=n)


@settings(max_examples=80)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_grid_solutions_are_never_missed(m, n, data):
    A = [[Fraction(data.draw(small)) for _ in range(n)] for _ in range(m)]
    grid = [Fraction(v, 2) for v in range(-4, 5)]
    x0 = [data.draw(st.sampled_from(grid)) for _ in range(n)]
    b = list(mat_vec(A, x0))
    # every right-hand side hit by a grid point must be reported feasible
    hits = [x for x in product(grid, repeat=n) if list(mat_vec(A, x)) == b]
    assert hits and solve_affine(A, b, ncols=n) is not None


def test_kernel_and_determinant():
    assert kernel([[1, 1]], ncols=2) == [(Fraction(-1), Fraction(1))]
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_inconsistent_system():
    assert solve_affine([[1, 1], [1, 1]], [0, 1], ncols=2) is None


def test_feasible_strict_examples():
    assert feasible_strict([([1, -1], 0)], [[1, 0]], nvars=2) == (Fraction(1), Fraction(1))
    assert feasible_strict([([1], -1)], [[1]], nvars=1) is None
    eqs = [([1, 0, -1, 0], 0), ([0, 1, 0, -1], 0), ([1, -1, 0, 0], 0)]
    units = [[1 if j == i else 0 for j in range(4)] for i in range(4)]
    assert feasible_strict(eqs, units, nvars=4) == (1, 1, 1, 1)


@settings(max_examples=100)
@given(st.integers(1, 3), st.data())
def test_feasible_strict_witness_and_grid_oracle(n, data):
    forms = [[data.draw(small) for _ in range(n)] for _ in range(data.draw(st.integers(1, 3)))]
    eqs = [([data.draw(small) for _ in range(n)], data.draw(small)) for _ in range(data.draw(st.integers(0, 2)))]
    w = feasible_strict(eqs, forms, nvars=n)
    grid = [Fraction(v, 2) for v in range(-6, 7)]
    on_grid = any(
        all(sum(c * v for c, v in zip(f, x)) > 0 for f in forms)
        and all(sum(c * v for c, v in zip(e, x)) == r for e, r in eqs)
        for x in product(grid, repeat=n)
    )
    if w is not None:
        assert all(sum(c * v for c, v in zip(f, w)) > 0 for f in forms)
        assert all(sum(c * v for c, v in zip(e, w)) == r for e, r in eqs)
    if on_grid:
        assert w is not None


def test_feasible_strict_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        feasible_strict([([1, 2], 0)], [[1]], nvars=2)
