"""Exact sparse linear algebra over the rationals."""

import random
from fractions import Fraction

from hypothesis import given, strategies as st

from confalg.linalg import rref, rank, nullspace, span_basis, same_span, in_span

fractions = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def rows_strategy(ncols, max_rows=4):
    row = st.dictionaries(st.integers(0, ncols - 1), fractions, max_size=ncols)
    return st.lists(row, max_size=max_rows)


def dense(row, ncols):
    return tuple(row.get(j, Fraction(0)) for j in range(ncols))


def test_rref_small_example():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}]
    pivots, reduced = rref(rows)
    assert pivots == [0]
    assert reduced[0] == {0: Fraction(1), 1: Fraction(2)}
    assert rank(rows) == 1


def test_rref_normalizes_leading_entries():
    rows = [{0: Fraction(2), 1: Fraction(6)}, {1: Fraction(3)}]
    pivots, reduced = rref(rows)
    assert pivots == [0, 1]
    assert reduced[0] == {0: Fraction(1)}
    assert reduced[1] == {1: Fraction(1)}


def test_nullspace_small_example():
    # x + 2y = 0 over 2 columns
    rows = [{0: Fraction(1), 1: Fraction(2)}]
    basis = nullspace(rows, 2)
    assert basis == [(Fraction(-2), Fraction(1))]


def test_nullspace_of_zero_system_is_everything():
    basis = nullspace([], 3)
    assert len(basis) == 3
    assert basis[0] == (Fraction(1), Fraction(0), Fraction(0))


@given(rows_strategy(4))
def test_rref_is_shuffle_invariant(rows):
    shuffled = list(rows)
    random.Random(7).shuffle(shuffled)
    assert rref(rows) == rref(shuffled)


@given(rows_strategy(4))
def test_nullspace_vectors_satisfy_the_system(rows):
    ncols = 4
    for vec in nullspace(rows, ncols):
        for row in rows:
            total = sum((row.get(j, Fraction(0)) * vec[j]
                         for j in range(ncols)), Fraction(0))
            assert total == 0


@given(rows_strategy(4))
def test_rank_nullity(rows):
    ncols = 4
    assert rank(rows) + len(nullspace(rows, ncols)) == ncols


@given(rows_strategy(4))
def test_span_basis_spans_the_same_space(rows):
    ncols = 4
    basis = span_basis(rows, ncols)
    assert same_span(rows, basis, ncols)
    for row in rows:
        assert in_span(dense(row, ncols), basis, ncols)
    assert len(basis) == rank(rows)


@given(rows_strategy(3), fractions, fractions)
def test_in_span_closed_under_combinations(rows, c1, c2):
    ncols = 3
    if len(rows) < 2:
        return
    combo = tuple(c1 * rows[0].get(j, Fraction(0))
                  + c2 * rows[1].get(j, Fraction(0)) for j in range(ncols))
    assert in_span(combo, rows, ncols)


def test_in_span_rejects_outside_vector():
    rows = [(Fraction(1), Fraction(0))]
    assert not in_span((Fraction(0), Fraction(1)), rows, 2)
    assert in_span((Fraction(5), Fraction(0)), rows, 2)
