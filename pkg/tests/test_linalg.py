from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from foldcat.linalg import Eliminator, nullspace, primitive, rank

entries = st.integers(-3, 3)


@st.composite
def systems(draw):
    ncols = draw(st.integers(1, 7))
    nrows = draw(st.integers(0, 7))
    rows = draw(st.lists(st.lists(entries, min_size=ncols, max_size=ncols), min_size=nrows, max_size=nrows))
    return rows, ncols


def as_dicts(rows):
    return [{c: v for c, v in enumerate(r) if v} for r in rows]


@given(systems())
def test_rank_matches_sympy(system):
    rows, ncols = system
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert rank(as_dicts(rows), ncols) == expected


@given(systems())
def test_nullspace_is_a_basis_of_solutions(system):
    rows, ncols = system
    basis = nullspace(as_dicts(rows), ncols)
    expected = ncols - (sympy.Matrix(rows).rank() if rows else 0)
    assert len(basis) == expected
    for vec in basis:
        for r in rows:
            assert sum(Fraction(a) * b for a, b in zip(r, vec)) == 0
    if basis:
        assert sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in basis]).rank() == len(basis)


def test_redundant_rows_are_dropped():
    e = Eliminator(3)
    assert e.add({0: 1, 1: 2})
    assert not e.add({0: 2, 1: 4})
    assert e.add({2: 5})
    assert not e.add({})
    assert e.rank == 2
    assert e.nullspace() == [[-2, 1, 0]]


def test_primitive_scaling():
    assert primitive([Fraction(1, 2), Fraction(-3, 4), 0]) == [2, -3, 0]
