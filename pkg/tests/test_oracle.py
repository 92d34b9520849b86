import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolgb.buchberger import field_s_polynomial, s_polynomial
from boolgb.encoders import ShidokuPuzzle, parse_clues
from boolgb.oracle import (
    CapExceeded,
    DensePoly,
    dense_field_s_polynomial,
    dense_mono_poly_mul,
    dense_s_polynomial,
    enumerate_variety,
    solve_shidoku_backtracking,
    varieties_equal,
)
from boolgb.ring import Polynomial, Ring, eval_poly, mono_poly_mul, parse_poly
from tests.strategies import monomials, polynomials

R = Ring(3, ("x", "y", "z"))


def P(text, ring=R):
    return parse_poly(text, ring)


def brute_variety(gens, ring):
    return {p for p in range(1 << ring.nvars) if all(eval_poly(g, p) == 0 for g in gens)}


def test_variety_examples():
    assert enumerate_variety([P("x*y+z")], R).points == {0b000, 0b010, 0b100, 0b111}
    assert enumerate_variety([Polynomial.one()], R).points == set()
    assert enumerate_variety([], R).points == set(range(8))


def test_variety_bitstrings():
    rep = enumerate_variety([P("x*y+z")], R)
    assert rep.as_bitstrings() == ["000", "010", "100", "111"]


def test_variety_cap():
    with pytest.raises(CapExceeded):
        enumerate_variety([], Ring(30))
    with pytest.raises(CapExceeded):
        enumerate_variety([], Ring(12), cap=10)


def test_variety_spans_chunks():
    ring = Ring(22)
    f = parse_poly("x1*x22 + x2 + 1", ring)
    rep = enumerate_variety([f, parse_poly("x3", ring)], ring)
    # x3 = 0 and x2 = 1 + x1*x22 fix two variables; the other 20 are free
    assert len(rep) == 1 << 20


@given(st.lists(polynomials(Ring(6), max_terms=5), max_size=4))
def test_variety_matches_brute_force(gens):
    ring = Ring(6)
    assert enumerate_variety(gens, ring).points == brute_variety(gens, ring)


def test_varieties_equal_examples():
    gb = [P("x*y+z"), P("y*z+z"), P("x*z+z")]
    assert varieties_equal([P("x*y+z")], gb, R)
    assert not varieties_equal([P("x")], [P("x+1")], R)
    assert varieties_equal(gb, gb, R)


# --- dense arithmetic ------------------------------------------------------


def test_dense_field_polynomial_is_not_multilinear():
    fp = DensePoly.field_polynomial(3, 1)
    assert fp.leading() == (2, 0, 0)
    assert fp.to_boolean(R).is_zero()  # x^2 + x vanishes in the quotient


def test_dense_field_s_polynomial_examples():
    assert dense_field_s_polynomial(P("x*y+z"), 1, R) == P("x*z+x*y")
    assert dense_field_s_polynomial(P("x+1"), 1, R).is_zero()
    with pytest.raises(ValueError):
        dense_field_s_polynomial(P("x*y+z"), 3, R)


def test_dense_s_polynomial_matches_examples():
    # (xy+z, yz+z) -> xz+z ; (x+1, y+1) -> x+y
    for f, g, expected in [("x*y+z", "y*z+z", "x*z+z"), ("x+1", "y+1", "x+y")]:
        dense = dense_s_polynomial(DensePoly.from_boolean(P(f), R), DensePoly.from_boolean(P(g), R))
        assert dense.to_boolean(R) == P(expected)
        assert s_polynomial(P(f), P(g)) == P(expected)


ring8 = Ring(8)


@given(monomials(ring8), polynomials(ring8, max_terms=8))
def test_dense_product_matches_or_arithmetic(m, f):
    assert dense_mono_poly_mul(m, f, ring8) == mono_poly_mul(m, f)


@given(polynomials(ring8, max_terms=8, allow_zero=False), st.integers(1, 8))
def test_field_s_polynomial_matches_dense(f, i):
    if not f.lt & ring8.bit(i):
        return
    assert dense_field_s_polynomial(f, i, ring8) == field_s_polynomial(f, i, ring8)


# --- Shidoku ---------------------------------------------------------------


def shidoku_brute_count():
    perms = list(itertools.permutations(range(1, 5)))
    count = 0
    for rows in itertools.product(perms, repeat=4):
        cols_ok = all(len({rows[r][c] for r in range(4)}) == 4 for c in range(4))
        blocks_ok = all(
            len({rows[r][c] for r in (br, br + 1) for c in (bc, bc + 1)}) == 4
            for br in (0, 2)
            for bc in (0, 2)
        )
        count += cols_ok and blocks_ok
    return count


def test_empty_grid_solution_count():
    sols = solve_shidoku_backtracking(ShidokuPuzzle())
    assert len(sols) == shidoku_brute_count() == 288
    assert len(set(sols)) == 288
    assert sols == sorted(sols)  # row-major, values ascending


UNIQUE_5 = "123.........4..1"


def test_five_clue_unique():
    puzzle = parse_clues(UNIQUE_5)
    assert len(puzzle.clues()) == 5
    sols = solve_shidoku_backtracking(puzzle)
    assert sols == [(1, 2, 3, 4, 3, 4, 1, 2, 2, 1, 4, 3, 4, 3, 2, 1)]


def test_contradictory_clues():
    assert solve_shidoku_backtracking(parse_clues("11.............."), limit=None) == []


def test_limit():
    assert len(solve_shidoku_backtracking(ShidokuPuzzle(), limit=5)) == 5
