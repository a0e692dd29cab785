from fractions import Fraction

import pytest

import emlattice

SQUARE = [[0, 0], [1, 0], [0, 1], [1, 1]]
THIN = [[0, 0], [1, 0], [1, 2]]


def test_square_expansion():
    r = emlattice.expansion(SQUARE)
    assert r["coefficients"] == [1, 2, 1]
    assert r["terminated"]
    assert not r["valuation_path"]


def test_interval_with_linear_weight():
    r = emlattice.expansion([[0], [1]], phi={(1,): 1})
    assert r["coefficients"] == [Fraction(1, 2), Fraction(1, 2), 0]


def test_engine_matches_oracle_on_thin_triangle():
    phi = {(1, 1): 1, (0, 2): Fraction(-1, 3)}
    r = emlattice.expansion(THIN, phi=phi, q=[[2, 1], [1, 2]])
    assert r["valuation_path"]
    assert r["coefficients"] == emlattice.oracle_coefficients(THIN, phi=phi)


def test_oracle_helpers():
    assert emlattice.riemann_sum(SQUARE, n=2) == Fraction(9, 4)
    assert emlattice.weighted_ehrhart(SQUARE) == [1, 2, 1]
    assert emlattice.todd(4) == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert emlattice.twisted_todd(2, nmax=2) == [[Fraction(1, 2)], [Fraction(1, 4)]]


def test_subdivide_cone_and_delzant():
    cells = emlattice.subdivide_cone([[1, 0], [1, 2]])
    assert sum(c["r"] for c in cells if c["dim"] == 2) == 2
    assert emlattice.is_delzant(SQUARE)
    assert not emlattice.is_delzant(THIN)


def test_errors():
    with pytest.raises(ValueError):
        emlattice.expansion([[0, 0], [1, 0], [0, 1]], phi={(1,): 1})
    with pytest.raises(emlattice.BudgetExceeded):
        emlattice.riemann_sum([[0, 0, 0], [9, 0, 0], [0, 9, 0], [0, 0, 9]], n=50, budget=100)
