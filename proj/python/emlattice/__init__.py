"""Exact Euler-Maclaurin coefficients of Riemann sums over lattice polytopes."""

from fractions import Fraction

from . import _emlattice
from ._emlattice import BudgetExceeded, is_delzant

__all__ = [
    "BudgetExceeded",
    "expansion",
    "oracle_coefficients",
    "riemann_sum",
    "weighted_ehrhart",
    "todd",
    "twisted_todd",
    "subdivide_cone",
    "is_delzant",
]


def _terms(phi):
    """{exponent tuple: coefficient} to the binding's term list."""
    if phi is None:
        return None
    return [(list(e), str(Fraction(c))) for e, c in phi.items()]


def _matrix(q):
    if q is None:
        return None
    return [[str(Fraction(x)) for x in row] for row in q]


def _fractions(values):
    return [Fraction(v) for v in values]


def expansion(vertices, phi=None, q=None, nmax=None):
    """A_0..A_nmax as Fractions, plus the terminated and valuation_path flags."""
    r = _emlattice.expansion(vertices, _terms(phi), _matrix(q), nmax)
    r["coefficients"] = _fractions(r["coefficients"])
    return r


def oracle_coefficients(vertices, phi=None, budget=10_000_000):
    return _fractions(_emlattice.oracle_coefficients(vertices, _terms(phi), budget))


def riemann_sum(vertices, phi=None, n=1, budget=10_000_000):
    return Fraction(_emlattice.riemann_sum(vertices, _terms(phi), n, budget))


def weighted_ehrhart(vertices, phi=None, budget=10_000_000):
    """Coefficients of N^0, N^1, ... of N^(dim P + deg phi) R_N."""
    return _fractions(_emlattice.weighted_ehrhart(vertices, _terms(phi), budget))


def todd(nmax=4):
    return _fractions(_emlattice.todd(nmax))


def twisted_todd(q, power=1, nmax=4):
    """b_1..b_nmax, each as coefficients in powers of the root of unity."""
    return [_fractions(c) for c in _emlattice.twisted_todd(q, power, nmax)]


def subdivide_cone(generators):
    cells = _emlattice.subdivide_cone(generators)
    for c in cells:
        c["generators"] = [[int(x) for x in g] for g in c["generators"]]
        c["r"] = int(c["r"])
    return cells
