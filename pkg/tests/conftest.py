import random
from fractions import Fraction

import pytest
import sympy

from alphaspec.graph import Graph

X_SYM, A_SYM = sympy.symbols("x a")


def random_graph(n, p=0.5, rng=None):
    rng = rng or random
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def sympy_charpoly(g, alpha=None):
    """det(xI - A_alpha) by sympy; alpha None keeps the symbol a."""
    a = A_SYM if alpha is None else sympy.Rational(alpha.numerator, alpha.denominator)
    deg = g.degrees()
    M = sympy.Matrix(g.n, g.n, lambda i, j: a * deg[i] if i == j else (1 - a) * int(g.adjacent(i, j)))
    return sympy.expand((X_SYM * sympy.eye(g.n) - M).det(method="berkowitz"))


def bivar_to_sympy(p):
    return sympy.expand(sum(c * X_SYM ** i * A_SYM ** j for (i, j), c in p.terms().items()))


def ratpoly_to_sympy(p):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * X_SYM ** i for i, c in enumerate(p.c)))


@pytest.fixture
def rng():
    return random.Random(20240601)


def frac(s):
    return Fraction(s)
