import random
from fractions import Fraction

import numpy as np
import pytest

from alphaspec.exactpoly import RatPoly
from alphaspec.graph import (
    complete,
    cycle,
    disjoint_union,
    empty,
    is_regular,
    path,
    star,
)
from alphaspec.scan.enumerate import enumerate_graphs
from alphaspec.spectra import (
    ConvergenceError,
    Mode,
    NotACharpolyError,
    SizeBoundError,
    a_alpha_matrix,
    alpha_spectra,
    charpoly_at,
    charpoly_bareiss,
    charpoly_exact,
    cluster,
    compare_spectral_radius,
    eigenvalues,
    exact_multiplicities,
    invariants_from_charpoly,
    jacobi_eigenvalues,
    regularity_from_spectrum,
    roots_above,
    scaled_int_charpoly,
    spectral_radius,
)

from conftest import random_graph, ratpoly_to_sympy, sympy_charpoly, bivar_to_sympy

ALPHAS = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]


def test_matrix_examples():
    a = Fraction(2, 7)
    m = a_alpha_matrix(complete(2), a).scaled(1)
    assert m == [[a, 1 - a], [1 - a, a]]
    g = path(4)
    assert a_alpha_matrix(g, 0).scaled(1) == g.adjacency_matrix()
    q = a_alpha_matrix(g, Fraction(1, 2)).scaled(2)
    deg = g.degrees()
    assert q == [[deg[i] if i == j else g.adjacency_matrix()[i][j] for j in range(4)] for i in range(4)]
    with pytest.raises(ValueError):
        a_alpha_matrix(g, Fraction(3, 2))


def test_charpoly_examples():
    assert charpoly_exact(empty(1)).render() == "x"
    assert charpoly_exact(complete(2)).render() == "x^2 - 2*a*x + 2*a - 1"
    assert charpoly_exact(star(5)).eval_alpha(0) == RatPoly.from_desc([1, 0, -4, 0, 0, 0])
    assert charpoly_at(complete(2), Fraction(1, 2)) == RatPoly([0, -1, 1])
    assert charpoly_at(star(5), 0) == RatPoly.from_desc([1, 0, -4, 0, 0, 0])
    for n in range(1, 7):
        assert charpoly_at(empty(n), Fraction(1, 3)) == RatPoly.monomial(n)


def test_charpoly_leading_structure():
    r = random.Random(7)
    for _ in range(30):
        g = random_graph(r.randint(1, 9), rng=r)
        p = charpoly_exact(g)
        assert p.degree_x == g.n and p.coeff(g.n, 0) == 1
        xs = {(i, j): c for (i, j), c in p.terms().items() if i == g.n - 1}
        assert xs == ({(g.n - 1, 1): -2 * g.num_edges} if g.num_edges else {})


def test_leverrier_matches_bareiss_and_sympy():
    r = random.Random(8)
    for n in range(1, 7):
        for _ in range(4):
            g = random_graph(n, r.random(), r)
            p = charpoly_exact(g)
            assert p == charpoly_bareiss(g)
            assert bivar_to_sympy(p) == sympy_charpoly(g)


def test_exact_paths_agree_all_graphs_n_le_6():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            p = charpoly_exact(g)
            for a in ALPHAS:
                assert p.eval_alpha(a) == charpoly_at(g, a)


def test_exact_paths_agree_sample_n_7_8():
    r = random.Random(9)
    for n in (7, 8):
        gs = enumerate_graphs(n)
        for g in r.sample(gs, 40):
            p = charpoly_exact(g)
            for a in ALPHAS:
                assert p.eval_alpha(a) == charpoly_at(g, a)


def test_fixed_alpha_against_sympy():
    r = random.Random(10)
    for _ in range(10):
        g = random_graph(r.randint(2, 7), rng=r)
        a = Fraction(r.randint(0, 7), 7)
        assert ratpoly_to_sympy(charpoly_at(g, a)) == sympy_charpoly(g, a)


def test_alpha_one_is_degree_product():
    r = random.Random(11)
    for _ in range(20):
        g = random_graph(r.randint(1, 9), rng=r)
        want = RatPoly([1])
        for d in g.degrees():
            want = want * RatPoly([-d, 1])
        assert charpoly_at(g, 1) == want


def test_size_bound():
    with pytest.raises(SizeBoundError):
        charpoly_exact(empty(13))
    assert charpoly_exact(empty(13), max_order=13).degree_x == 13


def test_scaled_int_charpoly_is_integral_and_consistent():
    g = cycle(5)
    c = scaled_int_charpoly(g, Fraction(2, 3))
    assert all(isinstance(v, int) for v in c)
    q = 3
    assert RatPoly([Fraction(v, q ** (g.n - i)) for i, v in enumerate(c)]) == charpoly_at(g, Fraction(2, 3))


# ---- numerics

def test_jacobi_against_eigvalsh():
    r = np.random.default_rng(12)
    for n in (1, 2, 5, 9, 14):
        m = r.normal(size=(n, n))
        m = m + m.T
        ours = jacobi_eigenvalues(m, tol=1e-12)
        ref = np.sort(np.linalg.eigvalsh(m))[::-1]
        assert np.max(np.abs(ours - ref)) < 1e-10


def test_jacobi_budget():
    m = np.random.default_rng(1).normal(size=(12, 12))
    with pytest.raises(ConvergenceError):
        jacobi_eigenvalues(m + m.T, tol=1e-14, max_sweeps=1)


def test_spectrum_examples():
    for n in range(3, 9):
        for a in (0.2, 0.5, 0.8):
            assert abs(eigenvalues(star(n), a).eigenvalues[1] - a) < 1e-10
    for g in (cycle(7), complete(5), disjoint_union([cycle(3), cycle(3)])):
        r = is_regular(g)
        for a in (0, 0.3, 0.9, 1):
            assert abs(spectral_radius(g, a) - r) < 1e-10
    for n in range(2, 12):
        for a in (0, 0.5, 0.99):
            assert spectral_radius(path(n), a) < 2


def test_spectrum_invariants_random():
    r = random.Random(13)
    for _ in range(40):
        g = random_graph(r.randint(1, 10), rng=r)
        a = r.random()
        rep = eigenvalues(g, a)
        assert rep.n == g.n
        assert rep.eigenvalues == sorted(rep.eigenvalues, reverse=True)
        assert abs(sum(rep.eigenvalues) - 2 * a * g.num_edges) < 1e-9
        if a >= 0.5:
            assert min(rep.eigenvalues) > -1e-9
        p = charpoly_at(g, Fraction(a).limit_denominator(10 ** 6))
        # clusters vs exact multiplicities at a rational alpha
        aq = Fraction(r.randint(0, 8), 8)
        rep = eigenvalues(g, aq)
        mults = sorted(k for _, k in rep.clusters)
        exact = []
        for f, k in exact_multiplicities(g, aq):
            exact.extend([k] * f.degree)
        assert mults == sorted(exact)
        pe = charpoly_at(g, aq)
        for v in rep.eigenvalues:
            assert abs(pe.eval_float(v)) < 1e-6 * (1 + max(1, abs(v)) ** g.n)


def test_batched_spectra_match():
    gs = enumerate_graphs(6)
    spec = alpha_spectra(gs, 0.3)
    for g, row in zip(gs[::17], spec[::17]):
        assert np.allclose(row, eigenvalues(g, 0.3).eigenvalues, atol=1e-10)


def test_cluster():
    assert cluster([2.0, 1.0 + 1e-10, 1.0, -3.0]) == [(2.0, 1), (pytest.approx(1.0), 2), (-3.0, 1)]


# ---- exact root facts

def test_roots_above_and_radius_compare():
    p = charpoly_at(star(5), 0)   # roots 2, 0, 0, 0, -2
    assert roots_above(p, -3) == 5 and roots_above(p, 0) == 1 and roots_above(p, Fraction(-1)) == 4
    assert compare_spectral_radius(star(5), path(5), Fraction(1, 2)) == 1
    assert compare_spectral_radius(cycle(5), cycle(6), Fraction(1, 3)) == 0
    assert compare_spectral_radius(path(5), cycle(5), 0) == -1


# ---- invariants

def test_invariant_examples():
    inv = invariants_from_charpoly(charpoly_at(path(3), Fraction(1, 2)), Fraction(1, 2))
    assert (inv.n, inv.m, inv.sum_sq_degrees) == (3, 2, 6)
    inv = invariants_from_charpoly(charpoly_at(complete(4), Fraction(1, 3)), Fraction(1, 3))
    assert (inv.n, inv.m, inv.sum_sq_degrees) == (4, 6, 36)
    inv0 = invariants_from_charpoly(charpoly_at(complete(4), 0), 0)
    assert inv0.m == 6 and inv0.sum_sq_degrees is None
    a, b = star(5), disjoint_union([cycle(4), empty(1)])
    assert invariants_from_charpoly(charpoly_at(a, 0), 0) == invariants_from_charpoly(charpoly_at(b, 0), 0)
    with pytest.raises(NotACharpolyError):
        invariants_from_charpoly(RatPoly.from_desc([1, -1, 0]), Fraction(1, 3))


def test_invariant_identity_random():
    r = random.Random(14)
    for _ in range(60):
        g = random_graph(r.randint(1, 9), rng=r)
        a = Fraction(r.randint(1, 9), 10)
        inv = invariants_from_charpoly(charpoly_at(g, a), a)
        d = g.degrees()
        assert inv.m == g.num_edges
        assert inv.sum_sq_degrees == sum(v * v for v in d)
        assert (2 * inv.m) ** 2 == inv.sum_sq_degrees + 2 * inv.sum_pair_products


def test_regularity_examples():
    assert regularity_from_spectrum(charpoly_at(cycle(5), Fraction(2, 3)), Fraction(2, 3)) == 2
    assert regularity_from_spectrum(charpoly_at(star(5), Fraction(1, 4)), Fraction(1, 4)) is None
    assert regularity_from_spectrum(charpoly_at(complete(4), 0), 0) == 3


def test_regularity_agrees_with_graph_n_le_6():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            for a in (Fraction(0), Fraction(3, 5)):
                assert regularity_from_spectrum(charpoly_at(g, a), a) == is_regular(g)


def test_regular_shift_property_sample():
    for g in (cycle(6), complete(4), disjoint_union([cycle(3), cycle(4)])):
        r = is_regular(g)
        base = np.array(eigenvalues(g, 0).eigenvalues)
        for a in (0.25, 0.75):
            assert np.allclose(eigenvalues(g, a).eigenvalues, a * r + (1 - a) * base, atol=1e-9)


def test_mode():
    assert Mode.symbolic_mode().symbolic and str(Mode()) == "symbolic"
    m = Mode.fixed("3/4")
    assert m.alpha == Fraction(3, 4) and m.kind == "fixed"
    with pytest.raises(ValueError):
        Mode.fixed(2)
