"""A_alpha matrices, exact characteristic polynomials and numerical spectra.

The exact routes:

* ``charpoly_exact``: Faddeev-LeVerrier over Z[a].  Every entry of
  ``A_alpha`` is ``c0 + c1*a`` with integer ``c0, c1``, so the iterates stay in
  Z[a] and each division by ``k`` is exact.  ``charpoly_bareiss`` computes the
  same determinant by fraction-free elimination over Z[x, a]; the test-suite
  checks one against the other.
* ``charpoly_at``: Faddeev-LeVerrier over the integers on ``q*A_alpha`` for
  ``alpha = p/q``, rescaled afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactpoly import BivarPoly, RatPoly, as_rational, zp_trim
from .graph import Graph

DEFAULT_TOL = 1e-10
CLUSTER_TOL = 1e-8
EXACT_MAX_ORDER = 12


class ConvergenceError(RuntimeError):
    pass


class SizeBoundError(ValueError):
    pass


class NotACharpolyError(ValueError):
    """Extracted invariants are not integral, so the input is no graph charpoly."""


def _check_alpha(alpha) -> Fraction:
    alpha = as_rational(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


@dataclass(frozen=True)
class Mode:
    """Cospectrality mode: exact equality in Z[x, a] (alpha None) or at one rational alpha."""

    alpha: Fraction | None = None

    def __post_init__(self):
        if self.alpha is not None:
            object.__setattr__(self, "alpha", _check_alpha(self.alpha))

    @classmethod
    def symbolic_mode(cls) -> "Mode":
        return cls(None)

    @classmethod
    def fixed(cls, alpha) -> "Mode":
        return cls(as_rational(alpha))

    @property
    def symbolic(self) -> bool:
        return self.alpha is None

    @property
    def kind(self) -> str:
        return "symbolic" if self.alpha is None else "fixed"

    def __str__(self):
        return "symbolic" if self.alpha is None else f"fixed({self.alpha})"


# ------------------------------------------------------------------ matrices


@dataclass(frozen=True)
class AlphaMatrix:
    n: int
    alpha: Fraction
    entries: tuple[tuple[Fraction, ...], ...]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries])

    def scaled(self, k) -> list[list[Fraction]]:
        return [[k * v for v in row] for row in self.entries]


def a_alpha_matrix(g: Graph, alpha) -> AlphaMatrix:
    alpha = _check_alpha(alpha)
    deg = g.degrees()
    off = 1 - alpha
    rows = []
    for i in range(g.n):
        ri = g.rows[i]
        rows.append(tuple(
            alpha * deg[i] if i == j else (off if (ri >> j) & 1 else Fraction(0))
            for j in range(g.n)
        ))
    return AlphaMatrix(g.n, alpha, tuple(rows))


def a_alpha_float(g: Graph, alpha: float) -> np.ndarray:
    adj = np.array(g.adjacency_matrix(), dtype=float)
    return alpha * np.diag(adj.sum(axis=1)) + (1.0 - alpha) * adj


def adjacency_stack(graphs: Sequence[Graph]) -> np.ndarray:
    """(N, n, n) float array of adjacency matrices; all graphs must share n."""
    if not graphs:
        return np.zeros((0, 0, 0))
    n = graphs[0].n
    bits = np.array([g.rows for g in graphs], dtype=np.uint64)
    shifts = np.arange(n, dtype=np.uint64)
    return ((bits[:, :, None] >> shifts[None, None, :]) & np.uint64(1)).astype(float)


def alpha_spectra(graphs: Sequence[Graph], alpha: float) -> np.ndarray:
    """Eigenvalues (non-increasing) of A_alpha for many same-order graphs at once."""
    adj = adjacency_stack(graphs)
    if adj.size == 0:
        return np.zeros((len(graphs), graphs[0].n if graphs else 0))
    deg = adj.sum(axis=2)
    mats = (1.0 - alpha) * adj
    idx = np.arange(adj.shape[1])
    mats[:, idx, idx] = alpha * deg
    return np.linalg.eigvalsh(mats)[:, ::-1]


# ------------------------------------------------------------------ exact charpolys


def _linear_entries(g: Graph, minus_ones: bool = False):
    """Sparse rows of A_alpha (or A_alpha - J) as [(col, c0, c1)] meaning c0 + c1*a."""
    deg = g.degrees()
    out = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                c0, c1 = 0, deg[i]
            elif (g.rows[i] >> j) & 1:
                c0, c1 = 1, -1
            else:
                c0, c1 = 0, 0
            if minus_ones:
                c0 -= 1
            if c0 or c1:
                row.append((j, c0, c1))
        out.append(row)
    return out


def _leverrier_zalpha(n: int, rows) -> list[tuple[int, ...]]:
    """Faddeev-LeVerrier over Z[a]; returns coefficients of x^0..x^n as Z[a] tuples."""
    width = n + 2
    # N is stored as n*n lists of length `width` (dense in a)
    N = [[[1 if (i == j and t == 0) else 0 for t in range(width)] for j in range(n)] for i in range(n)]
    coeffs = [None] * (n + 1)
    coeffs[n] = (1,)
    for k in range(1, n + 1):
        AN = []
        for i in range(n):
            out_row = []
            ri = rows[i]
            for j in range(n):
                acc = [0] * width
                for l, c0, c1 in ri:
                    v = N[l][j]
                    if c0:
                        for t in range(width - 1):
                            if v[t]:
                                acc[t] += c0 * v[t]
                    if c1:
                        for t in range(width - 1):
                            if v[t]:
                                acc[t + 1] += c1 * v[t]
                out_row.append(acc)
            AN.append(out_row)
        tr = [0] * width
        for i in range(n):
            d = AN[i][i]
            for t in range(width):
                tr[t] += d[t]
        ck = []
        for t in range(width):
            q, r = divmod(-tr[t], k)
            if r:
                raise ArithmeticError("non-integral Faddeev-LeVerrier step")
            ck.append(q)
        coeffs[n - k] = zp_trim(ck)
        if k < n:
            for i in range(n):
                d = AN[i][i]
                for t in range(width):
                    d[t] += ck[t]
            N = AN
    return coeffs


def _check_size(g: Graph, max_order: int):
    if g.n > max_order:
        raise SizeBoundError(f"order {g.n} exceeds the exact-arithmetic bound {max_order}")


def charpoly_exact(g: Graph, max_order: int = EXACT_MAX_ORDER) -> BivarPoly:
    """det(x I - A_alpha(G)) in Z[x, a]."""
    _check_size(g, max_order)
    return BivarPoly.from_x_coeffs(_leverrier_zalpha(g.n, _linear_entries(g)))


def charpoly_minus_ones(g: Graph, max_order: int = EXACT_MAX_ORDER) -> BivarPoly:
    """det(x I - A_alpha(G) + J), the companion determinant used for coronals."""
    _check_size(g, max_order)
    return BivarPoly.from_x_coeffs(_leverrier_zalpha(g.n, _linear_entries(g, minus_ones=True)))


def charpoly_bareiss(g: Graph, max_order: int = EXACT_MAX_ORDER) -> BivarPoly:
    """det(x I - A_alpha(G)) by fraction-free elimination over Z[x, a]."""
    _check_size(g, max_order)
    n = g.n
    x = BivarPoly.x()
    a = BivarPoly.alpha()
    deg = g.degrees()
    edge = a - 1  # -(1 - a)
    M = [[(x - deg[i] * a) if i == j else (edge if g.adjacent(i, j) else BivarPoly())
          for j in range(n)] for i in range(n)]
    return bareiss_det(M)


def bareiss_det(M: list[list[BivarPoly]]) -> BivarPoly:
    n = len(M)
    M = [row[:] for row in M]
    sign = 1
    prev = BivarPoly.const(1)
    for k in range(n - 1):
        if M[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not M[r][k].is_zero()), None)
            if swap is None:
                return BivarPoly()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]).exact_div(prev)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def _leverrier_int(n: int, rows) -> list[int]:
    """Faddeev-LeVerrier over Z for a sparse integer matrix; coefficients x^0..x^n."""
    N = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        AN = []
        for i in range(n):
            acc = [0] * n
            for l, c in rows[i]:
                Nl = N[l]
                for j in range(n):
                    acc[j] += c * Nl[j]
            AN.append(acc)
        tr = sum(AN[i][i] for i in range(n))
        ck, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = ck
        if k < n:
            for i in range(n):
                AN[i][i] += ck
            N = AN
    return coeffs


def scaled_int_charpoly(g: Graph, alpha) -> tuple[int, ...]:
    """Integer coefficients (x^0..x^n) of det(y I - q*A_alpha) where alpha = p/q."""
    alpha = _check_alpha(alpha)
    p, q = alpha.numerator, alpha.denominator
    deg = g.degrees()
    rows = []
    for i in range(g.n):
        row = [(i, p * deg[i])] if deg[i] and p else []
        if q != p:
            row.extend((j, q - p) for j in range(g.n) if (g.rows[i] >> j) & 1)
        rows.append(row)
    return tuple(_leverrier_int(g.n, rows))


def charpoly_at(g: Graph, alpha) -> RatPoly:
    """det(x I - A_alpha(G)) at a fixed rational alpha."""
    alpha = _check_alpha(alpha)
    q = alpha.denominator
    c = scaled_int_charpoly(g, alpha)
    n = g.n
    return RatPoly([Fraction(c[k] * q**k, q**n) for k in range(n + 1)])


def charpoly_in_mode(g: Graph, mode: Mode, max_order: int = EXACT_MAX_ORDER) -> BivarPoly | RatPoly:
    if mode.symbolic:
        return charpoly_exact(g, max_order)
    return charpoly_at(g, mode.alpha)


# ------------------------------------------------------------------ numerics


def jacobi_eigenvalues(mat, tol: float = DEFAULT_TOL, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Stops once the Frobenius norm of the off-diagonal part is at most ``tol``;
    by Weyl's inequality each returned value is then within ``tol`` of an
    eigenvalue (up to rounding).  Returned non-increasing.
    """
    a = np.array(mat, dtype=float, copy=True)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(a[iu] ** 2)))
        if off <= tol:
            return np.sort(a.diagonal())[::-1].copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + math.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not reach tol={tol} within {max_sweeps} sweeps")


def cluster(values: Sequence[float], tol: float = CLUSTER_TOL) -> list[tuple[float, int]]:
    """Merge consecutive sorted values closer than tol; returns (mean, count)."""
    out: list[list] = []
    for v in values:
        if out and abs(out[-1][2] - v) <= tol:
            out[-1][0] += v
            out[-1][1] += 1
            out[-1][2] = v
        else:
            out.append([v, 1, v])
    return [(s / k, k) for s, k, _ in out]


@dataclass
class SpectrumReport:
    alpha: float
    eigenvalues: list[float]
    clusters: list[tuple[float, int]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "eigenvalues": list(self.eigenvalues),
            "clusters": [{"value": v, "multiplicity": k} for v, k in self.clusters],
        }


def eigenvalues(g: Graph, alpha, tol: float = DEFAULT_TOL, cluster_tol: float = CLUSTER_TOL) -> SpectrumReport:
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    vals = jacobi_eigenvalues(a_alpha_float(g, a), tol=tol)
    vals = [float(v) for v in vals]
    return SpectrumReport(a, vals, cluster(vals, cluster_tol))


def spectral_radius(g: Graph, alpha, tol: float = 1e-12) -> float:
    return eigenvalues(g, alpha, tol=tol).eigenvalues[0]


# ------------------------------------------------------------------ exact root facts


def roots_above(p: RatPoly, t) -> int:
    """Number of roots (with multiplicity) strictly greater than t.

    Exact for real-rooted p (every charpoly of a symmetric matrix): Descartes'
    rule of signs counts positive roots exactly when all roots are real.
    """
    q = p.shift(-as_rational(t))  # q(y) = p(y + t)
    coeffs = [c for c in q.c if c != 0]
    return sum(1 for u, v in zip(coeffs, coeffs[1:]) if (u < 0) != (v < 0))


def exact_multiplicities(g: Graph, alpha) -> list[tuple[RatPoly, int]]:
    """Square-free decomposition of charpoly_at(g, alpha)."""
    return charpoly_at(g, alpha).squarefree_factors()


# ------------------------------------------------------------------ invariants


@dataclass
class InvariantReport:
    n: int
    m: int
    sum_sq_degrees: int | None
    sum_pair_products: int | None
    regular_r: int | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "sum_sq_degrees": self.sum_sq_degrees,
            "sum_pair_products": self.sum_pair_products,
            "regular_r": self.regular_r,
        }


def _integral(v: Fraction, what: str) -> int:
    if v.denominator != 1:
        raise NotACharpolyError(f"{what} = {v} is not an integer")
    return v.numerator


def _edge_count(p: RatPoly, alpha: Fraction) -> int:
    n = p.degree
    if alpha > 0:
        m = _integral(-p.coeff(n - 1) / (2 * alpha), "edge count")
    else:
        m = _integral(-p.coeff(n - 2), "edge count") if n >= 2 else 0
    if m < 0 or m > n * (n - 1) // 2:
        raise NotACharpolyError(f"edge count {m} impossible on {n} vertices")
    return m


def invariants_from_charpoly(p: RatPoly, alpha) -> InvariantReport:
    """Degree moments readable off the top three coefficients.

    With ``x^n + a1 x^{n-1} + a2 x^{n-2} + ...``: ``a1 = -2*alpha*m`` and
    ``a2 = alpha^2 * sum_{i<j} d_i d_j - (1-alpha)^2 * m``.  At alpha = 0 the
    degree moments are invisible and are reported as None.
    """
    alpha = _check_alpha(alpha)
    n = p.degree
    if n < 1 or p.lead() != 1:
        raise NotACharpolyError("characteristic polynomials are monic of degree >= 1")
    m = _edge_count(p, alpha)
    if alpha == 0:
        if p.coeff(n - 1) != 0:
            raise NotACharpolyError("A_0 has zero trace")
        pairs = sq = None
    else:
        pairs = _integral((p.coeff(n - 2) + (1 - alpha) ** 2 * m) / alpha**2, "sum of degree pair products")
        sq = 4 * m * m - 2 * pairs
        if sq < 0:
            raise NotACharpolyError("negative sum of squared degrees")
    r = regularity_from_spectrum(p, alpha) if alpha < 1 else None
    return InvariantReport(n, m, sq, pairs, r)


def regularity_from_spectrum(p: RatPoly, alpha) -> int | None:
    """r if the spectrum certifies an r-regular graph, else None.

    The largest eigenvalue of A_alpha (alpha < 1) is at least the average row
    sum 2m/n, with equality only for regular graphs.  So r = 2m/n must be an
    integer, a root, and no root may exceed it.
    """
    alpha = _check_alpha(alpha)
    if alpha >= 1:
        raise ValueError("regularity is not readable from the spectrum at alpha = 1")
    n = p.degree
    m = _edge_count(p, alpha)
    r = Fraction(2 * m, n)
    if r.denominator != 1 or p(r) != 0 or roots_above(p, r) != 0:
        return None
    return r.numerator


def _radius_bracket(p: RatPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    # one bisection step on the largest root, kept inside (lo, hi]
    mid = (lo + hi) / 2
    return (mid, hi) if roots_above(p, mid) >= 1 else (lo, mid)


def compare_spectral_radius(g: Graph, h: Graph, alpha, max_steps: int = 400) -> int:
    """Exact sign of lambda_1(A_alpha(g)) - lambda_1(A_alpha(h)).

    Bisection on rational brackets (lambda_1 lies in [0, max degree]) using
    the exact root count, until the brackets are disjoint.  Brackets that stay
    overlapping are settled by the gcd: a shared largest root means equality.
    """
    alpha = _check_alpha(alpha)
    p, q = charpoly_at(g, alpha), charpoly_at(h, alpha)
    top = Fraction(max(max(g.degrees()), max(h.degrees()), 1))
    a, b = (Fraction(-1), top), (Fraction(-1), top)
    for _ in range(max_steps):
        if a[0] >= b[1]:
            return 1
        if b[0] >= a[1]:
            return -1
        a, b = _radius_bracket(p, *a), _radius_bracket(q, *b)
        if a[1] - a[0] < Fraction(1, 1 << 80):
            common = p.gcd(q)
            if common.degree > 0 and roots_above(common, max(a[0], b[0])) >= 1:
                return 0
    raise ConvergenceError("spectral radii not separated")
