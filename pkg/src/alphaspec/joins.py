"""Coronals, join characteristic polynomials and cospectral pairs built from joins.

The coronal of a square matrix M is the sum of the entries of (xI - M)^{-1}.
For B = xI - A_alpha it is computed without inversion through

    1^T adj(B) 1 = det(B + J) - det(B),

so both pieces are characteristic polynomials (of A_alpha and A_alpha - J).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactpoly import BivarPoly, RatFunc, RatPoly
from .graph import Graph, join, to_graph6
from .scan.canon import canonical_form
from .spectra import (
    EXACT_MAX_ORDER,
    Mode,
    charpoly_exact,
    charpoly_in_mode,
    charpoly_minus_ones,
)

X = BivarPoly.x()
ALPHA = BivarPoly.alpha()
ONE_MINUS_ALPHA_SQ = (1 - ALPHA) ** 2


class PreconditionError(ValueError):
    """Inputs to the cospectral forge do not satisfy its hypotheses."""

    def __init__(self, msg, details=None):
        super().__init__(msg)
        self.details = details or {}


def coronal(g: Graph, max_order: int = EXACT_MAX_ORDER) -> RatFunc:
    """Coronal of A_alpha(g) as a reduced rational function in x and a."""
    p = charpoly_exact(g, max_order)
    return RatFunc(charpoly_minus_ones(g, max_order) - p, p)


def coronal_in_mode(g: Graph, mode: Mode, max_order: int = EXACT_MAX_ORDER) -> RatFunc:
    if mode.symbolic:
        return coronal(g, max_order)
    p = charpoly_exact(g, max_order)
    q = charpoly_minus_ones(g, max_order)
    return RatFunc((q - p).eval_alpha(mode.alpha), p.eval_alpha(mode.alpha))


def _shift(n_other: int) -> BivarPoly:
    # x -> x - alpha * n_other
    return X - n_other * ALPHA


def join_charpoly(g1: Graph, g2: Graph, max_order: int = EXACT_MAX_ORDER) -> BivarPoly:
    """Characteristic polynomial of A_alpha(g1 v g2) from the two factors alone."""
    n1, n2 = g1.n, g2.n
    p1 = charpoly_exact(g1, max_order).subs_x(_shift(n2))
    p2 = charpoly_exact(g2, max_order).subs_x(_shift(n1))
    c1 = coronal(g1, max_order).subs_x(_shift(n2))
    c2 = coronal(g2, max_order).subs_x(_shift(n1))
    balance = 1 - RatFunc(ONE_MINUS_ALPHA_SQ, normalize=False) * c1 * c2
    out = RatFunc(p1 * p2, normalize=False) * balance
    if not out.is_polynomial():
        raise ArithmeticError("coronal denominators failed to clear")
    return out.num


def join_charpoly_regular(n1: int, r1: int, p1: BivarPoly, n2: int, r2: int, p2: BivarPoly,
                          weighted_cross_term: bool = True) -> BivarPoly:
    """Join charpoly for an r1-regular and an r2-regular factor.

    The quadratic factor is (x - a*n2 - r1)(x - a*n1 - r2) - (1-a)^2 n1 n2.
    ``weighted_cross_term=False`` drops the (1-a)^2 weight; that variant is
    wrong for every a != 0 and exists only so tests can exhibit the failure.
    """
    l1 = X - n2 * ALPHA - r1
    l2 = X - n1 * ALPHA - r2
    cross = n1 * n2 * (ONE_MINUS_ALPHA_SQ if weighted_cross_term else BivarPoly.const(1))
    f = l1 * l2 - cross
    top = p1.subs_x(_shift(n2)) * p2.subs_x(_shift(n1))
    try:
        body = top.exact_div(l1 * l2)
    except ArithmeticError as exc:
        raise ValueError("inputs are not characteristic polynomials of regular graphs "
                         f"with the stated degrees r1={r1}, r2={r2}") from exc
    return body * f


# ------------------------------------------------------------------ forge


@dataclass
class CospectralCertificate:
    left: Graph
    right: Graph
    shared_charpoly: BivarPoly | RatPoly
    mode: Mode
    coronal_left: RatFunc | None = None
    coronal_right: RatFunc | None = None

    def to_json(self) -> dict:
        out = {
            "mode": self.mode.kind,
            "left_g6": to_graph6(self.left),
            "right_g6": to_graph6(self.right),
            "charpoly": self.shared_charpoly.render(),
            "coronal_left": self.coronal_left.render() if self.coronal_left is not None else None,
            "coronal_right": self.coronal_right.render() if self.coronal_right is not None else None,
        }
        if not self.mode.symbolic:
            out["alpha"] = str(self.mode.alpha)
        return out


def verify_certificate(cert: CospectralCertificate, max_order: int = 16) -> bool:
    """Independent check by direct determinants of both sides."""
    pl = charpoly_in_mode(cert.left, cert.mode, max_order)
    pr = charpoly_in_mode(cert.right, cert.mode, max_order)
    return (pl == pr == cert.shared_charpoly
            and canonical_form(cert.left) != canonical_form(cert.right))


def _check_pair(a: Graph, b: Graph, mode: Mode, what: str, max_order: int):
    pa, pb = charpoly_in_mode(a, mode, max_order), charpoly_in_mode(b, mode, max_order)
    if pa != pb:
        raise PreconditionError(f"{what} are not cospectral ({mode.kind})",
                                {"charpoly_left": pa.render(), "charpoly_right": pb.render()})
    ca, cb = coronal_in_mode(a, mode, max_order), coronal_in_mode(b, mode, max_order)
    if ca != cb:
        raise PreconditionError(f"{what} have different coronals ({mode.kind})",
                                {"coronal_left": ca.render(), "coronal_right": cb.render()})
    return ca


def forge_cospectral_pair(g: Graph, h1: Graph, h2: Graph, mode: Mode | None = None,
                          g_right: Graph | None = None,
                          max_order: int = 16) -> CospectralCertificate:
    """Certificate that g v h1 and g' v h2 are A_alpha-cospectral.

    ``g_right`` (default ``g``) lets both factors vary; it must then be
    cospectral with ``g`` and share its coronal, like ``h1`` and ``h2``.
    """
    mode = mode or Mode.symbolic_mode()
    g_right = g if g_right is None else g_right
    _check_pair(h1, h2, mode, "h1 and h2", max_order)
    if g_right is not g:
        _check_pair(g, g_right, mode, "g and g_right", max_order)
    left, right = join(g, h1), join(g_right, h2)
    if canonical_form(left) == canonical_form(right):
        raise PreconditionError("the two joins are isomorphic", {"g6": to_graph6(left)})
    shared = join_charpoly(g, h1, max_order)
    if not mode.symbolic:
        shared = shared.eval_alpha(mode.alpha)
    cl = coronal_in_mode(left, mode, max_order)
    cr = coronal_in_mode(right, mode, max_order)
    return CospectralCertificate(left, right, shared, mode, cl, cr)


def iterated_join(h: Graph, times: int) -> Graph:
    out = h
    for _ in range(times - 1):
        out = join(out, h)
    return out

