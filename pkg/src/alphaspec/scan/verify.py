"""Theorem-verification suites over exhaustively enumerated small graphs.

Every suite returns a VerificationReport.  A failing report always carries
counterexamples a reader can re-check: graph6 strings plus the alpha and the
numbers (or polynomials) that broke the claim.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Sequence

from ..exactpoly import BivarPoly, as_rational
from ..graph import (
    Graph,
    complement,
    complete,
    complete_split,
    cycle,
    disjoint_union,
    empty,
    friendship,
    join,
    km_path,
    matching_plus_isolates,
    path,
    star,
    to_graph6,
    wheel,
)
from ..joins import (
    CospectralCertificate,
    forge_cospectral_pair,
    join_charpoly_regular,
    verify_certificate,
)
from ..spectra import (
    Mode,
    a_alpha_float,
    charpoly_at,
    charpoly_exact,
    compare_spectral_radius,
    jacobi_eigenvalues,
    roots_above,
)
from .classes import cospectral_classes, find_mates
from .enumerate import enumerate_graphs, enumerate_regular

DEFAULT_TOL = 1e-9
INTERIOR_01 = (Fraction(1, 4), Fraction(2, 5))    # claims on [0,1) or (0,1]
INTERIOR_HALF_1 = (Fraction(3, 5), Fraction(3, 4))  # claims on (1/2,1)


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    status: str = "pass"
    counterexamples: list[dict] = field(default_factory=list)
    timing: float = 0.0
    notes: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, cex: dict):
        self.status = "fail"
        self.counterexamples.append(cex)

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "parameters": self.parameters,
            "status": self.status,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if include_timing:
            out["timing"] = round(self.timing, 6)
        return out


def _alphas(alphas) -> list[Fraction]:
    return [as_rational(a) for a in alphas]


def _lam1(g: Graph, alpha) -> float:
    return float(jacobi_eigenvalues(a_alpha_float(g, float(alpha)), tol=1e-13)[0])


# ------------------------------------------------------------------ families


def _cycle_partitions(n: int, smallest: int = 3) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for first in range(smallest, n + 1):
        for rest in _cycle_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _cycle_union(parts: Sequence[int]) -> Graph:
    return disjoint_union([cycle(k) for k in parts])


def _instances(name: str, n: int) -> list[tuple[str, Graph]]:
    if name == "path":
        return [(f"P{n}", path(n))]
    if name == "complete":
        return [(f"K{n}", complete(n))]
    if name == "star":
        return [(f"K1,{n - 1}", star(n))] if n >= 2 else []
    if name == "cycles":
        return [("U".join(f"C{k}" for k in p), _cycle_union(p)) for p in _cycle_partitions(n)]
    if name == "cycles_complement":
        return [("co(" + "U".join(f"C{k}" for k in p) + ")", complement(_cycle_union(p)))
                for p in _cycle_partitions(n)]
    if name == "matching":
        return [(f"{k}K2U{n - 2 * k}K1", matching_plus_isolates(n, k)) for k in range(1, n // 2 + 1)]
    if name == "matching_complement":
        return [(f"co({k}K2U{n - 2 * k}K1)", complement(matching_plus_isolates(n, k)))
                for k in range(1, n // 2 + 1)]
    if name == "complement_path":
        return [(f"co(P{n})", complement(path(n)))]
    if name == "wheel":
        return [(f"W{n}", wheel(n))] if n >= 4 else []
    if name == "friendship":
        return [(f"F{(n - 1) // 2}", friendship((n - 1) // 2))] if n >= 3 and n % 2 else []
    if name == "complete_split":
        return [(f"CS({m},{n - m})", complete_split(m, n - m)) for m in range(1, n)]
    if name == "km_path":
        return [(f"K{m}vP{n - m}", km_path(m, n - m)) for m in range(1, n)]
    raise KeyError(name)


# interval on which the DS claim is made: (lo, lo_closed, hi, hi_closed)
FAMILY_CLAIMS: dict[str, tuple] = {
    "complete": (0, True, 1, True),
    "star": (0, False, 1, True),
    "path": (0, True, 1, False),
    "cycles": (0, True, 1, False),
    "cycles_complement": (0, True, 1, False),
    "matching": (0, True, 1, True),
    "matching_complement": (0, True, 1, True),
    "complement_path": (0, True, 1, False),
    "wheel": (Fraction(1, 2), False, 1, False),
    "friendship": (Fraction(1, 2), False, 1, False),
    "complete_split": (Fraction(1, 2), False, 1, False),
    "km_path": (Fraction(1, 2), False, 1, False),
}
DS_FAMILIES = tuple(FAMILY_CLAIMS)


def in_claim(name: str, alpha: Fraction) -> bool:
    lo, lo_c, hi, hi_c = FAMILY_CLAIMS[name]
    return (lo < alpha or (lo_c and alpha == lo)) and (alpha < hi or (hi_c and alpha == hi))


def family_members(name: str, n_range: Iterable[int]) -> list[tuple[str, Graph]]:
    out = []
    for n in n_range:
        out.extend(_instances(name, n))
    return out


def verify_ds(family: str, n_range: Iterable[int], alphas=None, mode: str = "fixed",
              jobs: int = 1) -> VerificationReport:
    """Pass iff no member of ``family`` has a cospectral mate at any alpha in the set.

    ``mode='symbolic'`` asks for mates in Z[x, a] instead (then ``alphas`` is ignored).
    """
    n_range = list(n_range)
    alphas = _alphas(alphas if alphas is not None else INTERIOR_01)
    modes = [Mode.symbolic_mode()] if mode == "symbolic" else [Mode.fixed(a) for a in alphas]
    rep = VerificationReport("ds", {"family": family, "n": [min(n_range), max(n_range)],
                                    "mode": mode,
                                    "alpha": [str(a) for a in alphas] if mode != "symbolic" else None})
    t0 = time.perf_counter()
    members = family_members(family, n_range)
    for md in modes:
        if not md.symbolic and not in_claim(family, md.alpha):
            rep.notes.append(f"alpha={md.alpha} lies outside the claimed interval for {family}")
        for label, g in members:
            rep.checked += 1
            mates = find_mates(g, md, jobs=jobs)
            if mates:
                rep.fail({"graph": label, "g6": to_graph6(g),
                          "alpha": None if md.symbolic else str(md.alpha),
                          "mates": [to_graph6(h) for h in mates]})
    rep.timing = time.perf_counter() - t0
    return rep


# ------------------------------------------------------------------ lemmas


def _le31(rep, n_range, alphas, tol, exact=False):
    for n in n_range:
        for n1 in range(3, n + 1):
            for n2 in range(n1, n - n1 + 1):
                h = n - n1 - n2
                tails = [("", None)] if h == 0 else [(f"U{h}K1", empty(h)), (f"UP{h}", path(h))]
                for tag, H in tails:
                    extra = [] if H is None else [H]
                    g1 = complement(disjoint_union([cycle(n1), cycle(n2)] + extra))
                    g2 = complement(disjoint_union([cycle(n1 + n2)] + extra))
                    for a in alphas:
                        rep.checked += 1
                        l1, l2 = _lam1(g1, a), _lam1(g2, a)
                        if abs(l1 - l2) > tol:
                            rep.fail({"left": f"co(C{n1}UC{n2}{tag})", "right": f"co(C{n1 + n2}{tag})",
                                      "left_g6": to_graph6(g1), "right_g6": to_graph6(g2),
                                      "alpha": str(a), "lambda1_left": l1, "lambda1_right": l2})


def _le32(rep, n_range, alphas, tol, exact=False):
    for n in n_range:
        cp = complement(path(n))
        for k in range(2, n - 2):
            g = complement(disjoint_union([path(k), cycle(n - k)]))
            for a in alphas:
                rep.checked += 1
                lp, lg = _lam1(cp, a), _lam1(g, a)
                margin = lp - lg if k % 2 == 0 else lg - lp
                if not margin > tol and exact:
                    want = 1 if k % 2 == 0 else -1
                    if compare_spectral_radius(cp, g, a) == want:
                        rep.notes.append(f"n={n} k={k} alpha={a}: margin {margin:.3g} <= tol, "
                                         "direction certified exactly")
                        continue
                if not margin > tol:
                    rep.fail({"n": n, "k": k, "alpha": str(a), "g6": to_graph6(g),
                              "lambda1_complement_path": lp, "lambda1_g": lg,
                              "expected": "co(Pn) larger" if k % 2 == 0 else "co(Pn) smaller"})


def dominating_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == g.n - 1)


def indices_at_value(g: Graph, alpha: Fraction, t: Fraction) -> tuple[int, int]:
    """(first, count): eigenvalue positions k (1-based, non-increasing) with lambda_k == t, exactly."""
    p = charpoly_at(g, alpha)
    return roots_above(p, t) + 1, p.root_multiplicity(t)


def _lem21(rep, n_range, alphas, tol, exact=False):
    for n in n_range:
        for g in enumerate_graphs(n):
            d = dominating_count(g)
            for a in alphas:
                rep.checked += 1
                t = a * n - 1
                first, mult = indices_at_value(g, a, t)
                ks = {k for k in range(first, first + mult) if k >= 2}
                expect = set(range(2, d + 1))
                if ks != expect:
                    rep.fail({"g6": to_graph6(g), "alpha": str(a), "value": str(t),
                              "indices": sorted(ks), "dominating_vertices": d})


def _claim1(rep, n_range, alphas, tol, exact=False, ms=(1, 2)):
    for m in ms:
        km = complete(m)
        for n in n_range:
            for n1 in range(3, n + 1):
                for n2 in range(n1, n - n1 + 1):
                    h = n - n1 - n2
                    tail = [path(h)] if h else []
                    g1 = join(km, disjoint_union([cycle(n1), cycle(n2)] + tail))
                    g2 = join(km, disjoint_union([cycle(n1 + n2)] + tail))
                    for a in alphas:
                        rep.checked += 1
                        l1, l2 = _lam1(g1, a), _lam1(g2, a)
                        if abs(l1 - l2) > tol:
                            rep.fail({"m": m, "n": n, "n1": n1, "n2": n2, "alpha": str(a),
                                      "left_g6": to_graph6(g1), "right_g6": to_graph6(g2),
                                      "lambda1_left": l1, "lambda1_right": l2})


def _claim2(rep, n_range, alphas, tol, exact=False, ms=(1, 2)):
    for m in ms:
        km = complete(m)
        for n in n_range:
            base = km_path(m, n)
            for k in range(3, n):
                g = join(km, disjoint_union([cycle(k), path(n - k)]))
                for a in alphas:
                    rep.checked += 1
                    lg, lb = _lam1(g, a), _lam1(base, a)
                    if not lg - lb > tol and exact and compare_spectral_radius(g, base, a) == 1:
                        rep.notes.append(f"m={m} n={n} k={k} alpha={a}: margin {lg - lb:.3g} <= tol, "
                                         "direction certified exactly")
                        continue
                    if not lg - lb > tol:
                        rep.fail({"m": m, "n": n, "k": k, "alpha": str(a), "g6": to_graph6(g),
                                  "lambda1_g": lg, "lambda1_km_path": lb})


LEMMAS: dict[str, tuple[Callable, tuple, Sequence]] = {
    # id: (checker, default n range, default alphas)
    "le3.1": (_le31, (7, 12), (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))),
    "le3.2": (_le32, (7, 12), (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))),
    "lem2.1": (_lem21, (1, 7), INTERIOR_HALF_1),
    "claim1": (_claim1, (3, 8), INTERIOR_HALF_1),
    "claim2": (_claim2, (3, 8), INTERIOR_HALF_1),
}


def verify_lemma(lemma: str, n_range: Iterable[int] | None = None, alphas=None,
                 tol: float = DEFAULT_TOL, exact: bool = False) -> VerificationReport:
    """Check one lemma over its parameter grid.

    Strict inequalities need a numerical margin above ``tol``.  With
    ``exact=True`` a smaller margin is accepted when exact root isolation
    confirms the direction; each such case is listed in the notes.
    """
    try:
        checker, (lo, hi), default_alphas = LEMMAS[lemma]
    except KeyError:
        raise ValueError(f"unknown lemma {lemma!r}; choose from {sorted(LEMMAS)}") from None
    n_range = list(n_range) if n_range is not None else list(range(lo, hi + 1))
    alphas = _alphas(alphas if alphas is not None else default_alphas)
    rep = VerificationReport(lemma, {"n": [min(n_range), max(n_range)],
                                     "alpha": [str(a) for a in alphas], "tol": tol,
                                     "exact": exact})
    t0 = time.perf_counter()
    checker(rep, n_range, alphas, tol, exact)
    rep.timing = time.perf_counter() - t0
    if lemma == "lem2.1":
        rep.notes.append("eigenvalue positions certified exactly: root multiplicity at a*n-1 "
                         "and a Descartes count of larger roots")
    return rep


# ------------------------------------------------------------------ regular graphs


def regular_graphs(n: int) -> list[Graph]:
    out = []
    for r in range(n):
        out.extend(enumerate_regular(n, r))
    return out


def regular_cospectral_pairs(n_range: Iterable[int], mode: Mode | None = None) -> list[tuple[Graph, Graph]]:
    """Non-isomorphic cospectral pairs among regular graphs, smallest order first.

    Regular graphs are cospectral for one alpha in [0,1) iff for all, so the
    default mode (alpha = 0) loses nothing.
    """
    mode = mode or Mode.fixed(0)
    pairs = []
    for n in n_range:
        for cls in cospectral_classes(regular_graphs(n), mode, singletons=False):
            gs = cls.graphs()
            for i in range(len(gs)):
                for j in range(i + 1, len(gs)):
                    pairs.append((gs[i], gs[j]))
    return pairs


def smallest_regular_cospectral_pair(max_n: int = 10, mode: Mode | None = None,
                                     min_n: int = 1) -> tuple[Graph, Graph] | None:
    for n in range(min_n, max_n + 1):
        pairs = regular_cospectral_pairs([n], mode)
        if pairs:
            return pairs[0]
    return None


CONTROL_FACTORS = (("K1", complete(1)), ("K2", complete(2)), ("2K1", empty(2)))


def forge_positive_control(h1: Graph, h2: Graph, mode: Mode,
                           factors=CONTROL_FACTORS) -> list[tuple[str, CospectralCertificate, bool]]:
    out = []
    for label, g in factors:
        cert = forge_cospectral_pair(g, h1, h2, mode)
        out.append((label, cert, verify_certificate(cert)))
    return out


def verify_regular_ds_transfer(n_range: Iterable[int] = range(1, 8), alphas=None,
                               ms: Sequence[int] = (1, 2, 3), max_total: int = 8,
                               control_max_n: int = 10, jobs: int = 1) -> VerificationReport:
    """Regular g without mates must give g v K_m without mates.

    The positive control searches regular graphs up to ``control_max_n`` for
    a cospectral pair and forges joined pairs from it.
    """
    n_range = list(n_range)
    alphas = _alphas(alphas if alphas is not None else INTERIOR_HALF_1)
    rep = VerificationReport("transfer", {"n": [min(n_range), max(n_range)], "m": list(ms),
                                          "max_total": max_total,
                                          "alpha": [str(a) for a in alphas],
                                          "control_max_n": control_max_n})
    t0 = time.perf_counter()
    for a in alphas:
        mode = Mode.fixed(a)
        for n in n_range:
            for g in regular_graphs(n):
                if find_mates(g, mode, jobs=jobs):
                    continue  # not DS: the theorem says nothing
                for m in ms:
                    if n + m > max_total:
                        continue
                    gk = join(g, complete(m))
                    rep.checked += 1
                    mates = find_mates(gk, mode, jobs=jobs)
                    if mates:
                        rep.fail({"g6": to_graph6(g), "m": m, "alpha": str(a),
                                  "join_g6": to_graph6(gk), "mates": [to_graph6(h) for h in mates]})
    mode = Mode.fixed(alphas[0])
    pair = smallest_regular_cospectral_pair(control_max_n, mode)
    if pair is None:
        rep.notes.append(f"no regular cospectral pair on at most {control_max_n} vertices")
    else:
        h1, h2 = pair
        rep.notes.append(f"smallest regular cospectral pair has {h1.n} vertices: "
                         f"{to_graph6(h1)} {to_graph6(h2)}")
        for label, cert, ok in forge_positive_control(h1, h2, mode):
            rep.checked += 1
            if not ok:
                rep.fail({"control": label, **cert.to_json()})
    rep.timing = time.perf_counter() - t0
    return rep


# ------------------------------------------------------------------ corollary regression


def verify_corollary_regression(max_n: int = 6) -> VerificationReport:
    """Regular-join formula with the (1-a)^2 weight against direct determinants.

    Also records that the unweighted cross term disagrees for K1 v K1 at a = 1/2.
    """
    rep = VerificationReport("corollary-regression", {"max_n": max_n})
    t0 = time.perf_counter()
    regs = [g for n in range(1, max_n + 1) for g in regular_graphs(n)]
    polys = {g: charpoly_exact(g) for g in regs}
    for g1 in regs:
        for g2 in regs:
            if g1.n + g2.n > max_n + 2 or to_graph6(g1) > to_graph6(g2):
                continue
            rep.checked += 1
            r1, r2 = g1.degrees()[0], g2.degrees()[0]
            got = join_charpoly_regular(g1.n, r1, polys[g1], g2.n, r2, polys[g2])
            want = charpoly_exact(join(g1, g2))
            if got != want:
                rep.fail({"left_g6": to_graph6(g1), "right_g6": to_graph6(g2),
                          "formula": got.render(), "determinant": want.render()})
    k1 = complete(1)
    x = BivarPoly.x()
    printed = join_charpoly_regular(1, 0, x, 1, 0, x, weighted_cross_term=False)
    direct = charpoly_exact(join(k1, k1))
    half = Fraction(1, 2)
    rep.checked += 1
    if printed.eval_alpha(half) == direct.eval_alpha(half):
        rep.fail({"note": "unweighted cross term unexpectedly agrees at a=1/2",
                  "formula": printed.render()})
    else:
        rep.notes.append(f"unweighted cross term at K1 v K1: {printed.render()} "
                         f"vs determinant {direct.render()}")
    rep.timing = time.perf_counter() - t0
    return rep


# ------------------------------------------------------------------ integer program


def min_square_degree_sequences(n: int) -> list[tuple[int, ...]]:
    """All minimisers of sum a_i^2 over a_i in [0, n-1] with sum (n-2)(n-1), by brute force.

    Sequences are returned sorted non-increasing (each optimum up to order).
    """
    if n < 4:
        raise ValueError("needs n >= 4")
    total = (n - 2) * (n - 1)
    best, sols = None, []
    for seq in combinations_with_replacement(range(n - 1, -1, -1), n):
        if sum(seq) != total:
            continue
        v = sum(a * a for a in seq)
        if best is None or v < best:
            best, sols = v, [seq]
        elif v == best:
            sols.append(seq)
    return sols
