"""Partition graphs into A_alpha-cospectral classes.

Two stages.  A float pre-pass sorts graphs by one scalar of their numerical
spectrum and chains neighbours closer than PREPASS_TOL (single linkage, so
graphs with equal spectra always land in one group).  Groups of size one are
done; larger groups are split by exact characteristic polynomial.

In symbolic mode the pre-pass runs at one sample alpha: equal bivariate
charpolys give equal spectra at every alpha, so the filter stays sound.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
import xxhash

from ..exactpoly import BivarPoly, RatPoly
from ..graph import Graph, parse_graph6, to_graph6
from ..spectra import Mode, alpha_spectra, charpoly_exact, scaled_int_charpoly
from .canon import canonical_form
from .enumerate import enumerate_graphs

PREPASS_TOL = 1e-8
SYMBOLIC_SAMPLE_ALPHA = 0.3819660112501051  # 2 - golden ratio, any interior point works


# ------------------------------------------------------------------ fingerprints


def _int_bytes(v: int) -> bytes:
    raw = v.to_bytes((v.bit_length() + 8) // 8 or 1, "big", signed=True)
    return len(raw).to_bytes(4, "big") + raw


def exact_key(g: Graph, mode: Mode):
    """Hashable exact charpoly key; equal keys iff equal charpolys (same n)."""
    if mode.symbolic:
        return tuple(sorted(charpoly_exact(g, max_order=64).terms().items()))
    return scaled_int_charpoly(g, mode.alpha)


def encode_key(n: int, key, mode: Mode) -> bytes:
    """Length-prefixed big-endian encoding of the exact coefficients."""
    out = [b"S" if mode.symbolic else b"F", _int_bytes(n)]
    if not mode.symbolic:
        out += [_int_bytes(mode.alpha.numerator), _int_bytes(mode.alpha.denominator)]
    out.append(_int_bytes(len(key)))
    for item in key:
        if mode.symbolic:
            (dx, da), c = item
            out += [_int_bytes(dx), _int_bytes(da), _int_bytes(c)]
        else:
            out.append(_int_bytes(item))
    return b"".join(out)


@dataclass(frozen=True)
class Fingerprint:
    mode: Mode
    key: bytes  # 16-byte xxh3-128 digest of the coefficient encoding

    @classmethod
    def of(cls, g: Graph, mode: Mode, key=None) -> "Fingerprint":
        key = exact_key(g, mode) if key is None else key
        return cls(mode, xxhash.xxh3_128_digest(encode_key(g.n, key, mode)))

    @property
    def hex(self) -> str:
        return self.key.hex()


def render_key(n: int, key, mode: Mode) -> str:
    if mode.symbolic:
        return BivarPoly(dict(key)).render()
    # key holds det(yI - qA); x = y/q
    q = mode.alpha.denominator
    return RatPoly([Fraction(c, q ** (n - i)) for i, c in enumerate(key)]).render()


@dataclass
class CospectralClass:
    fingerprint: Fingerprint
    members: list[str]          # graph6, sorted
    n: int
    charpoly: str = ""
    key: tuple = field(default=(), repr=False)

    def to_json(self) -> dict:
        mode = self.fingerprint.mode
        return {
            "mode": mode.kind,
            "alpha": None if mode.symbolic else str(mode.alpha),
            "fingerprint": self.fingerprint.hex,
            "members": list(self.members),
            "charpoly": self.charpoly,
        }

    def graphs(self) -> list[Graph]:
        return [parse_graph6(s) for s in self.members]


# ------------------------------------------------------------------ pre-pass


def _scalar_batch(rows_list: list[tuple[int, ...]], alpha: float) -> np.ndarray:
    if not rows_list:
        return np.zeros(0)
    n = len(rows_list[0])
    graphs = [Graph._trusted(n, r) for r in rows_list]
    spec = alpha_spectra(graphs, alpha)
    w = 1.0 + np.arange(n) / max(n, 1)
    return spec @ w


def _prepass_groups(graphs: Sequence[Graph], alpha: float, jobs: int) -> list[list[int]]:
    """Index groups that might share a spectrum (never separating equal spectra)."""
    rows = [g.rows for g in graphs]
    chunk = 20000
    parts = [rows[i:i + chunk] for i in range(0, len(rows), chunk)]
    if jobs > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            vals = list(ex.map(_scalar_batch, parts, [alpha] * len(parts)))
    else:
        vals = [_scalar_batch(p, alpha) for p in parts]
    s = np.concatenate(vals) if vals else np.zeros(0)
    order = np.argsort(s, kind="stable")
    groups, cur = [], [int(order[0])] if len(order) else []
    for a, b in zip(order, order[1:]):
        if s[b] - s[a] <= PREPASS_TOL * max(1.0, abs(s[a])):
            cur.append(int(b))
        else:
            groups.append(cur)
            cur = [int(b)]
    if cur:
        groups.append(cur)
    return groups


# ------------------------------------------------------------------ classes


def _local_map(items: list[tuple[int, tuple[int, ...]]], mode: Mode) -> dict:
    """Shard worker: exact key -> sorted graph6 members."""
    out: dict = defaultdict(list)
    for n, rows in items:
        g = Graph._trusted(n, rows)
        out[(n, exact_key(g, mode))].append(to_graph6(g))
    return dict(out)


def merge_maps(maps: Iterable[dict]) -> dict:
    """Associative, commutative merge of shard class maps."""
    out: dict = defaultdict(list)
    for m in maps:
        for k, v in m.items():
            out[k].extend(v)
    return {k: sorted(v) for k, v in out.items()}


def _build(classes: dict, mode: Mode) -> list[CospectralClass]:
    out = []
    for (n, key), members in classes.items():
        fp = Fingerprint.of(Graph._trusted(n, (0,) * n), mode, key)
        out.append(CospectralClass(fp, members, n, render_key(n, key, mode), key))
    out.sort(key=lambda c: (c.n, c.members[0]))
    return out


def cospectral_classes(graphs: Iterable[Graph], mode: Mode, jobs: int = 1,
                       prepass: bool = True, singletons: bool = True) -> list[CospectralClass]:
    """Partition ``graphs`` by exact charpoly equality in ``mode``.

    With ``singletons=False`` only classes of two or more graphs are returned
    and pre-pass singletons skip exact work entirely.  The result does not
    depend on ``jobs``.
    """
    by_n: dict[int, list[Graph]] = defaultdict(list)
    for g in graphs:
        by_n[g.n].append(g)
    sample = SYMBOLIC_SAMPLE_ALPHA if mode.symbolic else float(mode.alpha)
    work: list[tuple[int, tuple[int, ...]]] = []
    for n in sorted(by_n):
        gs = by_n[n]
        if prepass:
            groups = _prepass_groups(gs, sample, jobs)
        else:
            groups = [list(range(len(gs)))]
        for grp in groups:
            if len(grp) > 1 or singletons:
                work.extend((n, gs[i].rows) for i in grp)
    if jobs > 1 and len(work) > 64:
        k = max(1, len(work) // (jobs * 4))
        shards = [work[i:i + k] for i in range(0, len(work), k)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            maps = list(ex.map(_local_map, shards, [mode] * len(shards)))
    else:
        maps = [_local_map(work, mode)]
    merged = merge_maps(maps)
    if not singletons:
        merged = {k: v for k, v in merged.items() if len(v) > 1}
    return _build(merged, mode)


# ------------------------------------------------------------------ mates


@lru_cache(maxsize=None)
def _mate_index(n: int, mode: Mode, jobs: int = 1) -> dict[bytes, tuple[bytes, ...]]:
    """Canonical form -> canonical forms of its class, for non-trivial classes on n vertices."""
    index: dict[bytes, tuple[bytes, ...]] = {}
    for cls in cospectral_classes(enumerate_graphs(n, jobs=jobs), mode, jobs=jobs, singletons=False):
        forms = tuple(sorted(canonical_form(g) for g in cls.graphs()))
        for f in forms:
            index[f] = forms
    return index


def find_mates(target: Graph, mode: Mode, jobs: int = 1) -> list[Graph]:
    """Non-isomorphic graphs on target.n vertices sharing target's charpoly in ``mode``."""
    me = canonical_form(target)
    forms = _mate_index(target.n, mode, max(1, jobs)).get(me, ())
    return [parse_graph6(f.decode()) for f in forms if f != me]


# ------------------------------------------------------------------ store


def write_class_store(path: str | os.PathLike, classes: Iterable[CospectralClass]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for c in classes:
            fh.write(json.dumps(c.to_json(), sort_keys=True) + "\n")


def read_class_store(path: str | os.PathLike) -> list[dict]:
    with open(path, encoding="ascii") as fh:
        return [json.loads(line) for line in fh if line.strip()]
