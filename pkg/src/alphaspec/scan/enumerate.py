"""One graph per isomorphism class, by canonical augmentation.

Children of a parent P on n-1 vertices add vertex n-1 with neighbourhood
``mask``; only one mask per Aut(P)-orbit is tried.  A child is kept iff the
new vertex lies in the automorphism orbit of the child's canonical deletion
vertex: the vertex of largest (degree, sorted neighbour degrees) that sits
last in the canonical labelling of the coloured child.  With parents one per
class this yields every class exactly once.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from ..graph import Graph, complement, read_graph6_file, write_graph6_file
from .canon import _orbits, canonical_graph, canonical_labelling

MAX_ENUM_ORDER = 10

# graphs on n unlabelled vertices, n = 1..10
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168}


class EnumerationRangeError(ValueError):
    pass


def _mask_orbit_reps(m: int, gens: Sequence[tuple[int, ...]]) -> list[int]:
    size = 1 << m
    if not gens:
        return list(range(size))
    parent = list(range(size))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for gamma in gens:
        for mask in range(size):
            img = 0
            x = mask
            while x:
                low = x & -x
                img |= 1 << gamma[low.bit_length() - 1]
                x ^= low
            a, b = find(mask), find(img)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [mask for mask in range(size) if find(mask) == mask]


def _vertex_invariants(rows: Sequence[int]) -> list[tuple]:
    deg = [r.bit_count() for r in rows]
    out = []
    for v, r in enumerate(rows):
        nd = []
        while r:
            low = r & -r
            nd.append(deg[low.bit_length() - 1])
            r ^= low
        nd.sort()
        out.append((deg[v], tuple(nd)))
    return out


def _accept(rows: tuple[int, ...]) -> bool:
    n = len(rows)
    new = n - 1
    inv = _vertex_invariants(rows)
    top = max(inv)
    if inv[new] != top:
        return False
    tied = [v for v in range(n) if inv[v] == top]
    if len(tied) == 1:
        return True
    values = sorted(set(inv))
    cells = [[v for v in range(n) if inv[v] == val] for val in values]
    lab = canonical_labelling(Graph._trusted(n, rows), initial=cells)
    last = lab.perm[-1]
    if last == new:
        return True
    orb = _orbits(n, lab.generators)
    return orb[last] == orb[new]


def _extend(parent_rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    m = len(parent_rows)
    gens = canonical_labelling(Graph._trusted(m, parent_rows)).generators if m else []
    out = []
    for mask in _mask_orbit_reps(m, gens):
        rows = tuple(r | (((mask >> i) & 1) << m) for i, r in enumerate(parent_rows)) + (mask,)
        if _accept(rows):
            out.append(rows)
    return out


def _extend_shard(shard: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out = []
    for rows in shard:
        out.extend(_extend(rows))
    return out


def _default_cache_dir() -> Path | None:
    env = os.environ.get("ALPHASPEC_CACHE")
    return Path(env) if env else None


def generate(parents: Sequence[Graph], jobs: int = 1) -> list[Graph]:
    """All children of the given parents (one per class if parents are one per class)."""
    parent_rows = [g.rows for g in parents]
    if jobs <= 1 or len(parent_rows) < 2 * jobs:
        children = _extend_shard(parent_rows)
    else:
        k = max(1, len(parent_rows) // (jobs * 8))
        shards = [parent_rows[i:i + k] for i in range(0, len(parent_rows), k)]
        children = []
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_extend_shard, shards):
                children.extend(part)
    return [Graph._trusted(len(r), r) for r in children]


@lru_cache(maxsize=None)
def _enumerate_cached(n: int, cache_dir: str | None, jobs: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    path = Path(cache_dir) / f"graphs{n}.g6" if cache_dir else None
    if path is not None and path.exists():
        graphs = read_graph6_file(path)
        if len(graphs) == KNOWN_COUNTS[n]:
            return tuple(graphs)
    graphs = generate(_enumerate_cached(n - 1, cache_dir, jobs), jobs)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        write_graph6_file(tmp, graphs)
        tmp.replace(path)
    return tuple(graphs)


def enumerate_graphs(n: int, jobs: int = 1, cache_dir: str | os.PathLike | None = None) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices (1 <= n <= 10).

    ``cache_dir`` (or the ALPHASPEC_CACHE environment variable) stores and
    re-reads graph6 catalogs; a catalog with the wrong count is regenerated.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise EnumerationRangeError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    cd = cache_dir if cache_dir is not None else _default_cache_dir()
    return list(_enumerate_cached(n, str(cd) if cd else None, max(1, jobs)))


def load_catalog(paths: Iterable[str | os.PathLike]) -> list[Graph]:
    out: list[Graph] = []
    for p in paths:
        out.extend(read_graph6_file(p))
    return out


def _regular_labelled(n: int, r: int):
    """Backtracking over labelled r-regular graphs with cheap symmetry breaking.

    Vertex 0 is joined to 1..r.  Vertex 1 then takes the lowest-numbered
    vertices from {2..r} and from {r+1..n-1}: both blocks are still
    interchangeable when vertex 1 is processed.
    """
    rows = [0] * n
    resid = [r] * n

    def link(u, v):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        resid[u] -= 1
        resid[v] -= 1

    def unlink(u, v):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        resid[u] += 1
        resid[v] += 1

    def fill(i):
        if i == n:
            yield tuple(rows)
            return
        need = resid[i]
        if need == 0:
            yield from fill(i + 1)
            return
        cand = [j for j in range(i + 1, n) if resid[j] > 0 and not (rows[i] >> j) & 1]
        if len(cand) < need:
            return
        yield from choose(i, cand, 0, need)

    def choose(i, cand, start, need):
        if need == 0:
            if all(resid[j] <= n - 2 - i for j in range(i + 1, n)):
                yield from fill(i + 1)
            return
        for k in range(start, len(cand) - need + 1):
            j = cand[k]
            link(i, j)
            yield from choose(i, cand, k + 1, need - 1)
            unlink(i, j)

    if r == 0:
        yield tuple(rows)
        return
    if r >= n:
        return
    for v in range(1, r + 1):
        link(0, v)
    inner = list(range(2, r + 1))
    outer = list(range(r + 1, n))
    for a in range(0, min(len(inner), r - 1) + 1):
        b = r - 1 - a
        if b > len(outer):
            continue
        chosen = inner[:a] + outer[:b]
        for j in chosen:
            link(1, j)
        yield from fill(2)
        for j in chosen:
            unlink(1, j)


def enumerate_regular(n: int, r: int) -> list[Graph]:
    """One representative per isomorphism class of r-regular graphs on n vertices.

    Independent of ``enumerate_graphs`` and not bound by MAX_ENUM_ORDER;
    labelled backtracking followed by canonical-form deduplication.
    """
    if n < 1 or r < 0 or r >= n or (n * r) % 2:
        return []
    return list(_regular_cached(n, r))


@lru_cache(maxsize=None)
def _regular_cached(n: int, r: int) -> tuple[Graph, ...]:
    if 2 * r > n - 1:
        return tuple(complement(g) for g in _regular_cached(n, n - 1 - r))
    seen: dict[tuple[int, ...], Graph] = {}
    for rows in _regular_labelled(n, r):
        c = canonical_graph(Graph._trusted(n, rows))
        seen.setdefault(c.rows, c)
    return tuple(seen[k] for k in sorted(seen))
