"""Canonical labelling by partition refinement and backtracking.

Search tree: each node is an equitable ordered partition; children
individualize one vertex of the first non-singleton cell.  A leaf is a
discrete partition, i.e. a relabelling, and its certificate is the tuple of
relabelled adjacency rows.  The canonical form is the largest certificate.

Two prunings, both driven by automorphisms discovered on the way (a leaf whose
certificate equals an earlier one gives an automorphism):

* after such a leaf, jump back to the deepest node shared with that earlier
  leaf, since the rest of the current subtree is an image of explored ground;
* at a node with individualized prefix P, skip a child in the same orbit as an
  explored sibling under the automorphisms found so far that fix P pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, to_graph6


def _refine(rows, cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    """Coarsest equitable refinement of ``cells``; queue holds splitter bitmasks."""
    cells = [c for c in cells]
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        i = 0
        while i < len(cells):
            c = cells[i]
            if len(c) == 1:
                i += 1
                continue
            counts = [(rows[v] & w).bit_count() for v in c]
            first = counts[0]
            if all(k == first for k in counts):
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v, k in zip(c, counts):
                groups.setdefault(k, []).append(v)
            frags = [groups[k] for k in sorted(groups)]
            cells[i:i + 1] = frags
            for f in frags:
                m = 0
                for v in f:
                    m |= 1 << v
                queue.append(m)
            i += len(frags)
    return cells


@dataclass
class Labelling:
    perm: list[int]                   # canonical position -> vertex
    certificate: tuple[int, ...]      # relabelled rows
    generators: list[tuple[int, ...]]  # automorphisms found (vertex -> image)

    def orbits(self, n: int) -> list[int]:
        return _orbits(n, self.generators)


def _orbits(n: int, gens) -> list[int]:
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def canonical_labelling(g: Graph, initial: list[list[int]] | None = None) -> Labelling:
    """Canonical relabelling of g.

    ``initial`` is an optional ordered vertex colouring (list of cells); the
    result is then canonical for coloured graphs.
    """
    n = g.n
    rows = g.rows
    cells0 = [list(c) for c in initial] if initial else [list(range(n))]
    queue = []
    for c in cells0:
        m = 0
        for v in c:
            m |= 1 << v
        queue.append(m)
    root = _refine(rows, cells0, queue)

    state = {"best": None, "best_perm": None, "best_path": None,
             "first": None, "first_perm": None, "first_path": None}
    autos: list[tuple[int, ...]] = []

    def leaf(cells, path) -> int:
        perm = [c[0] for c in cells]
        inv = [0] * n
        for pos, v in enumerate(perm):
            inv[v] = pos
        cert = []
        for v in perm:
            r = rows[v]
            out = 0
            while r:
                low = r & -r
                out |= 1 << inv[low.bit_length() - 1]
                r ^= low
            cert.append(out)
        cert = tuple(cert)
        depth = len(path)
        if state["first"] is None:
            state.update(first=cert, first_perm=perm, first_path=path,
                         best=cert, best_perm=perm, best_path=path)
            return depth
        for key in ("first", "best"):
            if cert == state[key]:
                ref = state[key + "_perm"]
                gamma = [0] * n
                for a, b in zip(ref, perm):
                    gamma[a] = b
                gamma = tuple(gamma)
                if any(gamma[v] != v for v in range(n)):
                    autos.append(gamma)
                ref_path = state[key + "_path"]
                k = 0
                while k < len(path) and k < len(ref_path) and path[k] == ref_path[k]:
                    k += 1
                return k
        if cert > state["best"]:
            state.update(best=cert, best_perm=perm, best_path=path)
        return depth

    def dfs(cells, path) -> int:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return leaf(cells, path)
        depth = len(path)
        cell = cells[target]
        explored: list[int] = []
        for w in sorted(cell):
            if explored:
                gens = [a for a in autos if all(a[p] == p for p in path)]
                if gens:
                    orb = _orbits(n, gens)
                    if any(orb[w] == orb[e] for e in explored):
                        continue
            explored.append(w)
            rest = [v for v in cell if v != w]
            child = cells[:target] + [[w], rest] + cells[target + 1:]
            child = _refine(rows, child, [1 << w])
            back = dfs(child, path + [w])
            if back < depth:
                return back
        return depth

    dfs(root, [])
    return Labelling(state["best_perm"], state["best"], autos)


def canonical_graph(g: Graph) -> Graph:
    return Graph._trusted(g.n, canonical_labelling(g).certificate)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (graph6 of the canonical relabelling)."""
    return to_graph6(canonical_graph(g)).encode("ascii")


def automorphism_orbits(g: Graph) -> list[int]:
    return canonical_labelling(g).orbits(g.n)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)
