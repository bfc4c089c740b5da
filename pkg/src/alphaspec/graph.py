"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bitmask per vertex (bit ``j`` of
``rows[i]`` is set iff ``i ~ j``).  Graphs are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    pass


class OrderLimitError(GraphError):
    """Vertex count outside 1..64."""


class Graph6Error(GraphError):
    pass


class Graph6HeaderError(Graph6Error):
    pass


class Graph6TruncatedError(Graph6Error):
    pass


class Graph6OrderError(Graph6Error, OrderLimitError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise OrderLimitError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("need exactly n adjacency rows")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full or (r >> i) & 1:
                raise GraphError(f"row {i} has loop or out-of-range bit")
            for j in _bits(r):
                if not (self.rows[j] >> i) & 1:
                    raise GraphError(f"asymmetric adjacency at ({i}, {j})")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee a symmetric loop-free rows tuple
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, mat: Sequence[Sequence[int]]) -> "Graph":
        n = len(mat)
        rows = tuple(sum(1 << j for j in range(n) if mat[i][j]) for i in range(n))
        return cls(n, rows)

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.rows[i]))

    def degrees(self) -> list[int]:
        """Degrees in vertex order (not sorted)."""
        return [r.bit_count() for r in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, r in enumerate(self.rows):
            for j in _bits(r >> (i + 1)):
                yield i, i + 1 + j

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def induced(self, verts: Sequence[int]) -> "Graph":
        idx = {v: k for k, v in enumerate(verts)}
        return Graph.from_edges(
            len(verts),
            ((idx[u], idx[v]) for u, v in self.edges() if u in idx and v in idx),
        )

    def __repr__(self):
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ---------------------------------------------------------------- graph6


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126), chr(((n >> 12) & 63) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    acc, nbits = 0, 0
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6HeaderError("empty graph6 record")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise Graph6HeaderError(f"non-graph6 character in {s!r}")
    if codes[0] < 63:
        n, body = codes[0], codes[1:]
    elif len(codes) >= 4 and codes[1] < 63:
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    elif len(codes) >= 8 and codes[1] == 63:
        n = 0
        for c in codes[2:8]:
            n = (n << 6) | c
        body = codes[8:]
    else:
        raise Graph6HeaderError(f"malformed order header in {s!r}")
    if n > MAX_ORDER:
        raise Graph6OrderError(f"order exceeds limit: {n} > {MAX_ORDER}")
    if n == 0:
        raise Graph6OrderError("order exceeds limit: empty graphs unsupported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise Graph6TruncatedError(f"truncated bit field: need {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6HeaderError(f"trailing data after {need} bytes of bit field")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_file(path) -> list[Graph]:
    """One record per line; blank lines and a ``>>graph6<<`` prefix are skipped."""
    out = []
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(parse_graph6(line))
    return out


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


# ---------------------------------------------------------------- operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    gs = list(gs)
    if not gs:
        raise GraphError("disjoint_union needs at least one graph")
    total = sum(g.n for g in gs)
    if total > MAX_ORDER:
        raise OrderLimitError(f"union has {total} vertices, limit is {MAX_ORDER}")
    rows: list[int] = []
    off = 0
    for g in gs:
        rows.extend(r << off for r in g.rows)
        off += g.n
    return Graph(total, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_ORDER:
        raise OrderLimitError(f"join has {n1 + n2} vertices, limit is {MAX_ORDER}")
    right = ((1 << n2) - 1) << n1
    left = (1 << n1) - 1
    rows = [r | right for r in g1.rows] + [(r << n1) | left for r in g2.rows]
    return Graph(n1 + n2, tuple(rows))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))


def is_regular(g: Graph) -> int | None:
    d = g.degrees()
    return d[0] if all(x == d[0] for x in d) else None


# ---------------------------------------------------------------- families
#
# Vertex orderings:
#   path(n)            0-1-...-(n-1)
#   cycle(n)           path plus edge (n-1, 0)
#   star(n)            centre 0, leaves 1..n-1
#   complete_split(m, s)   clique 0..m-1, independent set m..m+s-1
#   friendship(k)      centre 0, triangles {0, 2i+1, 2i+2}
#   wheel(n)           hub 0, rim 1..n-1 in cycle order
#   matching_plus_isolates(n, k)   edges (2i, 2i+1) for i < k, rest isolated
#   km_path(m, s)      clique 0..m-1 joined to path m..m+s-1


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def star(n: int) -> Graph:
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_split(m: int, s: int) -> Graph:
    if m < 1 or s < 1:
        raise GraphError("complete_split needs m >= 1 and s >= 1")
    return join(complete(m), empty(s))


def matching_plus_isolates(n: int, k: int) -> Graph:
    if not 0 <= 2 * k <= n:
        raise GraphError(f"cannot place {k} disjoint edges on {n} vertices")
    return Graph.from_edges(n, ((2 * i, 2 * i + 1) for i in range(k)))


def friendship(k: int) -> Graph:
    if k < 1:
        raise GraphError("friendship needs k >= 1")
    return join(empty(1), matching_plus_isolates(2 * k, k))


def wheel(n: int) -> Graph:
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    return join(empty(1), cycle(n - 1))


def km_path(m: int, s: int) -> Graph:
    return join(complete(m), path(s))


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "empty": empty,
    "complete_split": complete_split,
    "friendship": friendship,
    "wheel": wheel,
    "matching_plus_isolates": matching_plus_isolates,
    "km_path": km_path,
}

FAMILY_NAMES = tuple(_FAMILIES)


def family(name: str, *params: int) -> Graph:
    try:
        ctor = _FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {name}: {params}") from exc
