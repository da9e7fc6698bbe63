"""Bitset-backed undirected simple graphs with graph6 interchange.

Vertices are 0..n-1 with n capped at 64, so every neighbourhood fits in a
single Python int used as a bitmask.  All constructors keep the adjacency
relation symmetric and loop-free; Graph instances are immutable and hashable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(GraphError):
    """Malformed graph6 text; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def iter_bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int):
        return iter_bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            upper = self.rows[u] >> (u + 1)
            for off in iter_bits(upper):
                out.append((u, u + 1 + off))
        return out

    def vertices(self) -> range:
        return range(self.n)


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an iterable of endpoint pairs.

    Duplicate pairs collapse; loops and out-of-range endpoints are rejected.
    """
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex permutation: new vertex perm[v] takes v's role."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel requires a permutation of 0..n-1")
    rows = [0] * g.n
    for v in range(g.n):
        acc = 0
        for u in iter_bits(g.rows[v]):
            acc |= 1 << perm[u]
        rows[perm[v]] = acc
    return Graph(g.n, tuple(rows))


# -- graph6 ------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word (strict: minimal header, zero padding)."""
    data = text.rstrip("\r\n")
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    first = ord(data[0])
    if first == 126:
        # long-form size header: '~' then three 6-bit digits
        if len(data) >= 2 and ord(data[1]) == 126:
            raise Graph6Error("vertex counts above 258047 are unsupported", 1)
        if len(data) < 4:
            raise Graph6Error("truncated size header", len(data))
        n = 0
        for k in (1, 2, 3):
            c = ord(data[k])
            if not 63 <= c <= 126:
                raise Graph6Error(f"character {data[k]!r} out of graph6 range", k)
            n = (n << 6) | (c - 63)
        if n <= 62:
            raise Graph6Error("non-minimal size header", 0)
        start = 4
    else:
        if not 63 <= first <= 125:
            raise Graph6Error(f"character {data[0]!r} out of graph6 range", 0)
        n = first - 63
        start = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - start < nbytes:
        raise Graph6Error("truncated edge data", len(data))
    if len(data) - start > nbytes:
        raise Graph6Error("trailing garbage after edge data", start + nbytes)

    rows = [0] * n
    k = 0  # bit cursor over the upper triangle, column-major
    i, j = 0, 1
    for pos in range(start, start + nbytes):
        c = ord(data[pos])
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {data[pos]!r} out of graph6 range", pos)
        group = c - 63
        for shift in (5, 4, 3, 2, 1, 0):
            bit = group >> shift & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", pos)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Encode to the minimal graph6 word (inverse of parse_graph6)."""
    n = g.n
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12 & 63) + 63) + chr((n >> 6 & 63) + 63) + chr((n & 63) + 63)
    chunks = []
    group, filled = 0, 0
    for j in range(1, n):
        for i in range(j):
            group = group << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        chunks.append(chr((group << (6 - filled)) + 63))
    return head + "".join(chunks)


# -- generators --------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside supported range")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle graphs need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides of a complete bipartite graph must be nonempty")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner 5-cycle 5..9 at step 2, spokes i--i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return from_edges(10, edges)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a fixed edge scan order, reproducible from the seed."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(n, edges)


# -- structure queries -------------------------------------------------

def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph is undefined")
    return min(r.bit_count() for r in g.rows)


def _component_masks(rows, alive: int) -> list[int]:
    comps = []
    rem = alive
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= rows[low.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def components(g: Graph, removed=()) -> tuple[int, dict[int, int]]:
    """Component count and labels of the graph with `removed` deleted.

    Labels map each surviving vertex to a component id; components are
    numbered 0.. in order of their smallest vertex.
    """
    rm = mask_of(removed)
    if rm & ~g.full_mask:
        raise GraphError("removed set contains vertices outside the graph")
    labels: dict[int, int] = {}
    for idx, comp in enumerate(_component_masks(g.rows, g.full_mask & ~rm)):
        for v in iter_bits(comp):
            labels[v] = idx
    return (max(labels.values()) + 1 if labels else 0), labels


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(_component_masks(g.rows, g.full_mask)) == 1


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests."""
    best: int | None = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in iter_bits(g.rows[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u] and dist[w] >= dist[u]:
                        # non-tree edge closes a cycle through the root side
                        cand = dist[u] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
            frontier = nxt
    return best


def is_petersen(g: Graph) -> bool:
    """Invariant test: 10 vertices, 15 edges, 3-regular, girth 5.

    That combination pins down a unique graph, so no isomorphism search
    is needed here.
    """
    if g.n != 10 or g.m != 15:
        return False
    if any(g.degree(v) != 3 for v in range(10)):
        return False
    return girth(g) == 5
