"""Exact graph invariants: connectivity, toughness, circumference, paths.

Everything here is exact.  Toughness is a reduced rational (or infinite, for
complete graphs), cycle and path lengths come from exhaustive branch-and-bound
search, and each nontrivial result carries a witness that can be revalidated
against the graph.  The exponential searches refuse inputs above a caller
adjustable cap instead of silently truncating.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphError, iter_bits, mask_of

DEFAULT_EXACT_LIMIT = 16
DEFAULT_PATH_CAP = 512


class ResourceLimitError(GraphError):
    """Exact search refused because the input exceeds the configured cap."""


def _check_cap(size: int, max_n: int | None, what: str) -> None:
    if max_n is not None and size > max_n:
        raise ResourceLimitError(
            f"{what} is capped at {max_n} vertices (got {size}); pass a larger max_n to override"
        )


# -- witness types -----------------------------------------------------

@dataclass(frozen=True, slots=True)
class OrientedCycle:
    """A simple cycle as a vertex sequence; the closing edge is implicit."""

    verts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.verts)

    def validate(self, g: Graph) -> None:
        vs = self.verts
        if len(vs) < 3:
            raise GraphError(f"cycle needs at least 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise GraphError("cycle repeats a vertex")
        for i, u in enumerate(vs):
            w = vs[(i + 1) % len(vs)]
            if not (0 <= u < g.n) or not g.has_edge(u, w):
                raise GraphError(f"cycle step {u}->{w} is not an edge")

    def canonical(self) -> "OrientedCycle":
        fwd = _least_rotation(self.verts)
        rev = _least_rotation(tuple(reversed(self.verts)))
        return OrientedCycle(min(fwd, rev))

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.verts)}


def _least_rotation(t: tuple[int, ...]) -> tuple[int, ...]:
    i = t.index(min(t))
    return t[i:] + t[:i]


@dataclass(frozen=True, slots=True)
class Path:
    """A simple path as a vertex sequence; a single vertex has length 0."""

    verts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.verts) - 1

    @property
    def x(self) -> int:
        return self.verts[0]

    @property
    def y(self) -> int:
        return self.verts[-1]

    def validate(self, g: Graph) -> None:
        vs = self.verts
        if not vs:
            raise GraphError("empty path")
        if len(set(vs)) != len(vs):
            raise GraphError("path repeats a vertex")
        for u, w in zip(vs, vs[1:]):
            if not g.has_edge(u, w):
                raise GraphError(f"path step {u}->{w} is not an edge")

    def canonical(self) -> "Path":
        rev = tuple(reversed(self.verts))
        return Path(min(self.verts, rev))


@dataclass(frozen=True, slots=True)
class Toughness:
    """min |S| / components(G - S); None value means infinite (complete graph)."""

    value: Fraction | None
    witness_cut: frozenset[int] | None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def at_least(self, bound) -> bool:
        return self.value is None or self.value >= bound

    def exceeds(self, bound) -> bool:
        return self.value is None or self.value > bound

    def __str__(self) -> str:
        if self.value is None:
            return "inf"
        return f"{self.value.numerator}/{self.value.denominator}"


# -- components (count-only, hot path) ----------------------------------

def _count_components(rows, alive: int) -> int:
    count = 0
    rem = alive
    while rem:
        count += 1
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= rows[low.bit_length() - 1]
            frontier = nxt & rem & ~comp
            comp |= frontier
        rem &= ~comp
    return count


def _component_list(rows, alive: int) -> list[int]:
    comps = []
    rem = alive
    while rem:
        comp = rem & -rem
        frontier = comp
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


# -- vertex connectivity -------------------------------------------------

def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Max number of internally disjoint s-t paths, stopping early at cap."""
    # unit-capacity flow on the vertex-split digraph: in(v)=2v, out(v)=2v+1
    adj: list[set[int]] = [set() for _ in range(2 * g.n)]
    for v in range(g.n):
        adj[2 * v].add(2 * v + 1)
    for u, v in g.edges():
        adj[2 * u + 1].add(2 * v)
        adj[2 * v + 1].add(2 * u)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev: dict[int, int | None] = {src: None}
        queue = deque([src])
        while queue and snk not in prev:
            x = queue.popleft()
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if snk not in prev:
            break
        y = snk
        while prev[y] is not None:
            x = prev[y]
            adj[x].discard(y)
            adj[y].add(x)
            y = x
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertices whose removal disconnects g; n-1 for complete graphs."""
    n = g.n
    if n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    if n == 1:
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    alive = g.full_mask
    if len(_component_list(g.rows, alive)) > 1:
        return 0
    best = n - 1
    for s in range(n):
        row = g.rows[s]
        for t in range(s + 1, n):
            if row >> t & 1:
                continue
            best = min(best, _local_connectivity(g, s, t, best))
            if best == 0:
                return 0
    return best


# -- toughness -----------------------------------------------------------

def _is_essential_cut(rows, cut: tuple[int, ...], comps: list[int]) -> bool:
    # Every cut vertex must touch two of the resulting components.  A vertex
    # touching fewer could be dropped for a strictly better ratio, so every
    # optimal cut passes this filter and the restricted minimum is exact.
    # (Requiring a component pair common to the whole cut would be too
    # strict: a cut shattering the graph into many singletons can have each
    # vertex touching a different pair.)
    for v in cut:
        row = rows[v]
        touched = 0
        for comp in comps:
            if row & comp:
                touched += 1
                if touched == 2:
                    break
        if touched < 2:
            return False
    return True


def toughness(g: Graph, method: str = "subsets", max_n: int | None = DEFAULT_EXACT_LIMIT) -> Toughness:
    """Exact toughness by cut enumeration.

    method="subsets" scans every vertex subset; method="separators" keeps
    only cuts with no removable vertex (each must touch two components of
    the remainder), which preserves the minimum and serves as an
    independent second route.
    """
    from itertools import combinations

    if method not in ("subsets", "separators"):
        raise GraphError(f"unknown toughness method {method!r}")
    n = g.n
    if n == 0:
        raise GraphError("toughness of the empty graph is undefined")
    if g.m == n * (n - 1) // 2:
        return Toughness(None, None)
    rows = g.rows
    full = g.full_mask
    if _count_components(rows, full) > 1:
        return Toughness(Fraction(0), frozenset())
    _check_cap(n, max_n, "exact toughness")

    # seed the pruning bound with open-neighbourhood cuts
    bound: Fraction | None = None
    for v in range(n):
        cut_mask = rows[v]
        parts = _count_components(rows, full & ~cut_mask)
        if parts >= 2:
            ratio = Fraction(cut_mask.bit_count(), parts)
            if bound is None or ratio < bound:
                bound = ratio

    best: Fraction | None = None
    witness: frozenset[int] | None = None
    for k in range(1, n - 1):
        floor = Fraction(k, n - k)
        if bound is not None and floor > bound:
            break
        if best is not None and floor > best:
            break
        for cut in combinations(range(n), k):
            cut_mask = mask_of(cut)
            alive = full & ~cut_mask
            if method == "separators":
                comps = _component_list(rows, alive)
                if len(comps) < 2 or not _is_essential_cut(rows, cut, comps):
                    continue
                parts = len(comps)
            else:
                parts = _count_components(rows, alive)
                if parts < 2:
                    continue
            ratio = Fraction(k, parts)
            if best is None or ratio < best:
                best = ratio
                witness = frozenset(cut)
                if bound is None or ratio < bound:
                    bound = ratio
    if best is None:
        raise GraphError("no disconnecting set found in a non-complete graph")
    return Toughness(best, witness)


# -- longest cycles ------------------------------------------------------

def _reachable(rows, start_row: int, free: int) -> int:
    """Vertices of `free` reachable from the (external) start row."""
    seen = start_row & free
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= rows[low.bit_length() - 1]
        frontier = nxt & free & ~seen
        seen |= frontier
    return seen


def _cycle_search(g: Graph) -> tuple[int, list[int] | None]:
    n, rows = g.n, g.rows
    full = g.full_mask
    degree = [rows[v].bit_count() for v in range(n)]
    best_len = 0
    best: list[int] | None = None
    path: list[int] = []

    def dfs(u: int, visited: int, allowed: int, a_bit: int, a_row: int) -> None:
        nonlocal best_len, best
        depth = len(path)
        if depth >= 3 and rows[u] & a_bit and depth > best_len:
            best_len = depth
            best = path.copy()
        free = allowed & ~visited
        if not free:
            return
        reach = _reachable(rows, rows[u], free)
        if depth + reach.bit_count() <= best_len:
            return
        if not (a_row & reach):
            return
        nbrs = sorted(iter_bits(rows[u] & free), key=lambda w: (degree[w], w))
        for w in nbrs:
            path.append(w)
            dfs(w, visited | (1 << w), allowed, a_bit, a_row)
            path.pop()

    for a in range(n):
        if best_len >= n - a:
            break
        above = full & ~((1 << (a + 1)) - 1)
        if (rows[a] & above).bit_count() < 2:
            continue
        path.clear()
        path.append(a)
        dfs(a, 1 << a, above, 1 << a, rows[a])
    return best_len, best


def circumference(g: Graph, max_n: int | None = DEFAULT_EXACT_LIMIT) -> tuple[int, OrientedCycle | None]:
    """Exact longest cycle length with a witness.

    Acyclic conventions: edgeless graphs have circumference 1, forests with
    an edge have 2; both return an absent witness.
    """
    if g.n == 0:
        return 0, None
    _check_cap(g.n, max_n, "exact circumference")
    length, verts = _cycle_search(g)
    if length >= 3:
        assert verts is not None
        cycle = OrientedCycle(tuple(verts))
        cycle.validate(g)
        return length, cycle
    return (2 if g.m > 0 else 1), None


def is_hamiltonian(g: Graph, max_n: int | None = DEFAULT_EXACT_LIMIT) -> bool:
    if g.n < 3:
        return False
    return circumference(g, max_n)[0] == g.n


def all_longest_cycles(g: Graph, max_n: int | None = DEFAULT_EXACT_LIMIT) -> list[OrientedCycle]:
    """Every cycle of maximum length, canonically oriented, sorted."""
    target, _ = circumference(g, max_n)
    if target < 3:
        raise GraphError("graph has no cycle")
    n, rows = g.n, g.rows
    full = g.full_mask
    found: set[tuple[int, ...]] = set()
    path: list[int] = []

    def dfs(u: int, visited: int, allowed: int, a_bit: int, a_row: int) -> None:
        depth = len(path)
        if depth == target:
            if rows[u] & a_bit:
                found.add(OrientedCycle(tuple(path)).canonical().verts)
            return
        free = allowed & ~visited
        if not free:
            return
        reach = _reachable(rows, rows[u], free)
        if depth + reach.bit_count() < target:
            return
        if not (a_row & reach):
            return
        f = rows[u] & free
        for w in iter_bits(f):
            path.append(w)
            dfs(w, visited | (1 << w), allowed, a_bit, a_row)
            path.pop()

    for a in range(n):
        if target > n - a:
            break
        above = full & ~((1 << (a + 1)) - 1)
        if (rows[a] & above).bit_count() < 2:
            continue
        path.clear()
        path.append(a)
        dfs(a, 1 << a, above, 1 << a, rows[a])
    return [OrientedCycle(v) for v in sorted(found)]


# -- longest paths -------------------------------------------------------

def _path_search(rows, alive: int, degree) -> tuple[int, list[int] | None]:
    best_count = 0
    best: list[int] | None = None
    path: list[int] = []

    def dfs(u: int, visited: int) -> None:
        nonlocal best_count, best
        depth = len(path)
        if depth > best_count:
            best_count = depth
            best = path.copy()
        free = alive & ~visited
        if not free:
            return
        reach = _reachable(rows, rows[u], free)
        if depth + reach.bit_count() <= best_count:
            return
        nbrs = sorted(iter_bits(rows[u] & free), key=lambda w: (degree[w], w))
        for w in nbrs:
            path.append(w)
            dfs(w, visited | (1 << w))
            path.pop()

    for s in iter_bits(alive):
        path.clear()
        path.append(s)
        dfs(s, 1 << s)
    return best_count, best


def longest_path_in(g: Graph, forbidden=(), max_n: int | None = DEFAULT_EXACT_LIMIT) -> Path | None:
    """A longest simple path avoiding `forbidden`; None if nothing survives."""
    rm = mask_of(forbidden)
    if rm & ~g.full_mask:
        raise GraphError("forbidden set contains vertices outside the graph")
    alive = g.full_mask & ~rm
    if not alive:
        return None
    _check_cap(alive.bit_count(), max_n, "exact longest path")
    degree = [r.bit_count() for r in g.rows]
    _, verts = _path_search(g.rows, alive, degree)
    assert verts is not None
    p = Path(tuple(verts))
    p.validate(g)
    return p


def all_longest_paths_in(
    g: Graph,
    forbidden=(),
    cap: int | None = DEFAULT_PATH_CAP,
    max_n: int | None = DEFAULT_EXACT_LIMIT,
) -> list[Path]:
    """Every maximum-length path avoiding `forbidden`, deduplicated.

    Truncates (with a warning) once `cap` distinct paths are collected.
    """
    rm = mask_of(forbidden)
    alive = g.full_mask & ~rm
    if not alive:
        return []
    _check_cap(alive.bit_count(), max_n, "exact longest path")
    rows = g.rows
    degree = [r.bit_count() for r in rows]
    target, _ = _path_search(rows, alive, degree)

    found: set[tuple[int, ...]] = set()
    truncated = False
    path: list[int] = []

    def dfs(u: int, visited: int) -> None:
        nonlocal truncated
        if truncated:
            return
        depth = len(path)
        if depth == target:
            found.add(Path(tuple(path)).canonical().verts)
            if cap is not None and len(found) > cap:
                truncated = True
            return
        free = alive & ~visited
        if not free:
            return
        reach = _reachable(rows, rows[u], free)
        if depth + reach.bit_count() < target:
            return
        for w in iter_bits(rows[u] & free):
            path.append(w)
            dfs(w, visited | (1 << w))
            path.pop()

    for s in iter_bits(alive):
        if truncated:
            break
        path.clear()
        path.append(s)
        dfs(s, 1 << s)
    if truncated:
        warnings.warn(f"longest-path enumeration truncated at {cap} paths", stacklevel=2)
    out = sorted(found)
    if cap is not None:
        out = out[:cap]
    return [Path(v) for v in out]
