"""Exhaustive small-graph enumeration up to isomorphism.

Graphs are generated by vertex augmentation: every representative on n
vertices is some representative on n-1 vertices plus one new vertex with an
arbitrary neighbourhood.  Duplicates are removed by a canonical form computed
with equitable refinement plus individualization, which is cheap at the sizes
this module supports (n <= 8 keeps the acceptance sweeps self-contained).
"""

from __future__ import annotations

from .graphs import Graph, GraphError, is_connected, iter_bits

ENUMERATION_LIMIT = 8


def _refine(rows, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into each cell."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & cm).bit_count() for cm in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            for key in sorted(keyed):
                out.append(keyed[key])
        cells = out
    return cells


def _triangle_bits(rows, order: list[int]) -> int:
    """Upper-triangle bitmask of the adjacency matrix under a labeling."""
    n = len(order)
    bits = 0
    k = 0
    for j in range(1, n):
        vj = order[j]
        row = rows[vj]
        for i in range(j):
            if row >> order[i] & 1:
                bits |= 1 << k
            k += 1
    return bits


def _canon_search(rows, cells) -> int:
    if all(len(c) == 1 for c in cells):
        return _triangle_bits(rows, [c[0] for c in cells])
    at = next(i for i, c in enumerate(cells) if len(c) > 1)
    best: int | None = None
    for v in cells[at]:
        rest = [u for u in cells[at] if u != v]
        branch = cells[:at] + [[v], rest] + cells[at + 1:]
        cand = _canon_search(rows, _refine(rows, branch))
        if best is None or cand < best:
            best = cand
    return best


def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: equal keys iff the graphs are isomorphic."""
    if g.n == 0:
        return (0, 0)
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.rows[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    return g.n, _canon_search(g.rows, _refine(g.rows, cells))


def _graph_from_triangle(n: int, bits: int) -> Graph:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


_REPS_CACHE: dict[int, list[Graph]] = {}


def all_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, canonically labeled."""
    if n < 1 or n > ENUMERATION_LIMIT:
        raise GraphError(f"enumeration supports 1..{ENUMERATION_LIMIT} vertices, got {n}")
    if n in _REPS_CACHE:
        return list(_REPS_CACHE[n])
    if n == 1:
        reps = [Graph(1, (0,))]
    else:
        seen: set[int] = set()
        new = n - 1
        for parent in all_graphs(n - 1):
            base = list(parent.rows) + [0]
            for nb in range(1 << new):
                rows = list(base)
                rows[new] = nb
                for u in iter_bits(nb):
                    rows[u] |= 1 << new
                seen.add(canonical_key(Graph(n, tuple(rows)))[1])
        reps = [_graph_from_triangle(n, bits) for bits in sorted(seen)]
    _REPS_CACHE[n] = reps
    return list(reps)


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism."""
    return [g for g in all_graphs(n) if is_connected(g)]
