"""Cycle surgery: decompositions, splices and rewiring moves.

A cycle C and a disjoint path P whose endpoints attach to C induce a segment
decomposition of C.  The moves in this module rebuild strictly longer cycles
out of the pieces whenever certain chord patterns are present; each candidate
is revalidated edge by edge before it is reported, so every returned move is
a genuine cycle of the host graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, GraphError, iter_bits, mask_of
from .invariants import OrientedCycle, Path, all_longest_paths_in


@dataclass(frozen=True, slots=True)
class SearchLimits:
    """Knobs for the improvement engine."""

    max_intermediate_len: int = 3
    path_candidates: int | None = 8
    restarts: int = 12


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class SegmentDecomposition:
    """C split at the attachment vertices of a disjoint path P.

    attachments are the cycle neighbours of P's endpoints, listed in cycle
    order starting from the least position on the stored orientation.
    Segment i runs from attachment i to attachment i+1 inclusive; with a
    single attachment the one segment wraps the whole cycle.
    """

    cycle: OrientedCycle
    path: Path
    attachments: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.attachments)

    @property
    def p_bar(self) -> int:
        return self.path.length

    def interiors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(seg[1:-1] for seg in self.segments)

    def segment_length(self, i: int) -> int:
        return len(self.segments[i]) - 1


@dataclass(frozen=True, slots=True)
class IntermediatePath:
    """Path between interiors of two segments, internally off C and P."""

    verts: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.verts) - 1

    @property
    def z(self) -> int:
        return self.verts[0]

    @property
    def w(self) -> int:
        return self.verts[-1]


@dataclass(frozen=True, slots=True)
class SurgeryMove:
    name: str
    result: OrientedCycle
    delta: int
    dropped: tuple[int, int] | None = None


def segment_decomposition(g: Graph, cycle: OrientedCycle, path: Path) -> SegmentDecomposition:
    cycle.validate(g)
    path.validate(g)
    if set(cycle.verts) & set(path.verts):
        raise GraphError("path touches the cycle")
    cyc_mask = mask_of(cycle.verts)
    nx = g.rows[path.x] & cyc_mask
    ny = g.rows[path.y] & cyc_mask
    if not nx or not ny:
        bad = path.x if not nx else path.y
        raise GraphError(f"path endpoint {bad} has no attachment on the cycle")
    pos = cycle.positions()
    att = tuple(sorted(iter_bits(nx | ny), key=pos.__getitem__))
    verts = cycle.verts
    if len(att) == 1:
        p = pos[att[0]]
        loop = verts[p:] + verts[:p] + (att[0],)
        segments: tuple[tuple[int, ...], ...] = (loop,)
    else:
        segs = []
        for i, xi in enumerate(att):
            nxt = att[(i + 1) % len(att)]
            segs.append(tuple(_arc(verts, pos[xi], pos[nxt])))
        segments = tuple(segs)
    return SegmentDecomposition(cycle, path, att, segments)


def _arc(verts: tuple[int, ...], i: int, j: int) -> list[int]:
    """Inclusive vertex run from position i to position j along the cycle."""
    t = len(verts)
    out = [verts[i]]
    while i != j:
        i = (i + 1) % t
        out.append(verts[i])
    return out


def _rarc(verts: tuple[int, ...], i: int, j: int) -> list[int]:
    """The i..j arc walked backwards, from position j down to position i."""
    out = _arc(verts, i, j)
    out.reverse()
    return out


def _valid_cycle(g: Graph, seq: list[int]) -> OrientedCycle | None:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return None
    for i, u in enumerate(seq):
        if not g.has_edge(u, seq[(i + 1) % len(seq)]):
            return None
    return OrientedCycle(tuple(seq))


def _attached(g: Graph, path: Path, first_att: int, last_att: int) -> tuple[int, ...] | None:
    """P oriented so its first end sees first_att and its last sees last_att."""
    if g.has_edge(first_att, path.verts[0]) and g.has_edge(path.verts[-1], last_att):
        return path.verts
    if g.has_edge(first_att, path.verts[-1]) and g.has_edge(path.verts[0], last_att):
        return tuple(reversed(path.verts))
    return None


def _collect(g: Graph, out: list[SurgeryMove], name: str, seq: list[int], t: int) -> None:
    cand = _valid_cycle(g, seq)
    if cand is not None:
        out.append(SurgeryMove(name, cand, cand.length - t))


def enumerate_intermediate_paths(
    g: Graph, d: SegmentDecomposition, max_len: int = 3
) -> dict[tuple[int, int], list[IntermediatePath]]:
    """All paths of length <= max_len joining interiors of distinct segments.

    Internal vertices are drawn from outside C and P only.  Keys are segment
    index pairs (a, b) with a < b; each stored path runs from I_a into I_b.
    """
    if max_len < 1:
        raise GraphError("max_len must be at least 1")
    interiors = d.interiors()
    seg_of: dict[int, int] = {}
    for idx, interior in enumerate(interiors):
        for v in interior:
            seg_of[v] = idx
    used = mask_of(d.cycle.verts) | mask_of(d.path.verts)
    outside = g.full_mask & ~used
    found: dict[tuple[int, int], set[tuple[int, ...]]] = {}

    def record(seq: list[int]) -> None:
        a, b = seg_of[seq[0]], seg_of[seq[-1]]
        if a < b:
            found.setdefault((a, b), set()).add(tuple(seq))
        else:
            found.setdefault((b, a), set()).add(tuple(reversed(seq)))

    def extend(seq: list[int], used_out: int, home: int) -> None:
        cur = seq[-1]
        for nb in iter_bits(g.rows[cur]):
            if nb in seg_of and seg_of[nb] != home:
                record(seq + [nb])
            elif (outside >> nb & 1) and not (used_out >> nb & 1) and len(seq) <= max_len - 1:
                extend(seq + [nb], used_out | 1 << nb, home)

    for idx, interior in enumerate(interiors):
        for z in interior:
            extend([z], 0, idx)
    return {
        key: [IntermediatePath(v) for v in sorted(paths)]
        for key, paths in sorted(found.items())
    }


def splice_intermediate(
    g: Graph, d: SegmentDecomposition, l: IntermediatePath, a: int, b: int
) -> SurgeryMove | None:
    """Rebuild the cycle through P and the intermediate path l.

    Matching half-arcs of segments a and b are dropped and everything else
    is kept, which gives the exact length identity
    |C'| = |C| - dropA - dropB + |l| + |P| + 2 for each orientation variant.
    Returns the longest valid variant, or None when no variant closes up.
    """
    s = d.s
    if a == b:
        raise GraphError("splice needs two distinct segments")
    if not (0 <= a < s and 0 <= b < s):
        raise GraphError(f"segment index out of range for s={s}")
    interiors = d.interiors()
    lv = l.verts
    if lv[0] in interiors[a] and lv[-1] in interiors[b]:
        pass
    elif lv[0] in interiors[b] and lv[-1] in interiors[a]:
        lv = tuple(reversed(lv))
    else:
        raise GraphError("intermediate path endpoints are not in the named interiors")

    verts = d.cycle.verts
    t = len(verts)
    pos = d.cycle.positions()
    att = d.attachments
    xi_a, xi_a1 = att[a], att[(a + 1) % s]
    xi_b, xi_b1 = att[b], att[(b + 1) % s]
    pa, pa1, pb, pb1 = pos[xi_a], pos[xi_a1], pos[xi_b], pos[xi_b1]
    pz, pw = pos[lv[0]], pos[lv[-1]]
    d1 = (pz - pa) % t
    d2 = (pa1 - pz) % t
    d3 = (pw - pb) % t
    d4 = (pb1 - pw) % t

    orientations = [d.path.verts]
    if d.p_bar > 0:
        orientations.append(tuple(reversed(d.path.verts)))

    best: SurgeryMove | None = None
    for pv in orientations:
        # drop the leading halves xi_a..z and xi_b..w
        if g.has_edge(xi_a, pv[0]) and g.has_edge(pv[-1], xi_b):
            seq = [xi_a, *pv, *_rarc(verts, pz, pb), *lv[1:], *_arc(verts, pw, pa)[1:-1]]
            cand = _valid_cycle(g, seq)
            if cand is not None:
                assert cand.length == t - d1 - d3 + l.length + d.p_bar + 2
                if best is None or cand.length > best.result.length:
                    best = SurgeryMove("lemma2-splice", cand, cand.length - t, (d1, d3))
        # drop the trailing halves z..xi_a1 and w..xi_b1
        if g.has_edge(xi_a1, pv[0]) and g.has_edge(pv[-1], xi_b1):
            seq = [xi_a1, *pv, *_arc(verts, pb1, pz), *lv[1:], *_rarc(verts, pa1, pw)[1:-1]]
            cand = _valid_cycle(g, seq)
            if cand is not None:
                assert cand.length == t - d2 - d4 + l.length + d.p_bar + 2
                if best is None or cand.length > best.result.length:
                    best = SurgeryMove("lemma2-splice", cand, cand.length - t, (d2, d4))
    return best


# -- claim-based rewiring moves --------------------------------------------

def _claim3_moves(g: Graph, d: SegmentDecomposition) -> list[SurgeryMove]:
    out: list[SurgeryMove] = []
    s = d.s
    if s < 3:
        return out
    verts = d.cycle.verts
    t = len(verts)
    pos = d.cycle.positions()
    att = d.attachments
    for trio in combinations(range(s), 3):
        for rot in range(3):
            ia, ib, if_ = trio[rot:] + trio[:rot]
            xi_a, xi_b, xi_f = att[ia], att[ib], att[if_]
            pa, pb, pf = pos[xi_a], pos[xi_b], pos[xi_f]
            if not g.has_edge(verts[(pa - 1) % t], verts[(pb + 1) % t]):
                continue
            f_pred = verts[(pf - 1) % t]
            # an edge from xi_f's predecessor back to xi_a or xi_b closes a
            # detour that covers the whole of C and P
            if g.has_edge(f_pred, xi_a):
                pv = _attached(g, d.path, xi_f, xi_b)
                if pv is not None:
                    seq = [
                        xi_f, *pv,
                        *_rarc(verts, pa, pb),
                        *_rarc(verts, (pb + 1) % t, (pf - 1) % t),
                        *_rarc(verts, pf, (pa - 1) % t)[:-1],
                    ]
                    _collect(g, out, "claim3-a", seq, t)
            if g.has_edge(f_pred, xi_b):
                pv = _attached(g, d.path, xi_f, xi_a)
                if pv is not None:
                    seq = [
                        xi_f, *pv,
                        *_arc(verts, pa, pb),
                        *_rarc(verts, (pb + 1) % t, (pf - 1) % t),
                        *_rarc(verts, pf, (pa - 1) % t)[:-1],
                    ]
                    _collect(g, out, "claim3-b", seq, t)
    return out


def _claim4_moves(g: Graph, d: SegmentDecomposition) -> list[SurgeryMove]:
    out: list[SurgeryMove] = []
    s = d.s
    if s < 2:
        return out
    verts = d.cycle.verts
    t = len(verts)
    pos = d.cycle.positions()
    att = d.attachments
    for ia in range(s):
        for ib in range(s):
            if ia == ib:
                continue
            xi_a, xi_b = att[ia], att[ib]
            pa, pb = pos[xi_a], pos[xi_b]
            a_succ = verts[(pa + 1) % t]
            b_pred = verts[(pb - 1) % t]
            pv = _attached(g, d.path, xi_a, xi_b)
            if pv is None:
                continue
            pw = pb
            while True:
                w = verts[pw]
                if g.has_edge(a_succ, w):
                    if g.has_edge(b_pred, verts[(pw - 1) % t]):
                        seq = [
                            xi_a, *pv,
                            *_arc(verts, pb, (pw - 1) % t),
                            *_rarc(verts, (pa + 1) % t, (pb - 1) % t),
                            *_arc(verts, pw, pa)[:-1],
                        ]
                        _collect(g, out, "claim4-a", seq, t)
                    if g.has_edge(b_pred, verts[(pw + 1) % t]):
                        seq = [
                            xi_a, *pv,
                            *_arc(verts, pb, pw),
                            *_arc(verts, (pa + 1) % t, (pb - 1) % t),
                            *_arc(verts, (pw + 1) % t, pa)[:-1],
                        ]
                        _collect(g, out, "claim4-b", seq, t)
                if pw == (pa - 1) % t:
                    break
                pw = (pw + 1) % t
    return out


def _claim5_moves(g: Graph, d: SegmentDecomposition) -> list[SurgeryMove]:
    out: list[SurgeryMove] = []
    s = d.s
    if s < 2:
        return out
    verts = d.cycle.verts
    t = len(verts)
    pos = d.cycle.positions()
    att = d.attachments
    for ia in range(s):
        for ib in range(s):
            if ia == ib:
                continue
            xi_a, xi_b = att[ia], att[ib]
            pa, pb = pos[xi_a], pos[xi_b]
            a_succ = verts[(pa + 1) % t]
            pbs = (pb + 1) % t
            b_succ = verts[pbs]
            pv = _attached(g, d.path, xi_a, xi_b)
            if pv is None:
                continue
            # w strictly between xi_b and xi_a
            pw = pbs
            while pw != pa:
                if g.has_edge(a_succ, verts[pw]) and g.has_edge(b_succ, verts[(pw + 1) % t]):
                    seq = [
                        xi_a, *pv,
                        *_rarc(verts, (pa + 1) % t, pb),
                        *_rarc(verts, pbs, pw),
                        *_arc(verts, (pw + 1) % t, pa)[:-1],
                    ]
                    _collect(g, out, "claim5-a", seq, t)
                pw = (pw + 1) % t
            # w between xi_a and xi_b inclusive of xi_b
            pw = (pa + 1) % t
            while True:
                if g.has_edge(a_succ, verts[pw]) and g.has_edge(b_succ, verts[(pw - 1) % t]):
                    seq = [
                        xi_a, *pv,
                        *_rarc(verts, pw, pb),
                        *_arc(verts, (pa + 1) % t, (pw - 1) % t),
                        *_arc(verts, pbs, pa)[:-1],
                    ]
                    _collect(g, out, "claim5-b", seq, t)
                if pw == pb:
                    break
                pw = (pw + 1) % t
    return out


def _claim17_moves(g: Graph, d: SegmentDecomposition) -> list[SurgeryMove]:
    out: list[SurgeryMove] = []
    verts = d.cycle.verts
    t = len(verts)
    pos = d.cycle.positions()
    att = d.attachments
    s = d.s
    p_bar = d.p_bar
    pverts = d.path.verts
    interiors = d.interiors()

    # only segments short enough to beat the two-arc bound can yield a move
    gated = [a for a in range(s) if d.segment_length(a) < p_bar + 6]
    if not gated:
        return out

    pset = set(pverts)
    used = mask_of(verts) | mask_of(pverts)
    outside = g.full_mask & ~used
    # bridges[z] holds paths (y, .., z) from a vertex y of P back into a
    # segment interior, internally disjoint from C and P
    bridges: dict[int, list[tuple[int, ...]]] = {}

    def sweep(seq: list[int], used_out: int) -> None:
        cur = seq[-1]
        for nb in iter_bits(g.rows[cur]):
            if nb in pset:
                bridges.setdefault(seq[0], []).append(tuple(reversed(seq + [nb])))
            elif (outside >> nb & 1) and not (used_out >> nb & 1):
                sweep(seq + [nb], used_out | 1 << nb)

    for a in gated:
        for z in interiors[a]:
            if z not in bridges:
                sweep([z], 0)

    for a in gated:
        xi_a, xi_a1 = att[a], att[(a + 1) % s]
        pa, pa1 = pos[xi_a], pos[xi_a1]
        seg_len = d.segment_length(a)
        for x1, x2 in ((pverts[0], pverts[-1]), (pverts[-1], pverts[0])):
            if not (g.has_edge(x1, xi_a) and g.has_edge(x2, xi_a1)):
                continue
            fwd = pverts if pverts[0] == x1 else tuple(reversed(pverts))
            for z in interiors[a]:
                pz = pos[z]
                for q in bridges.get(z, ()):
                    y = q[0]
                    idx = fwd.index(y)
                    part1 = fwd[: idx + 1]   # x1 .. y along P
                    part2 = fwd[idx:]        # y .. x2 along P
                    if seg_len < p_bar + 4:
                        seq = [xi_a, *part1, *q[1:], *_arc(verts, pz, pa)[1:-1]]
                        _collect(g, out, "claim17", seq, t)
                        seq = [xi_a1, *reversed(part2), *q[1:], *_rarc(verts, pa1, pz)[1:-1]]
                        _collect(g, out, "claim17", seq, t)
                    if seg_len < p_bar + 6 and y not in (x1, x2) and g.has_edge(x1, x2):
                        seq = [xi_a, x1, *reversed(part2), *q[1:], *_arc(verts, pz, pa)[1:-1]]
                        _collect(g, out, "claim17", seq, t)
                        seq = [xi_a1, x2, *part1, *q[1:], *_rarc(verts, pa1, pz)[1:-1]]
                        _collect(g, out, "claim17", seq, t)
            if p_bar == 0:
                break
    return out


def _mirror(g: Graph, d: SegmentDecomposition) -> SegmentDecomposition:
    return segment_decomposition(g, OrientedCycle(tuple(reversed(d.cycle.verts))), d.path)


def claim_moves(g: Graph, d: SegmentDecomposition) -> list[SurgeryMove]:
    """Longer-cycle constructions for every detected forbidden chord pattern.

    Runs the detectors on both orientations of the cycle; every emitted move
    has been revalidated, so on a genuinely longest cycle the reported deltas
    can never be positive.
    """
    out: list[SurgeryMove] = []
    for dec in (d, _mirror(g, d)):
        out.extend(_claim3_moves(g, dec))
        out.extend(_claim4_moves(g, dec))
        out.extend(_claim5_moves(g, dec))
        out.extend(_claim17_moves(g, dec))
    return out


# -- improvement engine -----------------------------------------------------

def _insertion_moves(g: Graph, d: SegmentDecomposition) -> list[SurgeryMove]:
    out: list[SurgeryMove] = []
    verts = d.cycle.verts
    t = len(verts)
    pos = d.cycle.positions()
    att = d.attachments
    for a in range(d.s):
        xi_a, xi_a1 = att[a], att[(a + 1) % d.s]
        if xi_a == xi_a1:
            continue
        pv = _attached(g, d.path, xi_a, xi_a1)
        if pv is None:
            continue
        seq = [xi_a, *pv, *_arc(verts, pos[xi_a1], pos[xi_a])[:-1]]
        _collect(g, out, "insertion", seq, t)
    return out


def candidate_paths(g: Graph, cycle: OrientedCycle, limits: SearchLimits = DEFAULT_LIMITS) -> list[Path]:
    """Longest external paths, one per endpoint pair, lexicographic order."""
    paths = all_longest_paths_in(g, forbidden=cycle.verts, cap=None, max_n=None)
    picked: list[Path] = []
    seen_ends: set[frozenset[int]] = set()
    for p in paths:
        ends = frozenset((p.x, p.y))
        if ends in seen_ends:
            continue
        seen_ends.add(ends)
        picked.append(p)
        if limits.path_candidates is not None and len(picked) >= limits.path_candidates:
            break
    return picked


def improve_once(
    g: Graph, cycle: OrientedCycle, limits: SearchLimits = DEFAULT_LIMITS
) -> OrientedCycle | None:
    """One improvement step: the best strictly longer cycle any move finds."""
    cycle.validate(g)
    if mask_of(cycle.verts) == g.full_mask:
        return None
    best: SurgeryMove | None = None
    for path in candidate_paths(g, cycle, limits):
        try:
            d = segment_decomposition(g, cycle, path)
        except GraphError:
            continue
        moves = _insertion_moves(g, d)
        pools = enumerate_intermediate_paths(g, d, max_len=limits.max_intermediate_len)
        for (a, b), pool in pools.items():
            for l in pool:
                mv = splice_intermediate(g, d, l, a, b)
                if mv is not None:
                    moves.append(mv)
        moves.extend(claim_moves(g, d))
        for mv in moves:
            if mv.delta > 0 and (best is None or mv.result.length > best.result.length):
                best = mv
    return best.result if best is not None else None


def _greedy_path_cycle(g: Graph, rng: random.Random) -> OrientedCycle | None:
    n = g.n
    start = rng.randrange(n)
    path = [start]
    visited = 1 << start
    while True:
        free = g.rows[path[-1]] & ~visited
        if not free:
            break
        nxt = rng.choice(list(iter_bits(free)))
        path.append(nxt)
        visited |= 1 << nxt
    end_row = g.rows[path[-1]]
    for i, v in enumerate(path):
        if len(path) - i >= 3 and end_row >> v & 1:
            return OrientedCycle(tuple(path[i:]))
    return None


def _fallback_cycle(g: Graph) -> OrientedCycle | None:
    """Any cycle at all, by DFS back edges; None for forests."""
    n = g.n
    color = [0] * n  # 0 fresh, 1 active, 2 done
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        color[root] = 1
        stack = [(root, iter(list(iter_bits(g.rows[root]))))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = u
                    stack.append((w, iter(list(iter_bits(g.rows[w])))))
                    advanced = True
                    break
                if color[w] == 1 and w != parent[u]:
                    run = [u]
                    cur = u
                    while cur != w:
                        cur = parent[cur]
                        run.append(cur)
                    return OrientedCycle(tuple(reversed(run)))
            if not advanced:
                color[u] = 2
                stack.pop()
    return None


def heuristic_longest_cycle(
    g: Graph, seed: int = 0, limits: SearchLimits = DEFAULT_LIMITS
) -> OrientedCycle | None:
    """Seeded greedy start plus improvement moves to a fixed point.

    Always returns a valid cycle of g (hence never longer than the true
    circumference); None exactly when the graph is acyclic.
    """
    if g.n == 0:
        return None

    def polish(cyc: OrientedCycle) -> OrientedCycle:
        while True:
            nxt = improve_once(g, cyc, limits)
            if nxt is None:
                return cyc
            cyc = nxt

    rng = random.Random(seed)
    best: OrientedCycle | None = None
    for _ in range(max(1, limits.restarts)):
        cyc = _greedy_path_cycle(g, rng)
        if cyc is None:
            continue
        cyc = polish(cyc)
        if best is None or cyc.length > best.length:
            best = cyc
        if best.length == g.n:
            break
    if best is None:
        cyc = _fallback_cycle(g)
        if cyc is None:
            return None
        best = polish(cyc)
    best.validate(g)
    return best
