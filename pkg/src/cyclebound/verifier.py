"""Executable checks for the toughness and circumference bounds.

Each check evaluates one statement on one graph and returns a Verdict; the
batch driver sweeps graph6 corpora and aggregates a Report.  Counterexample
verdicts always carry enough evidence (graph6 plus the invariant values) to
be re-checked independently.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from enum import Enum

from .graphs import Graph, GraphError, encode_graph6, is_petersen, iter_bits, mask_of, min_degree, parse_graph6
from .invariants import (
    DEFAULT_PATH_CAP,
    Toughness,
    all_longest_cycles,
    all_longest_paths_in,
    circumference,
    is_hamiltonian,
    toughness,
    vertex_connectivity,
)
from .surgery import enumerate_intermediate_paths, segment_decomposition


class Status(Enum):
    HYPOTHESIS_NOT_MET = "HypothesisNotMet"
    HOLDS = "Holds"
    PETERSEN_EXCEPTION = "PetersenException"
    COUNTEREXAMPLE = "Counterexample"
    RESOURCE_LIMIT = "ResourceLimit"


@dataclass(frozen=True)
class Verdict:
    theorem: str
    status: Status
    evidence: dict


THEOREMS = ("A", "B", "1", "C1", "L1", "L2", "L3")
DEFAULT_THEOREMS = ("A", "B", "1", "C1")
THEOREM_C_LIMIT = 10


@dataclass(frozen=True)
class InvariantBundle:
    """Everything the theorem checks need, computed once per graph."""

    n: int
    m: int
    delta: int
    kappa: int
    tau: Toughness
    circ: int
    hamiltonian: bool
    petersen: bool


def compute_bundle(g: Graph, max_n: int = 16) -> InvariantBundle:
    c, _ = circumference(g, max_n=max_n)
    return InvariantBundle(
        n=g.n,
        m=g.m,
        delta=min_degree(g),
        kappa=vertex_connectivity(g),
        tau=toughness(g, max_n=max_n),
        circ=c,
        hamiltonian=is_hamiltonian(g, max_n=max_n),
        petersen=is_petersen(g),
    )


def _evidence(b: InvariantBundle) -> dict:
    return {
        "n": b.n, "delta": b.delta, "kappa": b.kappa,
        "tau": str(b.tau), "c": b.circ,
    }


def _counterexample(g: Graph, theorem: str, ev: dict) -> Verdict:
    ev["graph6"] = encode_graph6(g)
    return Verdict(theorem, Status.COUNTEREXAMPLE, ev)


def check_theorem_A(g: Graph, bundle: InvariantBundle | None = None) -> Verdict:
    b = bundle if bundle is not None else compute_bundle(g)
    ev = _evidence(b)
    if b.kappa < 2:
        return Verdict("A", Status.HYPOTHESIS_NOT_MET, ev)
    ev["bound"] = min(b.n, 2 * b.delta)
    if b.circ >= ev["bound"]:
        return Verdict("A", Status.HOLDS, ev)
    return _counterexample(g, "A", ev)


def check_theorem_B(g: Graph, bundle: InvariantBundle | None = None) -> Verdict:
    b = bundle if bundle is not None else compute_bundle(g)
    ev = _evidence(b)
    if not b.tau.at_least(1):
        return Verdict("B", Status.HYPOTHESIS_NOT_MET, ev)
    ev["bound"] = min(b.n, 2 * b.delta + 2)
    if b.circ >= ev["bound"]:
        return Verdict("B", Status.HOLDS, ev)
    return _counterexample(g, "B", ev)


def check_theorem_1(g: Graph, bundle: InvariantBundle | None = None) -> Verdict:
    b = bundle if bundle is not None else compute_bundle(g)
    ev = _evidence(b)
    if not b.tau.exceeds(1):
        return Verdict("1", Status.HYPOTHESIS_NOT_MET, ev)
    ev["bound"] = min(b.n, 2 * b.delta + 5)
    if b.circ >= ev["bound"]:
        return Verdict("1", Status.HOLDS, ev)
    if b.petersen:
        return Verdict("1", Status.PETERSEN_EXCEPTION, ev)
    return _counterexample(g, "1", ev)


def check_corollary_1(g: Graph, bundle: InvariantBundle | None = None) -> Verdict:
    b = bundle if bundle is not None else compute_bundle(g)
    ev = _evidence(b)
    # delta >= (n-5)/2 evaluated in integers
    if not b.tau.exceeds(1) or 2 * b.delta < b.n - 5:
        return Verdict("C1", Status.HYPOTHESIS_NOT_MET, ev)
    # c == n rather than is_hamiltonian: single vertices and edges count as
    # their own full-length cycles here, so K1 and K2 pass
    if b.circ == b.n:
        return Verdict("C1", Status.HOLDS, ev)
    if b.petersen:
        return Verdict("C1", Status.PETERSEN_EXCEPTION, ev)
    return _counterexample(g, "C1", ev)


def _longest_path_length_between(g: Graph, u: int, v: int) -> int:
    """Edge count of a longest simple u..v path; -1 if v is unreachable."""
    rows = g.rows
    best = -1

    def dfs(cur: int, visited: int, depth: int) -> None:
        nonlocal best
        free = g.full_mask & ~visited
        if rows[cur] >> v & 1 and depth + 1 > best:
            best = depth + 1
        # grow frontier to see what is still reachable
        reach = 0
        frontier = rows[cur] & free
        while frontier:
            reach |= frontier
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= rows[x]
            frontier = nxt & free & ~reach
        if not (reach >> v & 1) or depth + reach.bit_count() <= best:
            return
        for w in iter_bits(rows[cur] & free):
            if w != v:
                dfs(w, visited | 1 << w, depth + 1)

    dfs(u, 1 << u, 0)
    return best


def check_theorem_C(g: Graph, vset, max_n: int = THEOREM_C_LIMIT) -> Verdict:
    """Hamiltonian graph with t vertices of degree >= t: all pairs joined by long paths."""
    vs = sorted(set(vset))
    if any(v < 0 or v >= g.n for v in vs):
        raise GraphError("vset contains vertices outside the graph")
    if g.n > max_n:
        return Verdict("C", Status.RESOURCE_LIMIT, {"n": g.n, "limit": max_n})
    b = compute_bundle(g)
    t = len(vs)
    ev = _evidence(b)
    ev["t"] = t
    if not b.hamiltonian or any(g.degree(v) < t for v in vs):
        return Verdict("C", Status.HYPOTHESIS_NOT_MET, ev)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            length = _longest_path_length_between(g, u, v)
            if length < t:
                ev["pair"] = (u, v)
                ev["longest_between"] = length
                return _counterexample(g, "C", ev)
    return Verdict("C", Status.HOLDS, ev)


def _attachment_rows(g: Graph, cyc_mask: int, path) -> tuple[int, int]:
    return g.rows[path.x] & cyc_mask, g.rows[path.y] & cyc_mask


def check_lemma_1(
    g: Graph, bundle: InvariantBundle | None = None, path_cap: int | None = DEFAULT_PATH_CAP
) -> Verdict:
    b = bundle if bundle is not None else compute_bundle(g)
    ev = _evidence(b)
    if b.circ < 3 or b.circ == b.n:
        return Verdict("L1", Status.HYPOTHESIS_NOT_MET, ev)
    qualifying = 0
    for cyc in all_longest_cycles(g):
        cyc_mask = mask_of(cyc.verts)
        for path in all_longest_paths_in(g, forbidden=cyc.verts, cap=path_cap):
            if path.length < 1:
                continue
            ncx, ncy = _attachment_rows(g, cyc_mask, path)
            if ncx.bit_count() < 2 or ncy.bit_count() < 2 or ncx == ncy:
                continue
            qualifying += 1
            p = path.length
            if p == 1:
                sigma = max((ncx & ~ncy).bit_count(), (ncy & ~ncx).bit_count())
                bound = 3 * b.delta + sigma - 1
            else:
                bound = max(2 * p + 8, 4 * b.delta - 2 * p)
            if cyc.length < bound:
                ev.update(cycle=cyc.verts, path=path.verts, p_bar=p, bound=bound)
                return _counterexample(g, "L1", ev)
    if qualifying == 0:
        return Verdict("L1", Status.HYPOTHESIS_NOT_MET, ev)
    return Verdict("L1", Status.HOLDS, ev)


def _independent_pair_exists(edges: list) -> bool:
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if e.z != f.z and e.w != f.w:
                return True
    return False


def check_lemma_2(
    g: Graph, bundle: InvariantBundle | None = None, path_cap: int | None = DEFAULT_PATH_CAP
) -> Verdict:
    b = bundle if bundle is not None else compute_bundle(g)
    ev = _evidence(b)
    if b.circ < 3 or b.circ == b.n:
        return Verdict("L2", Status.HYPOTHESIS_NOT_MET, ev)
    qualifying = 0
    for cyc in all_longest_cycles(g):
        cyc_mask = mask_of(cyc.verts)
        for path in all_longest_paths_in(g, forbidden=cyc.verts, cap=path_cap):
            ncx, ncy = _attachment_rows(g, cyc_mask, path)
            if ncx != ncy or ncx.bit_count() < 2:
                continue
            qualifying += 1
            p = path.length
            d = segment_decomposition(g, cyc, path)
            pools = enumerate_intermediate_paths(g, d, max_len=g.n)
            for (a, bb), pool in pools.items():
                tot = d.segment_length(a) + d.segment_length(bb)
                for l in pool:
                    if tot < 2 * p + 2 * l.length + 4:
                        ev.update(
                            cycle=cyc.verts, path=path.verts, segment_pair=(a, bb),
                            intermediate=l.verts, part="a1", bound=2 * p + 2 * l.length + 4,
                            segment_total=tot,
                        )
                        return _counterexample(g, "L2", ev)
                edges = [l for l in pool if l.length == 1]
                if len(edges) == len(pool) and 1 <= len(pool) <= 3:
                    i = len(pool)
                    if tot < 2 * p + i + 5:
                        ev.update(
                            cycle=cyc.verts, path=path.verts, segment_pair=(a, bb),
                            part="a2", i=i, bound=2 * p + i + 5, segment_total=tot,
                        )
                        return _counterexample(g, "L2", ev)
                if _independent_pair_exists(edges) and tot < 2 * p + 8:
                    ev.update(
                        cycle=cyc.verts, path=path.verts, segment_pair=(a, bb),
                        part="a3", bound=2 * p + 8, segment_total=tot,
                    )
                    return _counterexample(g, "L2", ev)
    if qualifying == 0:
        return Verdict("L2", Status.HYPOTHESIS_NOT_MET, ev)
    return Verdict("L2", Status.HOLDS, ev)


def check_lemma_3(
    g: Graph, bundle: InvariantBundle | None = None, path_cap: int | None = DEFAULT_PATH_CAP
) -> Verdict:
    b = bundle if bundle is not None else compute_bundle(g)
    ev = _evidence(b)
    if b.circ < 3 or b.circ == b.n:
        return Verdict("L3", Status.HYPOTHESIS_NOT_MET, ev)
    threshold = b.kappa * (b.delta + 1)
    for cyc in all_longest_cycles(g):
        if cyc.length >= threshold:
            continue
        cyc_mask = mask_of(cyc.verts)
        found = False
        for path in all_longest_paths_in(g, forbidden=cyc.verts, cap=path_cap):
            ncx, ncy = _attachment_rows(g, cyc_mask, path)
            if ncx.bit_count() >= 2 and ncy.bit_count() >= 2:
                found = True
                break
        if not found:
            ev.update(cycle=cyc.verts, threshold=threshold)
            return _counterexample(g, "L3", ev)
    return Verdict("L3", Status.HOLDS, ev)


_CHECKS = {
    "A": check_theorem_A,
    "B": check_theorem_B,
    "1": check_theorem_1,
    "C1": check_corollary_1,
    "L1": check_lemma_1,
    "L2": check_lemma_2,
    "L3": check_lemma_3,
}


def evaluate_graph(
    g: Graph, theorems=DEFAULT_THEOREMS, bundle: InvariantBundle | None = None
) -> dict[str, Verdict]:
    """One Verdict per selected theorem, sharing a single invariant bundle."""
    unknown = [t for t in theorems if t not in _CHECKS]
    if unknown:
        raise GraphError(f"unknown theorem selection: {', '.join(unknown)}")
    b = bundle if bundle is not None else compute_bundle(g)
    out = {t: _CHECKS[t](g, b) for t in theorems}
    if "1" in out and "B" in out:
        # a Theorem 1 bound of 2*delta+5 subsumes Theorem B's 2*delta+2
        if (
            out["1"].status is Status.HOLDS
            and b.circ >= 2 * b.delta + 5
            and b.tau.at_least(1)
        ):
            assert out["B"].status is Status.HOLDS
    return out


# -- batch driver -----------------------------------------------------------

@dataclass
class Report:
    source: str
    total: int = 0
    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    records: list = field(default_factory=list)
    elapsed: float = 0.0

    def count(self, theorem: str, status: Status) -> int:
        return self.counts.get(theorem, {}).get(status.value, 0)

    @property
    def counterexample_total(self) -> int:
        return len(self.counterexamples)


def _tau_fields(tau: Toughness) -> tuple[int, int]:
    if tau.is_infinite:
        return 1, 0
    return tau.value.numerator, tau.value.denominator


def record_line(g6: str, verdict: Verdict, b: InvariantBundle) -> str:
    num, den = _tau_fields(b.tau)
    return "\t".join(
        str(x) for x in (
            g6, verdict.theorem, verdict.status.value,
            b.n, b.delta, b.kappa, num, den, b.circ,
        )
    )


def _evaluate_line(args: tuple[str, tuple[str, ...]]):
    g6, theorems = args
    try:
        g = parse_graph6(g6)
        b = compute_bundle(g)
        verdicts = evaluate_graph(g, theorems, b)
    except GraphError as exc:
        return "err", str(exc)
    recs = [record_line(g6, verdicts[t], b) for t in theorems]
    statuses = {t: verdicts[t].status for t in theorems}
    cexs = [
        {"graph6": g6, "theorem": t, "evidence": verdicts[t].evidence}
        for t in theorems
        if verdicts[t].status is Status.COUNTEREXAMPLE
    ]
    return "ok", recs, statuses, cexs


def batch_verify(
    lines, theorems=DEFAULT_THEOREMS, workers: int = 1, source: str = "<stream>"
) -> Report:
    """Evaluate each graph6 line; order-preserving, malformed lines recorded.

    With workers > 1 the graphs are distributed over a process pool; output
    ordering still matches input ordering exactly.
    """
    theorems = tuple(theorems)
    unknown = [t for t in theorems if t not in _CHECKS]
    if unknown:
        raise GraphError(f"unknown theorem selection: {', '.join(unknown)}")
    started = time.monotonic()
    report = Report(source=source)
    report.counts = {t: {s.value: 0 for s in Status} for t in theorems}

    tasks = []
    for lineno, raw in enumerate(lines, start=1):
        g6 = raw.strip()
        if g6:
            tasks.append((lineno, g6))

    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(
                _evaluate_line, [(g6, theorems) for _, g6 in tasks], chunksize=64
            )
    else:
        results = [_evaluate_line((g6, theorems)) for _, g6 in tasks]

    for (lineno, g6), res in zip(tasks, results):
        if res[0] == "err":
            report.failures.append((lineno, g6, res[1]))
            continue
        _, recs, statuses, cexs = res
        report.total += 1
        report.records.extend(recs)
        for t, st in statuses.items():
            report.counts[t][st.value] += 1
        for ce in cexs:
            ce["line"] = lineno
            report.counterexamples.append(ce)

    report.elapsed = time.monotonic() - started
    return report


def render_table(report: Report, timing: bool = True) -> str:
    """Aligned per-theorem status counts; timing optional so output can be
    byte-stable across runs."""
    headers = ["theorem"] + [s.value for s in Status]
    rows = [headers]
    for t, by_status in report.counts.items():
        rows.append([t] + [str(by_status[s.value]) for s in Status])
    widths = [max(len(r[i]) for r in rows) for i in range(len(headers))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.append("")
    summary = (f"graphs: {report.total}  counterexamples: {report.counterexample_total}  "
               f"failures: {len(report.failures)}")
    if timing:
        summary += f"  elapsed: {report.elapsed:.2f}s"
    lines.append(summary)
    for lineno, g6, msg in report.failures:
        lines.append(f"line {lineno}: {g6!r}: {msg}")
    return "\n".join(lines)
