"""Shared fixtures: the cached connected-graph corpus, the exhaustive sweep
summary several acceptance criteria reuse, and the acceptance report printed
at the end of the run."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import pytest

from cyclebound.enumeration import connected_graphs
from cyclebound.graphs import GraphError, encode_graph6, parse_graph6
from cyclebound.invariants import all_longest_cycles, all_longest_paths_in, circumference
from cyclebound.surgery import (
    SearchLimits,
    _insertion_moves,
    claim_moves,
    enumerate_intermediate_paths,
    improve_once,
    segment_decomposition,
    splice_intermediate,
)
from cyclebound.verifier import THEOREMS, Report, batch_verify

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
FULL_SEARCH = SearchLimits(path_candidates=None)


def _corpus_lines(config, n: int) -> list[str]:
    """graph6 lines for the connected graphs on n vertices, cached across
    runs; a stale or short cache entry is regenerated, never trusted."""
    key = f"cyclebound/connected-{n}"
    cache = getattr(config, "cache", None)
    lines = cache.get(key, None) if cache is not None else None
    if not isinstance(lines, list) or len(lines) != CONNECTED_COUNTS[n]:
        lines = [encode_graph6(g) for g in connected_graphs(n)]
        if cache is not None:
            cache.set(key, lines)
    return lines


@pytest.fixture(scope="session")
def corpus(request) -> dict[int, list[str]]:
    out = {n: _corpus_lines(request.config, n) for n in sorted(CONNECTED_COUNTS)}
    for n, lines in out.items():
        assert len(lines) == CONNECTED_COUNTS[n]
    return out


@dataclass
class SweepSummary:
    """What one pass over the n <= 8 corpus saw."""

    report: Report
    total: int = 0
    pairs: int = 0
    splices: int = 0
    splice_violations: list = field(default_factory=list)
    improving: list = field(default_factory=list)
    improve_hits: list = field(default_factory=list)


def _audit_surgery(g6: str, summary: SweepSummary) -> None:
    """Exercise every surgery move on every (longest cycle, longest external
    path) pair of one graph, recording splice-identity violations and any
    move that claims to lengthen an already longest cycle."""
    g = parse_graph6(g6)
    circ, _ = circumference(g)
    if not 3 <= circ < g.n:
        return
    for cyc in all_longest_cycles(g):
        for path in all_longest_paths_in(g, forbidden=cyc.verts, cap=None):
            try:
                d = segment_decomposition(g, cyc, path)
            except GraphError:
                # endpoint with no cycle neighbour: no decomposition exists
                continue
            summary.pairs += 1
            moves = _insertion_moves(g, d)
            for (a, b), pool in enumerate_intermediate_paths(g, d, max_len=g.n).items():
                for link in pool:
                    mv = splice_intermediate(g, d, link, a, b)
                    if mv is None:
                        continue
                    moves.append(mv)
                    summary.splices += 1
                    d1, d3 = mv.dropped
                    want = cyc.length - d1 - d3 + link.length + d.p_bar + 2
                    if mv.result.length != want:
                        summary.splice_violations.append((g6, mv.result.length, want))
            moves.extend(claim_moves(g, d))
            for mv in moves:
                if mv.delta > 0:
                    summary.improving.append((g6, mv.name, mv.delta))
        if improve_once(g, cyc, FULL_SEARCH) is not None:
            summary.improve_hits.append((g6, cyc.verts))


@pytest.fixture(scope="session")
def sweep8(corpus) -> SweepSummary:
    """All seven checks through the batch driver plus the full surgery audit,
    once per session, over every connected graph on at most 8 vertices."""
    lines = [g6 for n in sorted(CONNECTED_COUNTS) for g6 in corpus[n]]
    workers = max(1, min(4, os.cpu_count() or 1))
    report = batch_verify(lines, theorems=THEOREMS, workers=workers, source="connected n<=8")
    summary = SweepSummary(report=report, total=len(lines))
    for n in range(3, 9):
        for g6 in corpus[n]:
            _audit_surgery(g6, summary)
    return summary


ACCEPTANCE_RESULTS: list[tuple[int, bool, str]] = []


@pytest.fixture
def acceptance():
    """Recorder for the end-of-run acceptance report; recording a failure
    also fails the calling test."""

    def record(criterion: int, passed: bool, detail: str) -> None:
        ACCEPTANCE_RESULTS.append((criterion, passed, detail))
        assert passed, f"criterion {criterion}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
