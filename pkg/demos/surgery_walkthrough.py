"""Lengthening a non-maximum cycle by splicing through an external path.

Starts from a hexagon with a handle vertex and a chord, shows the segment
decomposition of the 6-cycle against the handle, applies the one splice
that gains a vertex, and then lets the heuristic confirm the result.

Run:  python3 demos/surgery_walkthrough.py
"""

from cyclebound.graphs import from_edges, petersen
from cyclebound.invariants import OrientedCycle, Path, circumference
from cyclebound.surgery import (
    claim_moves,
    enumerate_intermediate_paths,
    heuristic_longest_cycle,
    improve_once,
    segment_decomposition,
    splice_intermediate,
)


def build_example():
    # hexagon 0..5, chord (1,4), vertex 6 hanging off 0 and 3
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
             (1, 4), (0, 6), (3, 6)]
    return from_edges(7, edges)


def main() -> None:
    g = build_example()
    cyc = OrientedCycle(tuple(range(6)))
    ext = Path((6,))
    print(f"cycle:          {'-'.join(map(str, cyc.verts))}  (length {cyc.length})")
    print(f"external path:  just vertex {ext.verts[0]}, attached by edges")

    d = segment_decomposition(g, cyc, ext)
    print(f"attachments {d.attachments}, segments {d.segments}, "
          f"path interior size {d.p_bar}")

    moves = claim_moves(g, d)
    print(f"{len(moves)} guaranteed rewiring moves from the decomposition alone")

    pools = enumerate_intermediate_paths(g, d)
    (pair, links), = pools.items()
    link = links[0]
    print(f"chord {link.z}-{link.w} links the interiors of segments {pair}")

    mv = splice_intermediate(g, d, link, *pair)
    longer = mv.result
    print(f"after splice:   {'-'.join(map(str, longer.verts))}  "
          f"(length {longer.length}, gained {mv.delta})")

    again = improve_once(g, longer)
    print(f"improve_once on the 7-cycle: {again}  (it is hamiltonian already)")

    c, _ = circumference(g)
    found = heuristic_longest_cycle(g, seed=0)
    print(f"exact circumference {c}, heuristic reaches {found.length}")

    p = petersen()
    best = heuristic_longest_cycle(p, seed=0)
    print(f"Petersen: heuristic {best.length}, exact {circumference(p)[0]} "
          f"(no hamiltonian cycle exists)")


if __name__ == "__main__":
    main()
