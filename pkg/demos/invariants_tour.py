"""Invariants on a handful of named graphs.

Run:  python3 demos/invariants_tour.py
"""

from cyclebound.graphs import (
    complete,
    complete_bipartite,
    cycle_graph,
    encode_graph6,
    from_edges,
    petersen,
)
from cyclebound.invariants import (
    all_longest_cycles,
    circumference,
    is_hamiltonian,
    toughness,
    vertex_connectivity,
)

SAMPLES = [
    ("K5", complete(5)),
    ("C7", cycle_graph(7)),
    ("K2,3", complete_bipartite(2, 3)),
    ("K3,3", complete_bipartite(3, 3)),
    ("star", from_edges(5, [(0, i) for i in range(1, 5)])),
    ("Petersen", petersen()),
]


def main() -> None:
    print(f"{'graph':<10}{'graph6':<12}{'tau':>6}{'kappa':>7}{'c':>4}  hamiltonian")
    for name, g in SAMPLES:
        tau = toughness(g)
        c, _ = circumference(g)
        ham = "yes" if is_hamiltonian(g) else "no"
        print(f"{name:<10}{encode_graph6(g):<12}{str(tau):>6}"
              f"{vertex_connectivity(g):>7}{c:>4}  {ham}")

    print()
    p = petersen()
    tau = toughness(p)
    print(f"Petersen toughness witness: remove {sorted(tau.witness_cut)}")
    cycles = all_longest_cycles(p)
    print(f"Petersen has {len(cycles)} distinct longest cycles; one of them:")
    print(" ", "-".join(str(v) for v in cycles[0].verts))


if __name__ == "__main__":
    main()
