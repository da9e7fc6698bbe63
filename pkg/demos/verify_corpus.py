"""Check the cycle-length bounds on a random corpus plus the Petersen graph.

Run:  python3 demos/verify_corpus.py
"""

import random

from cyclebound.graphs import encode_graph6, petersen, random_gnp
from cyclebound.verifier import batch_verify, render_table


def main() -> None:
    rng = random.Random(7)
    lines = [encode_graph6(random_gnp(10, 0.4, seed=rng.randrange(10**6)))
             for _ in range(200)]
    lines.append(encode_graph6(petersen()))

    report = batch_verify(lines, source="G(10,0.4) x200 + Petersen")
    print(render_table(report, timing=False))

    rows = [rec.split("\t") for rec in report.records]
    exceptional = sorted({r[0] for r in rows if r[2] == "PetersenException"})
    print(f"graphs hitting the exceptional case: {exceptional}")

    print("\nfirst records (graph6, theorem, status, n, delta, kappa, tau, c):")
    for rec in report.records[:4]:
        print(" ", rec)


if __name__ == "__main__":
    main()
