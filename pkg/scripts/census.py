"""Census of small 3-hypergraphs and tournaments.

Prints, for each order, how many objects are prime, critical and
realizable, and how the critical 3-hypergraphs split between circular and
decomposable ones. ``--csv`` writes the table as well.
"""

import argparse
import csv

import numpy as np

from crithyper.enumeration import (canonical_hypergraph_mask, critical_shape_counts, hypergraph_critical_table,
                                   hypergraph_prime_table, realizable_table, tournament_critical_table,
                                   tournament_prime_table)


def hypergraph_row(n):
    prime, crit = hypergraph_prime_table(n), hypergraph_critical_table(n)
    row = {"kind": "3-hypergraph", "n": n, "total": len(prime), "prime": int(prime.sum()),
           "critical": int(crit.sum()), "realizable": int(realizable_table(n).sum())}
    if n <= 5:
        row["critical_classes"] = len({canonical_hypergraph_mask(n, int(m)) for m in np.nonzero(crit)[0]})
    if n >= 5:
        shapes = critical_shape_counts(n)
        row["circular"], row["decomposed"] = shapes["circular"], shapes["decomposed_ok"]
    return row


def tournament_row(n):
    prime, crit = tournament_prime_table(n), tournament_critical_table(n)
    return {"kind": "tournament", "n": n, "total": len(prime), "prime": int(prime.sum()),
            "critical": int(crit.sum())}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-hypergraph-n", type=int, default=6, choices=range(3, 7))
    ap.add_argument("--max-tournament-n", type=int, default=7, choices=range(3, 8))
    ap.add_argument("--csv")
    args = ap.parse_args()

    rows = [hypergraph_row(n) for n in range(3, args.max_hypergraph_n + 1)]
    rows += [tournament_row(n) for n in range(3, args.max_tournament_n + 1)]
    fields = ["kind", "n", "total", "prime", "critical", "realizable", "critical_classes", "circular",
              "decomposed"]
    print("  ".join(f"{f:>12s}" for f in fields))
    for r in rows:
        print("  ".join(f"{str(r.get(f, '')):>12s}" for f in fields))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fields)
            w.writeheader()
            w.writerows(rows)


if __name__ == "__main__":
    main()
