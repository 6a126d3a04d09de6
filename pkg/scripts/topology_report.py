"""Table of pc bounds, constructed palettes and exact values over the network presets.

    python3 scripts/topology_report.py --max-size 4 --node-cap 200000
"""
import argparse
import itertools
import json
import time

from properpath.coloring import is_proper_connected
from properpath.constructive import color_topology
from properpath.errors import SearchBudgetExceeded
from properpath.graph import diameter
from properpath.products import build_topology
from properpath.solver import SearchConfig, pc_bounds, pc_exact


def instances(max_size):
    sizes = range(2, max_size + 1)
    rings = range(3, max_size + 1)
    for name in ("grid", "mesh", "lex-mesh"):
        for p in itertools.combinations_with_replacement(sizes, 2):
            yield name, list(p)
    for p in itertools.combinations_with_replacement(sizes, 3):
        yield "mesh", list(p)
    for name in ("torus", "lex-torus"):
        for p in itertools.combinations_with_replacement(rings, 2):
            yield name, list(p)
    for name in ("ghc", "lex-ghc"):
        for p in itertools.combinations_with_replacement(sizes, 2):
            yield name, list(p)
    for n in range(3, max(3, max_size) + 1):
        yield "hyper-petersen", [n]
        yield "lex-hyper-petersen", [n]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--node-cap", type=int, default=200_000)
    ap.add_argument("--json", help="also dump rows to this file")
    args = ap.parse_args()
    cfg = SearchConfig(max_nodes=args.node_cap)

    rows = []
    print(f"{'topology':<20}{'params':<12}{'n':>5}{'m':>6}{'diam':>6}{'bounds':>9}{'built':>7}{'exact':>7}{'sec':>7}")
    for name, params in instances(args.max_size):
        t0 = time.perf_counter()
        P = build_topology(name, params)
        lo, hi = pc_bounds(P.graph, P, cfg)
        built = color_topology(name, params, cfg)
        assert is_proper_connected(P.graph, built.coloring)
        try:
            exact = int(pc_exact(P.graph, hi, cfg).value)
        except SearchBudgetExceeded:
            exact = None
        dt = time.perf_counter() - t0
        row = dict(name=name, params=params, n=P.graph.n, m=P.graph.m, diameter=diameter(P.graph),
                   bounds=[lo, hi], built=built.coloring.palette_size, exact=exact, seconds=round(dt, 3))
        rows.append(row)
        print(f"{name:<20}{str(params):<12}{row['n']:>5}{row['m']:>6}{row['diameter']:>6}"
              f"{str((lo, hi)):>9}{row['built']:>7}{str(exact):>7}{dt:>7.2f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
