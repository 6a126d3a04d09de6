"""Command line interface.

Structured results go to stdout as JSON, human-readable summaries to
stderr. Exit codes: 0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from pathlib import Path

from .coloring import is_odd_even_proper, is_proper_connected
from .constructive import (
    color_cartesian,
    color_direct,
    color_direct_k2,
    color_lexicographic,
    color_strong,
    color_topology,
)
from .errors import InvalidParameter, SearchBudgetExceeded
from .graph import (
    INF,
    Graph,
    diameter,
    is_connected,
    make_complete,
    make_cycle,
    make_hypercube,
    make_path,
    make_petersen,
    make_star,
)
from .io import coloring_from_json, graph_from_json, graph_to_json, parse_graph, read_json, to_dot
from .products import TOPOLOGY_ALIASES, ProductKind, build_topology, iterated_product, product
from .solver import SearchConfig, odd_cycle_decomposition, oepc_exact, pc_bounds, pc_exact

FAMILIES = ("path", "cycle", "complete", "star", "petersen", "hypercube")


class CliError(Exception):
    pass


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=None, separators=(",", ":"))
    sys.stdout.write("\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _write(path, text: str) -> None:
    Path(path).write_text(text)


def _load_graph(path: str) -> tuple[Graph, dict]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        G = parse_graph(text)
    except InvalidParameter as exc:
        raise CliError(f"{path}: {exc}") from None
    meta = {}
    if text.lstrip().startswith("{"):
        meta = json.loads(text)
    return G, meta


def _load_coloring(path: str):
    try:
        return coloring_from_json(read_json(path))
    except OSError as exc:
        raise CliError(f"{path}: cannot read ({exc.strerror})") from None
    except InvalidParameter as exc:
        raise CliError(f"{path}: {exc}") from None


def _require_connected(G: Graph, path: str) -> None:
    if not is_connected(G):
        raise CliError(f"{path}: graph is disconnected")


def _hints_from_meta(G: Graph, meta: dict):
    """Factor list stored next to a product graph, when it rebuilds exactly that graph."""
    if "factors" not in meta or "kind" not in meta:
        return None
    factors = [graph_from_json(f) for f in meta["factors"]]
    rebuilt = iterated_product(factors, meta["kind"])
    return rebuilt if rebuilt.graph == G else None


def _product_json(P, extra=None) -> dict:
    meta = P.metadata()
    meta["factors"] = [graph_to_json(F) for F in P.factors]
    if extra:
        meta.update(extra)
    return graph_to_json(P.graph, meta)


def _output_graph(args, G: Graph, payload: dict, coloring=None) -> None:
    if getattr(args, "output", None):
        _write(args.output, json.dumps(payload) + "\n")
    if getattr(args, "dot", False):
        sys.stdout.write(to_dot(G, coloring))
    else:
        _emit(payload)


def _config(args) -> SearchConfig:
    return SearchConfig(jobs=max(1, getattr(args, "jobs", 1) or 1))


def _inf_to_none(x):
    return None if x == INF else x


# --- commands ---------------------------------------------------------------

def cmd_gen(args) -> None:
    fam = args.family
    if fam != "petersen" and args.n is None:
        raise CliError(f"gen --family {fam} needs --n")
    build = {
        "path": make_path, "cycle": make_cycle, "complete": make_complete,
        "star": make_star, "hypercube": make_hypercube,
    }
    G = make_petersen() if fam == "petersen" else build[fam](args.n)
    _say(f"{fam}: {G.n} vertices, {G.m} edges")
    _output_graph(args, G, graph_to_json(G))


def cmd_product(args) -> None:
    A, _ = _load_graph(args.first)
    B, _ = _load_graph(args.second)
    P = product(A, B, args.kind)
    _say(f"{P.kind.value} product: {P.graph.n} vertices, {P.graph.m} edges")
    _output_graph(args, P.graph, _product_json(P))


def _parse_params(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"--params must be comma-separated integers, got {text!r}") from None


def cmd_topology(args) -> None:
    params = _parse_params(args.params)
    P = build_topology(args.name, params)
    name = TOPOLOGY_ALIASES.get(args.name, args.name)
    _say(f"{name} {params}: {P.graph.n} vertices, {P.graph.m} edges")
    _output_graph(args, P.graph, _product_json(P, {"topology": {"name": name, "params": params}}))


def cmd_pc(args) -> None:
    G, meta = _load_graph(args.graph)
    _require_connected(G, args.graph)
    cfg = _config(args)
    if args.mode == "bounds":
        lower, upper = pc_bounds(G, _hints_from_meta(G, meta), cfg)
        _say(f"{lower} <= pc <= {upper}")
        _emit({"lower": lower, "upper": upper})
        return
    cert = pc_exact(G, args.k_max, cfg)
    _say(f"pc = {cert.value}")
    _emit(cert.to_json())


def cmd_oepc(args) -> None:
    G, _ = _load_graph(args.graph)
    _require_connected(G, args.graph)
    cert = oepc_exact(G, args.k_max, _config(args))
    _say(f"oepc = {'infinite' if cert.value == INF else cert.value}")
    _emit(cert.to_json())


def cmd_color(args) -> None:
    cfg = _config(args)
    if args.topology:
        if args.graphs:
            raise CliError("pass either factor files or --topology, not both")
        result = color_topology(args.topology, _parse_params(args.params or ""), cfg)
    else:
        scheme = args.scheme
        need = 1 if scheme == "direct-k2" else 2
        if len(args.graphs) != need:
            raise CliError(f"scheme {scheme} takes {need} graph file(s), got {len(args.graphs)}")
        loaded = [_load_graph(p)[0] for p in args.graphs]
        for G, p in zip(loaded, args.graphs):
            _require_connected(G, p)
        if scheme == "direct-k2":
            result = color_direct_k2(loaded[0], config=cfg)
        else:
            G, H = loaded
            cg, ch = pc_exact(G, config=cfg), pc_exact(H, config=cfg)
            if scheme in ("cartesian", "strong"):
                build = color_cartesian if scheme == "cartesian" else color_strong
                result = build(G, H, ch.certificate) if ch.value <= cg.value else build(G, H, c_G=cg.certificate)
            elif scheme == "lex":
                result = color_lexicographic(G, H, cg.certificate, ch.certificate)
            else:
                result = color_direct(G, H, ch.certificate, config=cfg)
    payload = result.to_json()
    if args.product_out:
        _write(args.product_out, json.dumps(_product_json(result.product)) + "\n")
    if args.output:
        _write(args.output, json.dumps(payload) + "\n")
    _say(f"{result.scheme} [{result.case_tag}]: {result.coloring.palette_size} colors, claimed {result.claimed_palette}")
    if args.dot:
        sys.stdout.write(to_dot(result.product.graph, result.coloring))
    else:
        _emit(payload)


def cmd_verify(args) -> None:
    G, _ = _load_graph(args.graph)
    c = _load_coloring(args.coloring)
    try:
        c.validate(G)
    except InvalidParameter as exc:
        raise CliError(f"{args.coloring}: {exc}") from None
    check = is_odd_even_proper if args.odd_even else is_proper_connected
    report = check(G, c, jobs=max(1, args.jobs))
    what = "odd-even proper" if args.odd_even else "proper connected"
    _say(f"{what}: {report.connected}" + (f" (fails at {report.failing_pair})" if report.failing_pair else ""))
    _emit({"connected": report.connected,
           "failing_pair": list(report.failing_pair) if report.failing_pair else None,
           "pairs_checked": report.pairs_checked})


def cmd_decompose(args) -> None:
    G, _ = _load_graph(args.graph)
    d = odd_cycle_decomposition(G)

    def comps(cs):
        return [{"vertices": list(c.vertices), "edges": list(c.edges)} for c in cs]

    _say(f"{len(d.odd_edges)} edges on odd cycles in {len(d.o_components)} piece(s); "
         f"{len(d.bridge_like_edges)} others in {len(d.b_components)} piece(s)")
    _emit({"odd_edges": sorted(d.odd_edges), "bridge_like_edges": sorted(d.bridge_like_edges),
           "o_components": comps(d.o_components), "b_components": comps(d.b_components)})


# --- audit --------------------------------------------------------------------

def _claim(name: str, params: list[int]):
    """(lo, hi) range pc is expected to fall in for this family, or None."""
    family = name.removeprefix("lex-")
    lex = name.startswith("lex-")
    if name == "grid":
        return 2, 3
    if name == "mesh":
        return 2, 2
    if name == "lex-mesh":
        return (1, 1) if all(p == 2 for p in params) else (2, 2)
    if name == "torus":
        return 2, 3
    if name == "lex-torus":
        return 2, 2
    if family == "ghc":
        return (1, 1) if lex else (2, 2)
    if family == "hyper-petersen":
        if lex:
            return 2, 2
        return (2, 2) if params[0] == 3 else (2, 3)
    return None


def _audit_params(name: str, max_n: int, rng: random.Random, limit: int) -> list[list[int]]:
    family = name.removeprefix("lex-")
    if family == "hyper-petersen":
        out = [[n] for n in range(3, max(3, max_n) + 1)]
    else:
        low = 3 if family == "torus" else 2
        sizes = range(low, max(low, max_n) + 1)
        out = [list(p) for p in itertools.combinations_with_replacement(sizes, 2)]
        if family in ("mesh", "ghc"):
            out += [list(p) for p in itertools.combinations_with_replacement(sizes, 3)]
    if len(out) > limit:
        out = sorted(rng.sample(out, limit))
    return out


def cmd_audit(args) -> None:
    name = TOPOLOGY_ALIASES.get(args.family, args.family)
    rng = random.Random(args.seed)
    cfg = SearchConfig(max_nodes=args.node_cap, jobs=max(1, args.jobs))
    rows = []
    for params in _audit_params(name, args.max_n, rng, args.limit):
        P = build_topology(name, params)
        lower, upper = pc_bounds(P.graph, P, cfg)
        built = color_topology(name, params, cfg)
        verified = is_proper_connected(P.graph, built.coloring).connected
        try:
            exact = int(pc_exact(P.graph, upper, cfg).value)
        except SearchBudgetExceeded:
            exact = None
        claim = _claim(name, params)
        checks = [verified, built.coloring.palette_size <= built.claimed_palette, lower <= upper]
        if exact is not None:
            checks.append(lower <= exact <= upper)
            checks.append(exact <= built.claimed_palette)
        claim_ok = None
        if claim is not None:
            if exact is not None:
                claim_ok = claim[0] <= exact <= claim[1]
            elif upper < claim[0] or lower > claim[1]:
                claim_ok = False
        rows.append({
            "params": params, "n": P.graph.n, "m": P.graph.m, "diameter": _inf_to_none(diameter(P.graph)),
            "bounds": [lower, upper], "constructed": built.coloring.palette_size,
            "claimed_palette": built.claimed_palette, "verified": verified,
            "pc_exact": exact, "claimed_range": list(claim) if claim else None,
            "claim_holds": claim_ok, "pass": all(checks),
        })
    _say(f"{'params':<14}{'n':>5}{'m':>6}{'bounds':>9}{'built':>7}{'exact':>7}{'claim':>8}  status")
    for r in rows:
        claim = "-" if r["claimed_range"] is None else "{}-{}".format(*r["claimed_range"])
        flag = "PASS" if r["pass"] else "FAIL"
        if r["claim_holds"] is False:
            flag += " (claim violated)"
        _say(f"{str(r['params']):<14}{r['n']:>5}{r['m']:>6}{str(tuple(r['bounds'])):>9}"
             f"{r['constructed']:>7}{str(r['pc_exact']):>7}{claim:>8}  {flag}")
    _emit({"family": name, "rows": rows, "all_pass": all(r["pass"] for r in rows)})
    if not all(r["pass"] for r in rows):
        raise CliError(f"audit of {name}: {sum(not r['pass'] for r in rows)} row(s) failed")


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="properpath", description="Proper connection numbers of graph products.")
    sub = parser.add_subparsers(dest="command", required=True)

    def out_flags(p):
        p.add_argument("-o", "--output", help="also write the JSON result to this file")
        p.add_argument("--dot", action="store_true", help="print DOT instead of JSON")

    def jobs_flag(p):
        p.add_argument("--jobs", type=int, default=1, help="worker processes (results do not depend on it)")

    p = sub.add_parser("gen", help="generate a standard graph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    out_flags(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("product", help="build a product of two graph files")
    p.add_argument("--kind", required=True, choices=[k.value for k in ProductKind])
    p.add_argument("first")
    p.add_argument("second")
    out_flags(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("topology", help="build a network preset")
    p.add_argument("--name", required=True,
                   choices=["grid", "mesh", "lex-mesh", "torus", "lex-torus", "ghc", "lex-ghc",
                            "hyper-petersen", "lex-hyper-petersen", "hp", "hl"])
    p.add_argument("--params", required=True, help="comma-separated sizes, e.g. 3,4")
    out_flags(p)
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("pc", help="proper connection number")
    p.add_argument("mode", choices=["exact", "bounds"])
    p.add_argument("graph")
    p.add_argument("--k-max", type=int)
    jobs_flag(p)
    p.set_defaults(func=cmd_pc)

    p = sub.add_parser("oepc", help="odd-even proper connection number")
    p.add_argument("mode", choices=["exact"])
    p.add_argument("graph")
    p.add_argument("--k-max", type=int)
    jobs_flag(p)
    p.set_defaults(func=cmd_oepc)

    p = sub.add_parser("color", help="constructive coloring of a product")
    p.add_argument("--scheme", required=True, choices=["cartesian", "strong", "lex", "direct", "direct-k2"])
    p.add_argument("graphs", nargs="*", help="factor graph files (G H, or G for direct-k2)")
    p.add_argument("--topology", help="color a network preset instead of factor files")
    p.add_argument("--params")
    p.add_argument("--product-out", help="write the product graph here")
    out_flags(p)
    jobs_flag(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--odd-even", action="store_true")
    jobs_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="split edges by odd-cycle membership")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("audit", help="check a network family against its pc claims")
    p.add_argument("--family", required=True,
                   choices=["grid", "mesh", "lex-mesh", "torus", "lex-torus", "ghc", "lex-ghc",
                            "hyper-petersen", "lex-hyper-petersen", "hp", "hl"])
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--limit", type=int, default=12, help="max instances; sampled with --seed beyond that")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--node-cap", type=int, default=200_000, help="coloring-search node cap for exact pc")
    jobs_flag(p)
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (CliError, InvalidParameter, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
