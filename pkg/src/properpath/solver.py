"""Exact proper connection numbers by pruned exhaustive search.

Colorings are enumerated edge by edge in index order. Palette symmetry is
broken canonically: edge 0 takes color 1 and color ``c + 1`` may only
appear once ``c`` has. A partial coloring is abandoned as soon as some pair
of vertices has no proper walk even when every uncolored edge may take
whatever color suits it; that relaxation over-approximates every
completion, so the pruning never discards a solution.
"""
from __future__ import annotations

import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .coloring import (
    DEFAULT_BUDGET,
    EdgeColoring,
    _walk_bfs,
    greedy_proper_edge_coloring,
    is_odd_even_proper,
    is_proper_connected,
)
from .errors import InvalidParameter, SearchBudgetExceeded
from .graph import INF, Graph, blocks, connected_components, is_bipartite, is_connected

PC, OEPC = "pc", "oepc"
EXHAUSTIVE, CONSTRUCTIVE, BOUND_ONLY = "exhaustive", "constructive", "bound-only"


@dataclass(frozen=True)
class SearchConfig:
    # largest edge count for which palettes of 3+ colors are searched
    max_edges_wide: int = 14
    # cap on visited nodes of the coloring search tree
    max_nodes: int = 5_000_000
    # node cap of each proper-path backtracking search
    path_budget: int = DEFAULT_BUDGET
    # seeded local search tried before exhaustive search on graphs with more
    # than ``local_search_min_edges`` edges; 0 steps disables it
    local_search_steps: int = 3000
    local_search_min_edges: int = 10
    jobs: int = 1


DEFAULT_CONFIG = SearchConfig()


@dataclass(frozen=True)
class PcCertificate:
    value: float
    certificate: Optional[EdgeColoring]
    method: str
    quantity: str

    def to_json(self) -> dict:
        out = {
            "value": None if self.value == INF else int(self.value),
            "method": self.method,
            "quantity": self.quantity,
        }
        if self.certificate is not None:
            out["k"] = self.certificate.palette_size
            out["colors"] = list(self.certificate.colors)
        return out


@dataclass(frozen=True)
class Component:
    """A connected piece of an edge subgraph, relabelled to local indices."""

    graph: Graph
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class OddCycleDecomposition:
    odd_edges: frozenset[int]
    bridge_like_edges: frozenset[int]
    o_components: tuple[Component, ...] = field(default=())
    b_components: tuple[Component, ...] = field(default=())


# --- search core ------------------------------------------------------------

def _relaxed_walk_ok(adj, col, n: int) -> bool:
    """Every vertex pair joined by a proper walk when color 0 is a wildcard."""
    full = (1 << n) - 1
    for s in range(n):
        seen = {(s, 0)}
        reached = 1 << s
        queue = deque([(s, 0)])
        while queue:
            v, last = queue.popleft()
            for w, e in adj[v]:
                c = col[e]
                if c and c == last:
                    continue
                state = (w, c)
                if state not in seen:
                    seen.add(state)
                    reached |= 1 << w
                    queue.append(state)
        if reached != full:
            return False
    return True


class _ColoringSearch:
    def __init__(self, G: Graph, k: int, check, nodes_cap: int):
        self.G = G
        self.k = k
        self.check = check
        self.nodes_cap = nodes_cap
        self.nodes = 0
        self.col = [0] * G.m

    def run(self, prefix: Sequence[int] = ()) -> Optional[list[int]]:
        G, col = self.G, self.col
        for i, c in enumerate(prefix):
            col[i] = c
        if prefix and not _relaxed_walk_ok(G.adjacency, col, G.n):
            return None
        top = max(prefix, default=0)
        return self._extend(len(prefix), top)

    def _extend(self, i: int, top: int) -> Optional[list[int]]:
        G, col = self.G, self.col
        if i == G.m:
            return list(col) if self.check(col) else None
        for c in range(1, min(top + 1, self.k) + 1):
            self.nodes += 1
            if self.nodes > self.nodes_cap:
                raise SearchBudgetExceeded(f"coloring search exceeded {self.nodes_cap} nodes")
            col[i] = c
            if _relaxed_walk_ok(G.adjacency, col, G.n):
                found = self._extend(i + 1, max(top, c))
                if found is not None:
                    return found
        col[i] = 0
        return None


def canonical_prefixes(m: int, k: int, depth: int) -> list[tuple[int, ...]]:
    """Canonical color prefixes of length ``depth`` in lexicographic order."""
    out = []

    def go(prefix, top):
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        for c in range(1, min(top + 1, k) + 1):
            go(prefix + [c], max(top, c))

    go([], 0)
    return out


def _run_prefix(args):
    G, k, quantity, prefix, cfg = args
    search = _ColoringSearch(G, k, _checker(G, quantity, cfg), cfg.max_nodes)
    return search.run(prefix)


def _checker(G: Graph, quantity: str, cfg: SearchConfig):
    test = is_proper_connected if quantity == PC else is_odd_even_proper

    def check(col):
        return test(G, EdgeColoring(tuple(col), max(col, default=0)), cfg.path_budget).connected

    return check


def _walk_defects(G: Graph, col: Sequence[int], odd_even: bool) -> int:
    """Pairs (and parities) with no proper walk; zero is necessary for success."""
    bad = 0
    for s in range(G.n):
        states = _walk_bfs(G, col, s, odd_even)
        if odd_even:
            seen = {(st[0], st[2]) for st in states}
            bad += sum((v != s and (v, 0) not in seen) + ((v, 1) not in seen) for v in range(s, G.n))
        else:
            seen = {st[0] for st in states}
            bad += sum(v not in seen for v in range(s + 1, G.n))
    return bad


def _local_search(G: Graph, k: int, quantity: str, config: SearchConfig) -> Optional[list[int]]:
    """Hill climbing on walk defects; candidates with none go to the exact check.

    Seeded from the graph, so repeated calls agree.
    """
    rng = random.Random(f"{G.n}:{G.edges}:{k}:{quantity}")
    check = _checker(G, quantity, config)
    odd_even = quantity == OEPC
    col = [rng.randint(1, k) for _ in range(G.m)]
    score = _walk_defects(G, col, odd_even)
    for _ in range(config.local_search_steps):
        if score == 0:
            if check(col):
                return col
            score = 1  # walk-connected but some pair lacks a path: keep moving
        e = rng.randrange(G.m)
        old = col[e]
        col[e] = rng.choice([c for c in range(1, k + 1) if c != old])
        new = _walk_defects(G, col, odd_even)
        if new <= score:
            score = new
        else:
            col[e] = old
    return None


def find_coloring(G: Graph, k: int, quantity: str = PC, config: SearchConfig = DEFAULT_CONFIG) -> Optional[EdgeColoring]:
    """A coloring with at most ``k`` colors passing the check, or None.

    Larger graphs first get a seeded local search. Failing that, canonical
    colorings are searched in lexicographic order, so the result is the
    same for any worker count.
    """
    if G.m == 0:
        return EdgeColoring((), 0) if _checker(G, quantity, config)([]) else None
    if k >= 2 and G.m > config.local_search_min_edges and config.local_search_steps > 0:
        found = _local_search(G, k, quantity, config)
        if found is not None:
            return EdgeColoring(tuple(found), k)
    if k >= 3 and G.m > config.max_edges_wide:
        raise SearchBudgetExceeded(
            f"{G.m} edges exceed the {config.max_edges_wide}-edge limit for {k}-color search"
        )
    if config.jobs > 1 and G.m > 2:
        depth = min(G.m, 4)
        tasks = [(G, k, quantity, p, config) for p in canonical_prefixes(G.m, k, depth)]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for found in pool.map(_run_prefix, tasks):
                if found is not None:
                    return EdgeColoring(tuple(found), k)
        return None
    found = _ColoringSearch(G, k, _checker(G, quantity, config), config.max_nodes).run()
    return None if found is None else EdgeColoring(tuple(found), k)


def pc_lower_bound(G: Graph) -> int:
    if G.n <= 1:
        return 0
    return 1 if G.is_complete() else 2


def pc_exact(G: Graph, k_max: Optional[int] = None, config: SearchConfig = DEFAULT_CONFIG) -> PcCertificate:
    """Smallest palette admitting a proper-path coloring, with a certificate."""
    if not is_connected(G):
        raise InvalidParameter("pc is only defined for connected graphs")
    if G.m == 0:
        return PcCertificate(0, EdgeColoring((), 0), EXHAUSTIVE, PC)
    k_max = G.m if k_max is None else k_max
    for k in range(pc_lower_bound(G), k_max + 1):
        found = find_coloring(G, k, PC, config)
        if found is not None:
            return PcCertificate(k, found, EXHAUSTIVE, PC)
    raise SearchBudgetExceeded(f"no proper-path coloring with at most {k_max} colors")


def oepc_lower_bound(G: Graph) -> float:
    """A properly colored odd cycle needs three colors."""
    return INF if is_bipartite(G).valid else 3


def oepc_exact(G: Graph, k_max: Optional[int] = None, config: SearchConfig = DEFAULT_CONFIG) -> PcCertificate:
    """Smallest palette making every pair (u = v included) joined by proper paths of both parities.

    Bipartite graphs have no such coloring; the value is then ``INF``.
    """
    if not is_connected(G):
        raise InvalidParameter("oepc is only defined for connected graphs")
    lower = oepc_lower_bound(G)
    if lower == INF:
        return PcCertificate(INF, None, EXHAUSTIVE, OEPC)
    # every path is proper under a rainbow coloring, so if that fails
    # (some vertex on no odd cycle) no palette works
    if not is_odd_even_proper(G, EdgeColoring.rainbow(G), budget=config.path_budget):
        return PcCertificate(INF, None, EXHAUSTIVE, OEPC)
    k_max = G.m if k_max is None else k_max
    for k in range(int(lower), k_max + 1):
        found = find_coloring(G, k, OEPC, config)
        if found is not None:
            return PcCertificate(k, found, EXHAUSTIVE, OEPC)
    raise SearchBudgetExceeded(f"no odd-even proper coloring with at most {k_max} colors")


# --- odd-cycle split ----------------------------------------------------------

def _components_of(G: Graph, edge_ids: frozenset[int]) -> tuple[Component, ...]:
    if not edge_ids:
        return ()
    sub, vmap, emap = G.edge_subgraph(edge_ids)
    out = []
    for comp in connected_components(sub):
        local = set(comp)
        piece_edges = [emap[i] for i, (a, _) in enumerate(sub.edges) if a in local]
        g, vm, em = G.edge_subgraph(piece_edges)
        out.append(Component(g, tuple(vm), tuple(em)))
    out.sort(key=lambda c: c.vertices[0])
    return tuple(out)


def odd_cycle_decomposition(G: Graph) -> OddCycleDecomposition:
    """Split the edges into those on some odd cycle and the rest.

    An edge lies on an odd cycle exactly when its block is not bipartite.
    """
    odd = set()
    for block in blocks(G).blocks:
        if len(block) < 3:
            continue
        sub, _, _ = G.edge_subgraph(block)
        if not is_bipartite(sub).valid:
            odd |= block
    odd_edges = frozenset(odd)
    rest = frozenset(range(G.m)) - odd_edges
    return OddCycleDecomposition(odd_edges, rest, _components_of(G, odd_edges), _components_of(G, rest))


def edge_on_odd_cycle_oracle(G: Graph, e: int) -> bool:
    """Brute force: is there an odd simple cycle through edge ``e``?

    Enumerates simple paths between the endpoints that avoid ``e``.
    """
    if G.n > 10:
        raise InvalidParameter(f"oracle limited to 10 vertices, got {G.n}")
    u, v = G.edges[e]

    def go(x, visited, length):
        for w, f in G.adjacency[x]:
            if f == e:
                continue
            if w == v:
                if (length + 1) % 2 == 0:  # path of even length + edge e = odd cycle
                    return True
                continue
            if not visited >> w & 1 and go(w, visited | 1 << w, length + 1):
                return True
        return False

    return go(u, 1 << u, 0)


def o_value(G: Graph, config: SearchConfig = DEFAULT_CONFIG) -> int:
    return sum(int(oepc_exact(c.graph, config=config).value) for c in odd_cycle_decomposition(G).o_components)


def b_value(G: Graph, config: SearchConfig = DEFAULT_CONFIG) -> int:
    return sum(int(pc_exact(c.graph, config=config).value) for c in odd_cycle_decomposition(G).b_components)


# --- bounds ------------------------------------------------------------------

def pc_bounds(G: Graph, hints=None, config: SearchConfig = DEFAULT_CONFIG) -> tuple[int, int]:
    """``(lower, upper)`` on pc(G).

    lower: 1 for complete graphs, else 2. upper: the greedy proper edge
    coloring's palette, improved by the product constructions when ``hints``
    (a :class:`~properpath.products.ProductGraph` or its factor list and
    kind) describe how ``G`` was built.
    """
    if not is_connected(G):
        raise InvalidParameter("pc bounds need a connected graph")
    lower = pc_lower_bound(G)
    if G.m == 0:
        return 0, 0
    if lower == 1:
        return 1, 1
    upper = greedy_proper_edge_coloring(G).palette_size
    if hints is not None:
        from .constructive import product_upper_bound

        upper = min(upper, product_upper_bound(hints, config))
    return lower, max(lower, upper)


def exact_or_bound(G: Graph, config: SearchConfig = DEFAULT_CONFIG) -> tuple[int, Optional[EdgeColoring]]:
    """pc(G) with certificate when within budget, else the greedy upper bound."""
    try:
        cert = pc_exact(G, config=config)
        return int(cert.value), cert.certificate
    except SearchBudgetExceeded:
        greedy = greedy_proper_edge_coloring(G)
        return greedy.palette_size, greedy


def brute_force_pc(G: Graph, k_max: int) -> Optional[int]:
    """Unpruned enumeration of all colorings; only for tiny graphs in audits."""
    from itertools import product as cartesian

    for k in range(1, k_max + 1):
        for colors in cartesian(range(1, k + 1), repeat=G.m):
            if is_proper_connected(G, EdgeColoring(colors, k)).connected:
                return k
    return None
