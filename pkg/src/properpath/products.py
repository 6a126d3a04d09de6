"""The four standard graph products and the network presets built from them.

Product vertex ``(g, h)`` has index ``g * n_h + h``. Edges are emitted
g-major (by the smaller endpoint's ``g``, then ``h``), so edge indices and
therefore serialized colorings are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from typing import Sequence

from .errors import InvalidParameter
from .graph import (
    INF,
    Graph,
    bfs_distances,
    is_bipartite,
    is_connected,
    make_complete,
    make_cycle,
    make_hypercube,
    make_path,
    make_petersen,
    parity_distance_table,
)


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    STRONG = "strong"
    LEXICOGRAPHIC = "lex"
    DIRECT = "direct"

    @classmethod
    def parse(cls, name: "str | ProductKind") -> "ProductKind":
        if isinstance(name, ProductKind):
            return name
        aliases = {"lexicographic": "lex", "tensor": "direct", "box": "cartesian"}
        try:
            return cls(aliases.get(name, name))
        except ValueError:
            raise InvalidParameter(f"unknown product kind {name!r}") from None


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    kind: ProductKind
    n_g: int
    n_h: int
    # the factors themselves; for presets, the full left-associated factor list
    factors: tuple[Graph, ...] = field(default=(), compare=False)

    def index_of(self, g: int, h: int) -> int:
        return g * self.n_h + h

    def pair_of(self, index: int) -> tuple[int, int]:
        return divmod(index, self.n_h)

    def metadata(self) -> dict:
        return {"kind": self.kind.value, "n_g": self.n_g, "n_h": self.n_h}


def _adjacent_pairs(G: Graph) -> set[tuple[int, int]]:
    return {(u, v) for u, v in G.edges} | {(v, u) for u, v in G.edges}


def product(G: Graph, H: Graph, kind: "ProductKind | str") -> ProductGraph:
    kind = ProductKind.parse(kind)
    if G.n == 0 or H.n == 0:
        raise InvalidParameter("product factors must be nonempty")
    ng, nh = G.n, H.n
    adj_g = [set(G.neighbors(v)) for v in range(ng)]
    adj_h = [set(H.neighbors(v)) for v in range(nh)]

    def adjacent(g, h, g2, h2):
        same_g, same_h = g == g2, h == h2
        in_g, in_h = g2 in adj_g[g], h2 in adj_h[h]
        if kind is ProductKind.CARTESIAN:
            return (same_g and in_h) or (same_h and in_g)
        if kind is ProductKind.STRONG:
            return (same_g and in_h) or (same_h and in_g) or (in_g and in_h)
        if kind is ProductKind.LEXICOGRAPHIC:
            return in_g or (same_g and in_h)
        return in_g and in_h

    edges = []
    for g in range(ng):
        for h in range(nh):
            a = g * nh + h
            # candidates: g' in {g} + N(g), h' in {h} + N(h) except for lex cross edges
            for g2 in sorted({g} | adj_g[g]):
                if g2 < g:
                    continue
                h_range = range(nh) if kind is ProductKind.LEXICOGRAPHIC and g2 != g else sorted({h} | adj_h[h])
                for h2 in h_range:
                    b = g2 * nh + h2
                    if b > a and adjacent(g, h, g2, h2):
                        edges.append((a, b))
    return ProductGraph(Graph(ng * nh, edges), kind, ng, nh, (G, H))


def expected_edge_count(kind: "ProductKind | str", G: Graph, H: Graph) -> int:
    kind = ProductKind.parse(kind)
    mg, mh, ng, nh = G.m, H.m, G.n, H.n
    if kind is ProductKind.CARTESIAN:
        return mg * nh + ng * mh
    if kind is ProductKind.STRONG:
        return mg * nh + ng * mh + 2 * mg * mh
    if kind is ProductKind.LEXICOGRAPHIC:
        return mg * nh * nh + ng * mh
    return 2 * mg * mh


def predicted_distance(kind, G: Graph, H: Graph, a: tuple[int, int], b: tuple[int, int]) -> float:
    """Product distance between ``a = (g, h)`` and ``b = (g', h')`` from factor data alone."""
    kind = ProductKind.parse(kind)
    (g, h), (g2, h2) = a, b
    if kind is ProductKind.DIRECT:
        # the shorter factor walk is padded by back-and-forth steps, which
        # needs an edge; an isolated coordinate isolates the product vertex
        if G.degree(g) == 0 or H.degree(h) == 0:
            return 0 if a == b else INF
        ge, go = parity_distance_table(G, g)
        he, ho = parity_distance_table(H, h)
        return min(max(ge[g2], he[h2]), max(go[g2], ho[h2]))
    dg = bfs_distances(G, g)[g2]
    dh = bfs_distances(H, h)[h2]
    if kind is ProductKind.CARTESIAN:
        return dg + dh
    if kind is ProductKind.STRONG:
        return max(dg, dh)
    if g != g2:
        return dg
    if G.degree(g) == 0:
        return dh
    return min(dh, 2)


def direct_is_connected(G: Graph, H: Graph) -> bool:
    if G.n == 0 or H.n == 0:
        return False
    if not (is_connected(G) and is_connected(H)):
        return False
    # a single vertex has no edges, so the product has no edges either
    if G.n * H.n == 1:
        return True
    if G.n == 1 or H.n == 1:
        return False
    return not (is_bipartite(G).valid and is_bipartite(H).valid)


def bipartite_double_cover_split(B: Graph) -> tuple[list[int], list[int]]:
    """Vertex sets of the two components of ``B x K2`` for bipartite ``B``.

    With parts X (side 0) and Y (side 1) the first set is
    ``{(x,0)} | {(y,1)}`` and the second ``{(x,1)} | {(y,0)}``, as product
    indices ``2*b + k``. Dropping the K2 coordinate maps each onto ``B``.
    """
    part = is_bipartite(B)
    if not part.valid:
        raise InvalidParameter("double cover split needs a bipartite graph")
    if not is_connected(B):
        raise InvalidParameter("double cover split needs a connected graph")
    first = sorted(2 * b + part.side[b] for b in range(B.n))
    second = sorted(2 * b + 1 - part.side[b] for b in range(B.n))
    return first, second


# --- network presets --------------------------------------------------------

TOPOLOGY_ALIASES = {"hp": "hyper-petersen", "hl": "lex-hyper-petersen"}
TOPOLOGIES = (
    "grid", "mesh", "lex-mesh", "torus", "lex-torus",
    "ghc", "lex-ghc", "hyper-petersen", "lex-hyper-petersen",
)


def topology_factors(name: str, params: Sequence[int]) -> tuple[list[Graph], ProductKind]:
    name = TOPOLOGY_ALIASES.get(name, name)
    params = [int(p) for p in params]
    if name not in TOPOLOGIES:
        raise InvalidParameter(f"unknown topology {name!r}; expected one of {', '.join(TOPOLOGIES)}")
    kind = ProductKind.LEXICOGRAPHIC if name.startswith("lex-") else ProductKind.CARTESIAN
    family = name.removeprefix("lex-")
    if family in ("grid", "mesh"):
        if family == "grid" and len(params) != 2:
            raise InvalidParameter(f"grid takes exactly two path lengths, got {params}")
        if not params or any(p < 2 for p in params):
            raise InvalidParameter(f"{name}: every linear array needs length >= 2, got {params}")
        return [make_path(p) for p in params], kind
    if family == "torus":
        if not params or any(p < 3 for p in params):
            raise InvalidParameter(f"{name}: every ring needs size >= 3, got {params}")
        return [make_cycle(p) for p in params], kind
    if family == "ghc":
        if not params or any(p < 2 for p in params):
            raise InvalidParameter(f"{name}: every clique needs size >= 2, got {params}")
        return [make_complete(p) for p in params], kind
    if len(params) != 1 or params[0] < 3:
        raise InvalidParameter(f"{name}: takes one dimension n >= 3, got {params}")
    return [make_hypercube(params[0] - 3), make_petersen()], kind


def iterated_product(factors: Sequence[Graph], kind) -> ProductGraph:
    """Left-associated product ``((F1 * F2) * F3) ...``."""
    kind = ProductKind.parse(kind)
    if not factors:
        raise InvalidParameter("need at least one factor")
    if len(factors) == 1:
        F = factors[0]
        return ProductGraph(F, kind, F.n, 1, (F,))
    last = reduce(lambda acc, F: product(acc, F, kind).graph, factors[1:-1], factors[0])
    result = product(last, factors[-1], kind)
    return ProductGraph(result.graph, kind, result.n_g, result.n_h, tuple(factors))


def build_topology(name: str, params: Sequence[int]) -> ProductGraph:
    factors, kind = topology_factors(name, params)
    return iterated_product(factors, kind)


__all__ = [
    "INF", "ProductKind", "ProductGraph", "product", "expected_edge_count",
    "predicted_distance", "direct_is_connected", "bipartite_double_cover_split",
    "build_topology", "topology_factors", "iterated_product", "TOPOLOGIES",
]
