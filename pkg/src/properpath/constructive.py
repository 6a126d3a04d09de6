"""Explicit proper-path colorings of product graphs.

Each builder returns the coloring together with the palette size its
construction guarantees. Palettes are 1..k throughout; where a construction
needs one extra color it is ``k + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .coloring import EdgeColoring, greedy_proper_edge_coloring, is_proper_connected
from .errors import InvalidParameter, SearchBudgetExceeded
from .graph import INF, Graph, is_bipartite, is_connected, make_complete
from .products import (
    ProductGraph,
    ProductKind,
    bipartite_double_cover_split,
    iterated_product,
    product,
    topology_factors,
)
from .solver import (
    DEFAULT_CONFIG,
    SearchConfig,
    odd_cycle_decomposition,
    oepc_exact,
    pc_exact,
)


@dataclass(frozen=True)
class ConstructionResult:
    product: ProductGraph
    coloring: EdgeColoring
    claimed_palette: int
    scheme: str
    case_tag: str

    def to_json(self) -> dict:
        return {
            "k": self.coloring.palette_size,
            "colors": list(self.coloring.colors),
            "scheme": self.scheme,
            "case": self.case_tag,
            "claimed_palette": self.claimed_palette,
        }


def _require_factor(F: Graph, name: str) -> None:
    if F.n < 2:
        raise InvalidParameter(f"factor {name} needs at least 2 vertices, got {F.n}")
    if not is_connected(F):
        raise InvalidParameter(f"factor {name} must be connected")


def _require_verified(F: Graph, c: EdgeColoring, name: str) -> None:
    c.validate(F)
    if not is_proper_connected(F, c).connected:
        raise InvalidParameter(f"coloring of factor {name} is not a proper-path coloring")


def _finish(P: ProductGraph, colors: list[int], claimed: int, scheme: str, case: str) -> ConstructionResult:
    return ConstructionResult(P, EdgeColoring.from_colors(colors, max(max(colors, default=0), 1 if colors else 0)),
                              claimed, scheme, case)


def _layer_colors(P: ProductGraph, G: Graph, H: Graph, c_G: Optional[EdgeColoring],
                  c_H: Optional[EdgeColoring], other: int) -> list[int]:
    """Colors for the Cartesian layer structure of ``P``.

    Fibers of the factor whose coloring is given copy it; fibers of the
    other factor get one fresh color; edges moving in both coordinates get
    ``other``.
    """
    copy_h = c_H is not None
    fresh = (c_H if copy_h else c_G).palette_size + 1
    colors = []
    for a, b in P.graph.edges:
        g, h = P.pair_of(a)
        g2, h2 = P.pair_of(b)
        if g == g2:
            colors.append(c_H[H.edge_index(h, h2)] if copy_h else fresh)
        elif h == h2:
            colors.append(fresh if copy_h else c_G[G.edge_index(g, g2)])
        else:
            colors.append(other)
    return colors


def _orient(G, H, c_G, c_H, check_input):
    if (c_G is None) == (c_H is None):
        raise InvalidParameter("pass exactly one of c_H and c_G")
    _require_factor(G, "G")
    _require_factor(H, "H")
    if check_input:
        if c_H is not None:
            _require_verified(H, c_H, "H")
        else:
            _require_verified(G, c_G, "G")


def color_cartesian(G: Graph, H: Graph, c_H: Optional[EdgeColoring] = None, *,
                    c_G: Optional[EdgeColoring] = None, check_input: bool = True) -> ConstructionResult:
    """Copy a proper-path coloring of one factor on its fibers, one fresh color elsewhere.

    Pass the coloring of the factor with the smaller pc; ``c_G`` copies
    along G-fibers instead of H-fibers.
    """
    _orient(G, H, c_G, c_H, check_input)
    P = product(G, H, ProductKind.CARTESIAN)
    k = (c_H if c_H is not None else c_G).palette_size
    return _finish(P, _layer_colors(P, G, H, c_G, c_H, other=1), k + 1, "cartesian",
                   "copy-H" if c_H is not None else "copy-G")


def color_strong(G: Graph, H: Graph, c_H: Optional[EdgeColoring] = None, *,
                 c_G: Optional[EdgeColoring] = None, check_input: bool = True) -> ConstructionResult:
    """Cartesian construction on the spanning Cartesian subgraph; diagonals get color 1."""
    _orient(G, H, c_G, c_H, check_input)
    P = product(G, H, ProductKind.STRONG)
    k = (c_H if c_H is not None else c_G).palette_size
    return _finish(P, _layer_colors(P, G, H, c_G, c_H, other=1), k + 1, "strong",
                   "copy-H" if c_H is not None else "copy-G")


def color_lexicographic(G: Graph, H: Graph, c_G: EdgeColoring, c_H: EdgeColoring,
                        pc_G: Optional[int] = None, pc_H: Optional[int] = None,
                        check_input: bool = True) -> ConstructionResult:
    """Case-dispatched coloring of ``G o H``.

    ``pc_G``/``pc_H`` default to the palette sizes of the given colorings,
    which should be optimal for the claimed palette to match pc bounds.
    """
    _require_factor(G, "G")
    _require_factor(H, "H")
    if check_input:
        _require_verified(G, c_G, "G")
        _require_verified(H, c_H, "H")
    pc_G = c_G.palette_size if pc_G is None else pc_G
    pc_H = c_H.palette_size if pc_H is None else pc_H
    if c_G.palette_size > pc_G or c_H.palette_size > pc_H:
        raise InvalidParameter("supplied pc value is smaller than the coloring's palette")
    P = product(G, H, ProductKind.LEXICOGRAPHIC)

    if pc_G == 1 and pc_H == 1:
        if not (G.is_complete() and H.is_complete()):
            raise InvalidParameter("case both-complete: pc 1 requires complete factors")
        return _finish(P, [1] * P.graph.m, 1, "lex", "both-complete")

    if pc_G < pc_H:
        # includes pc(G) = 1: Cartesian spanning subgraph, G-fibers keep c_G
        case = "G-complete" if pc_G == 1 else "pcG<pcH"
        colors = _layer_colors(P, G, H, c_G, None, other=1)
        return _finish(P, colors, pc_G + 1, "lex", case)

    if pc_G > pc_H:
        # H-fibers keep c_H, every edge between fibers gets color 1; needs an
        # H-edge colored differently from 1, so swap colors 1 and 2 if there is none
        h_colors = list(c_H.colors)
        swapped = all(c == 1 for c in h_colors)
        if swapped:
            h_colors = [2 if c == 1 else 1 if c == 2 else c for c in h_colors]
        case = "H-complete" if pc_H == 1 else "pcG>pcH"
        colors = []
        for a, b in P.graph.edges:
            g, h = P.pair_of(a)
            g2, h2 = P.pair_of(b)
            colors.append(h_colors[H.edge_index(h, h2)] if g == g2 else 1)
        return _finish(P, colors, max(pc_H, 2), "lex", case + ("+swap" if swapped else ""))

    # equal pc: every edge projecting onto a G-edge copies c_G
    colors = []
    for a, b in P.graph.edges:
        g, h = P.pair_of(a)
        g2, h2 = P.pair_of(b)
        colors.append(c_H[H.edge_index(h, h2)] if g == g2 else c_G[G.edge_index(g, g2)])
    return _finish(P, colors, pc_G, "lex", "pcG=pcH")


# --- direct products ---------------------------------------------------------

@dataclass(frozen=True)
class DecompositionColoring:
    """Optimal colorings of the odd-cycle pieces of G, merged with disjoint palettes.

    ``colors`` is indexed by G's edges; O-pieces come first, then B-pieces.
    """

    colors: tuple[int, ...]
    o: int
    b: int
    b_pieces: tuple = ()  # (component, offset, coloring) per bipartite piece

    @property
    def palette(self) -> int:
        return self.o + self.b


def decomposition_coloring(G: Graph, config: SearchConfig = DEFAULT_CONFIG) -> DecompositionColoring:
    decomp = odd_cycle_decomposition(G)
    colors = [0] * G.m
    offset = 0
    for comp in decomp.o_components:
        cert = oepc_exact(comp.graph, config=config)
        for local, e in enumerate(comp.edges):
            colors[e] = cert.certificate[local] + offset
        offset += int(cert.value)
    o = offset
    pieces = []
    for comp in decomp.b_components:
        cert = pc_exact(comp.graph, config=config)
        pieces.append((comp, offset, cert.certificate))
        for local, e in enumerate(comp.edges):
            colors[e] = cert.certificate[local] + offset
        offset += int(cert.value)
    return DecompositionColoring(tuple(colors), o, offset - o, tuple(pieces))


def _require_nonbipartite(G: Graph) -> None:
    if not is_connected(G):
        raise InvalidParameter("factor G must be connected")
    if is_bipartite(G).valid:
        raise InvalidParameter("factor G must be nonbipartite; swap the factors or use a nonbipartite G")


def color_direct(G: Graph, H: Graph, c_H: EdgeColoring, parts: Optional[DecompositionColoring] = None,
                 check_input: bool = True, config: SearchConfig = DEFAULT_CONFIG) -> ConstructionResult:
    """Color each product edge by the pair (piece color of its G-projection, c_H of its H-projection)."""
    _require_nonbipartite(G)
    _require_factor(H, "H")
    if check_input:
        _require_verified(H, c_H, "H")
    parts = decomposition_coloring(G, config) if parts is None else parts
    k_h = c_H.palette_size
    P = product(G, H, ProductKind.DIRECT)
    colors = []
    for a, b in P.graph.edges:
        g, h = P.pair_of(a)
        g2, h2 = P.pair_of(b)
        colors.append((parts.colors[G.edge_index(g, g2)] - 1) * k_h + c_H[H.edge_index(h, h2)])
    return _finish(P, colors, k_h * parts.palette, "direct", f"o={parts.o},b={parts.b}")


def color_direct_k2(G: Graph, parts: Optional[DecompositionColoring] = None,
                    config: SearchConfig = DEFAULT_CONFIG) -> ConstructionResult:
    """Coloring of ``G x K2`` with o(G) + b(G) colors.

    Each bipartite piece lifts to two isomorphic copies in the double cover;
    both copies reuse the piece's optimal coloring. Edges over odd pieces
    take the piece's odd-even coloring.
    """
    _require_nonbipartite(G)
    parts = decomposition_coloring(G, config) if parts is None else parts
    K2 = make_complete(2)
    P = product(G, K2, ProductKind.DIRECT)
    colors = [0] * P.graph.m
    for comp, offset, cert in parts.b_pieces:
        halves = bipartite_double_cover_split(comp.graph)
        for half in halves:
            # local cover vertex 2*b + k  ->  global product vertex 2*vertices[b] + k
            for x in half:
                b, k = divmod(x, 2)
                for y_local, e_local in comp.graph.adjacency[b]:
                    a_glob = 2 * comp.vertices[b] + k
                    b_glob = 2 * comp.vertices[y_local] + (1 - k)
                    colors[P.graph.edge_index(a_glob, b_glob)] = cert[e_local] + offset
    for i, (a, b) in enumerate(P.graph.edges):
        if colors[i] == 0:
            g, g2 = a // 2, b // 2
            colors[i] = parts.colors[G.edge_index(g, g2)]
    return _finish(P, colors, parts.palette, "direct-k2", f"o={parts.o},b={parts.b}")


# --- iterated products and bound hints ---------------------------------------

def _factor_coloring(F: Graph, config: SearchConfig) -> tuple[int, EdgeColoring, bool]:
    """(palette, proper-path coloring, palette is exactly pc?) for one factor."""
    if F.is_complete():
        return (1 if F.m else 0), EdgeColoring.monochrome(F), True
    try:
        cert = pc_exact(F, config=config)
        return int(cert.value), cert.certificate, True
    except SearchBudgetExceeded:
        greedy = greedy_proper_edge_coloring(F)
        return greedy.palette_size, greedy, False


def _remap(source: Graph, target: Graph, c: EdgeColoring) -> EdgeColoring:
    """Carry a coloring across graphs with the same vertex labels and edge set."""
    return EdgeColoring(tuple(c[source.edge_index(u, v)] for u, v in target.edges), c.palette_size)


def color_iterated(factors: Sequence[Graph], kind, config: SearchConfig = DEFAULT_CONFIG) -> ConstructionResult:
    """Construct a coloring of the left-associated product of ``factors``.

    Order-1 factors are identities for these products (vertex labels are
    unchanged) and are skipped. At every step the side with the smaller
    palette donates its coloring.
    """
    kind = ProductKind.parse(kind)
    if kind is ProductKind.DIRECT:
        raise InvalidParameter("iterated construction covers cartesian, strong and lex products")
    real = [F for F in factors if F.n > 1]
    if not real:
        raise InvalidParameter("need a factor with at least 2 vertices")
    pal, col, _ = _factor_coloring(real[0], config)
    G = real[0]
    scheme, case = kind.value, "single-factor"
    for F in real[1:]:
        f_pal, f_col, _ = _factor_coloring(F, config)
        if kind is ProductKind.LEXICOGRAPHIC:
            step = color_lexicographic(G, F, col, f_col, check_input=False)
        else:
            builder = color_cartesian if kind is ProductKind.CARTESIAN else color_strong
            if f_pal <= pal:
                step = builder(G, F, f_col, check_input=False)
            else:
                step = builder(G, F, c_G=col, check_input=False)
        G, col, pal, case = step.product.graph, step.coloring, step.claimed_palette, step.case_tag
    final = iterated_product(list(factors), kind)
    return ConstructionResult(final, _remap(G, final.graph, col), pal, scheme, case)


def color_topology(name: str, params: Sequence[int], config: SearchConfig = DEFAULT_CONFIG) -> ConstructionResult:
    factors, kind = topology_factors(name, params)
    return color_iterated(factors, kind, config)


def _hint_parts(hints):
    if isinstance(hints, ProductGraph):
        return list(hints.factors), hints.kind
    if isinstance(hints, dict):
        return list(hints["factors"]), ProductKind.parse(hints["kind"])
    factors, kind = hints
    return list(factors), ProductKind.parse(kind)


def product_upper_bound(hints, config: SearchConfig = DEFAULT_CONFIG) -> float:
    """Upper bound on pc of a product, from its factors alone.

    Factor values are exact pc when the solver finishes, else greedy
    palettes. Cartesian / strong steps: smaller side + 1. Lexicographic
    steps: case-wise bound when both sides are exact, otherwise the larger
    side. Direct (two factors): pc(H) * (o(G) + b(G)) over valid orientations.
    """
    factors, kind = _hint_parts(hints)
    if kind is ProductKind.DIRECT:
        return _direct_bound(factors, config)
    real = [F for F in factors if F.n > 1]
    if not real:
        return 0
    value, _, exact = _factor_coloring(real[0], config)
    complete = real[0].is_complete()
    for F in real[1:]:
        f_val, _, f_exact = _factor_coloring(F, config)
        f_complete = F.is_complete()
        if kind is not ProductKind.LEXICOGRAPHIC:
            value, exact, complete = min(value, f_val) + 1, False, False
        elif complete and f_complete:
            value, exact = 1, True
        elif complete or f_complete:
            value, exact, complete = 2, True, False
        elif exact and f_exact:
            if value > f_val:
                value = f_val
            elif value < f_val:
                value = value + 1
            exact = False
        else:
            value, exact = max(value, f_val), False
    return value


def _direct_bound(factors, config) -> float:
    if len(factors) != 2:
        return INF
    best = INF
    for G, H in (factors, factors[::-1]):
        if G.n < 2 or H.n < 2 or not is_connected(G) or not is_connected(H) or is_bipartite(G).valid:
            continue
        try:
            parts = decomposition_coloring(G, config)
            pc_h = _factor_coloring(H, config)[0]
        except SearchBudgetExceeded:
            continue
        best = min(best, pc_h * parts.palette)
    return best
