import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properpath.coloring import EdgeColoring, is_odd_even_proper, is_proper_connected
from properpath.errors import InvalidParameter, SearchBudgetExceeded
from properpath.graph import (
    INF,
    Graph,
    make_complete,
    make_cycle,
    make_path,
    make_petersen,
    make_star,
)
from properpath.products import product
from properpath.solver import (
    SearchConfig,
    b_value,
    canonical_prefixes,
    edge_on_odd_cycle_oracle,
    find_coloring,
    o_value,
    odd_cycle_decomposition,
    oepc_exact,
    pc_bounds,
    pc_exact,
)

from conftest import atlas, brute_min_palette, connected_graphs, random_connected_graph

TRIANGLE_PENDANT = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def _pc_test(G, colors):
    return is_proper_connected(G, EdgeColoring.from_colors(colors)).connected


def _oepc_test(G, colors):
    return is_odd_even_proper(G, EdgeColoring.from_colors(colors)).connected


@pytest.mark.parametrize("G, value", [
    (make_complete(5), 1),
    (make_star(4), 4),
    (make_path(5), 2),
    (make_cycle(6), 2),
    (make_petersen(), 2),
    (product(make_path(2), make_complete(3), "cartesian").graph, 2),
    (Graph(1), 0),
])
def test_pc_values(G, value):
    cert = pc_exact(G)
    assert cert.value == value
    assert cert.method == "exhaustive" and cert.quantity == "pc"
    assert is_proper_connected(G, cert.certificate)


@pytest.mark.parametrize("G, value", [
    (make_complete(3), 3),
    (make_cycle(5), 3),
    (make_cycle(7), 3),
    (make_cycle(4), INF),
    (make_path(4), INF),
    (TRIANGLE_PENDANT, INF),
])
def test_oepc_values(G, value):
    cert = oepc_exact(G)
    assert cert.value == value
    if value == INF:
        assert cert.certificate is None and cert.to_json()["value"] is None
    else:
        assert is_odd_even_proper(G, cert.certificate)


def test_disconnected_rejected():
    G = Graph(4, [(0, 1), (2, 3)])
    for call in (pc_exact, oepc_exact, pc_bounds):
        with pytest.raises(InvalidParameter):
            call(G)


def test_pc_exact_respects_k_max_and_edge_limit():
    with pytest.raises(SearchBudgetExceeded):
        pc_exact(make_star(4), k_max=3)
    with pytest.raises(SearchBudgetExceeded):
        # 15 leaves need 15 colors: local search fails, the edge limit stops the rest
        find_coloring(make_star(15), 3, config=SearchConfig(max_edges_wide=14, local_search_steps=50))
    with pytest.raises(SearchBudgetExceeded):
        pc_exact(make_star(5), config=SearchConfig(max_nodes=3))


def test_local_search_certificate_is_deterministic():
    G = product(make_path(4), make_path(4), "cartesian").graph
    first = pc_exact(G)
    assert first.value == 2 and is_proper_connected(G, first.certificate)
    assert pc_exact(G) == first
    # without local search the canonical tree is far larger than this cap
    with pytest.raises(SearchBudgetExceeded):
        find_coloring(G, 2, config=SearchConfig(local_search_steps=0, max_nodes=10))


def test_canonical_prefixes():
    assert canonical_prefixes(3, 2, 3) == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]
    assert len(canonical_prefixes(4, 4, 4)) == 15  # Bell number B4


def test_pruned_search_matches_brute_force_exhaustive():
    # all connected graphs with at most 5 edges, palettes up to 3
    for G in atlas(2, 6):
        if G.m > 5:
            continue
        brute = brute_min_palette(G, _pc_test, 3)
        if brute is not None:
            assert pc_exact(G).value == brute, G.edges
        else:
            assert pc_exact(G).value > 3


def test_oepc_search_matches_brute_force():
    # a rainbow coloring is the most permissive, so palettes up to m decide INF
    for G in atlas(3, 6):
        if G.m > 5:
            continue
        brute = brute_min_palette(G, _oepc_test, G.m)
        assert oepc_exact(G).value == (INF if brute is None else brute), G.edges


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=6))
def test_pc_monotone_under_edge_addition(G):
    pc = pc_exact(G).value
    missing = [e for e in itertools.combinations(range(G.n), 2) if not G.has_edge(*e)]
    for e in missing[:3]:
        assert pc_exact(Graph(G.n, list(G.edges) + [e])).value <= pc


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_bounds_contain_exact(G):
    lo, hi = pc_bounds(G)
    assert lo <= pc_exact(G).value <= hi


def test_jobs_do_not_change_the_certificate(rng):
    cfg = SearchConfig(jobs=2)
    for _ in range(4):
        G = random_connected_graph(rng, 6, p=0.3)
        assert pc_exact(G, config=cfg) == pc_exact(G)
    assert oepc_exact(make_cycle(5), config=cfg) == oepc_exact(make_cycle(5))


def test_decomposition_examples():
    d = odd_cycle_decomposition(make_cycle(5))
    assert d.odd_edges == frozenset(range(5)) and not d.bridge_like_edges
    d = odd_cycle_decomposition(make_path(4))
    assert not d.odd_edges and len(d.b_components) == 1
    d = odd_cycle_decomposition(TRIANGLE_PENDANT)
    assert d.odd_edges == frozenset({0, 1, 2})
    assert d.bridge_like_edges == frozenset({3})
    assert [c.vertices for c in d.o_components] == [(0, 1, 2)]
    assert [c.vertices for c in d.b_components] == [(2, 3)]
    # even cycle glued to a triangle: the square stays bipartite
    G = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2)])
    d = odd_cycle_decomposition(G)
    assert len(d.o_components) == 1 and len(d.b_components) == 1
    assert d.b_components[0].graph.m == 4


def test_decomposition_matches_odd_cycle_oracle():
    for G in atlas(1, 7, connected=False):
        d = odd_cycle_decomposition(G)
        assert d.odd_edges | d.bridge_like_edges == frozenset(range(G.m))
        for e in range(G.m):
            assert (e in d.odd_edges) == edge_on_odd_cycle_oracle(G, e), (G.edges, e)
        for comp in d.o_components + d.b_components:
            assert comp.graph.m == len(comp.edges)


@pytest.mark.parametrize("G, o, b", [
    (make_cycle(5), 3, 0),
    (make_path(4), 0, 2),
    (TRIANGLE_PENDANT, 3, 1),
    (make_complete(3), 3, 0),
])
def test_o_and_b_values(G, o, b):
    assert (o_value(G), b_value(G)) == (o, b)


@pytest.mark.parametrize("G, hints, bounds", [
    (make_complete(4), None, (1, 1)),
    (make_path(5), None, (2, 2)),
    (make_star(3), None, (2, 3)),
])
def test_pc_bounds_examples(G, hints, bounds):
    assert pc_bounds(G, hints) == bounds


def test_pc_bounds_with_product_hints():
    P = product(make_path(3), make_path(3), "cartesian")
    assert pc_bounds(P.graph) == (2, 4)
    assert pc_bounds(P.graph, P) == (2, 3)
    assert pc_bounds(P.graph, ([make_path(3), make_path(3)], "cartesian")) == (2, 3)


def test_certificate_json():
    cert = pc_exact(make_path(3))
    assert cert.to_json() == {"value": 2, "method": "exhaustive", "quantity": "pc", "k": 2, "colors": [1, 2]}


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 9))
def test_cycles(n):
    assert pc_exact(make_cycle(n)).value == (1 if n == 3 else 2)
