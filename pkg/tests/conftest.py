import itertools
import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from properpath.graph import Graph


# --- independent oracles -----------------------------------------------------

def simple_paths(G: Graph, u: int, v: int):
    """Every simple u-v path as a list of edge indices (plain DFS, no pruning)."""
    out = []

    def go(x, visited, edges):
        if x == v:
            out.append(list(edges))
            return
        for w, e in G.adjacency[x]:
            if w not in visited:
                go(w, visited | {w}, edges + [e])

    go(u, {u}, [])
    return out


def is_proper_sequence(colors, edge_seq, closed=False):
    pairs = list(zip(edge_seq, edge_seq[1:]))
    if closed and len(edge_seq) > 1:
        pairs.append((edge_seq[-1], edge_seq[0]))
    return all(colors[a] != colors[b] for a, b in pairs)


def brute_proper_path(G, colors, u, v):
    if u == v:
        return True
    return any(is_proper_sequence(colors, p) for p in simple_paths(G, u, v))


def brute_cycles_through(G: Graph, u: int):
    """Simple cycles through u as edge-index lists (each direction listed)."""
    out = []

    def go(x, visited, edges):
        for w, e in G.adjacency[x]:
            if w == u and len(edges) >= 2 and e != edges[0]:
                out.append(edges + [e])
            elif w not in visited:
                go(w, visited | {w}, edges + [e])

    go(u, {u}, [])
    return out


def brute_odd_even(G: Graph, colors) -> bool:
    for u in range(G.n):
        if not any(len(c) % 2 == 1 and is_proper_sequence(colors, c, closed=True) for c in brute_cycles_through(G, u)):
            return False
        for v in range(u + 1, G.n):
            lengths = {len(p) % 2 for p in simple_paths(G, u, v) if is_proper_sequence(colors, p)}
            if lengths != {0, 1}:
                return False
    return True


def brute_min_palette(G: Graph, test, k_max: int):
    """Smallest k such that some coloring from {1..k}^m passes ``test`` (unpruned)."""
    for k in range(1, k_max + 1):
        for colors in itertools.product(range(1, k + 1), repeat=G.m):
            if test(G, colors):
                return k
    return None


def from_nx(g) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
    return Graph(len(mapping), [(mapping[a], mapping[b]) for a, b in g.edges()])


def to_nx(G: Graph):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


def atlas(min_n=1, max_n=7, connected=True):
    """Isomorph-free graphs from the networkx atlas (up to 7 vertices)."""
    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if min_n <= n <= max_n and (not connected or (n > 0 and nx.is_connected(g))):
            out.append(from_nx(g))
    return out


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    # random spanning tree plus extra edges
    edges = {tuple(sorted((v, rng.randrange(v)))) for v in range(1, n)}
    edges |= {e for e in itertools.combinations(range(n), 2) if rng.random() < p}
    return Graph(n, sorted(edges))


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    tree = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {tuple(sorted(e)) for e in tree} | {e for e, keep in zip(pairs, mask) if keep}
    return Graph(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20240611)


# --- acceptance summary -------------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::", 1)[1], report.outcome))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::", 1)[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        flag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{flag}  {name}")
