"""Simple undirected graphs with index-addressed vertices and edges.

Vertices are ``0..n-1``. Edges keep their insertion order, and that order
is the edge index every coloring refers to.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidParameter

INF = math.inf


class Graph:
    """Immutable simple undirected graph.

    ``edges[i]`` is stored as ``(min, max)``; ``adjacency[v]`` lists
    ``(neighbor, edge_index)`` pairs in edge order.
    """

    __slots__ = ("n", "edges", "adjacency", "_edge_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidParameter(f"vertex count must be nonnegative, got {n}")
        normalized = []
        index = {}
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise InvalidParameter(f"duplicate edge {key}")
            index[key] = len(normalized)
            adjacency[u].append((v, len(normalized)))
            adjacency[v].append((u, len(normalized)))
            normalized.append(key)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(normalized)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(tuple(a) for a in adjacency)
        self._edge_index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``uv``; ``KeyError`` if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def edge_subgraph(self, edge_ids: Iterable[int]) -> tuple["Graph", list[int], list[int]]:
        """Subgraph spanned by ``edge_ids``, relabelled densely.

        Returns ``(graph, vertex_map, edge_map)`` where ``vertex_map[i]`` and
        ``edge_map[j]`` give the original vertex / edge for local ones.
        Local edge order follows the original edge order.
        """
        edge_map = sorted(set(edge_ids))
        vertex_map = sorted({x for e in edge_map for x in self.edges[e]})
        local = {v: i for i, v in enumerate(vertex_map)}
        sub = Graph(len(vertex_map), [(local[self.edges[e][0]], local[self.edges[e][1]]) for e in edge_map])
        return sub, vertex_map, edge_map


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]
    valid: bool

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    bridge: tuple[bool, ...] = field(default=())

    def block_of_edge(self) -> dict[int, int]:
        return {e: i for i, block in enumerate(self.blocks) for e in block}


# --- generators -----------------------------------------------------------

def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, combinations(range(n), 2))


def make_star(m: int) -> Graph:
    """K_{1,m}: center 0, leaves 1..m."""
    if m < 1:
        raise InvalidParameter(f"star needs at least 1 leaf, got {m}")
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def make_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def make_hypercube(d: int) -> Graph:
    if d < 0:
        raise InvalidParameter(f"hypercube dimension must be nonnegative, got {d}")
    n = 1 << d
    return Graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


# --- traversal ------------------------------------------------------------

def bfs_distances(G: Graph, source: int) -> list[float]:
    dist = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, _ in G.adjacency[v]:
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance(G: Graph, u: int, v: int) -> float:
    """Shortest-path length, or ``INF`` when ``v`` is unreachable."""
    return bfs_distances(G, u)[v]


def diameter(G: Graph) -> float:
    if G.n == 0:
        return 0
    return max(max(bfs_distances(G, s)) for s in range(G.n))


def connected_components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    components = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w, _ in G.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        components.append(sorted(comp))
    return components


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


def is_bipartite(G: Graph) -> Bipartition:
    """2-coloring of the vertices when one exists.

    On failure ``side`` still holds the partial BFS labelling, ``valid`` is False.
    """
    side = [-1] * G.n
    valid = True
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in G.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    valid = False
    return Bipartition(tuple(side), valid)


def parity_distance_table(G: Graph, u: int) -> tuple[list[float], list[float]]:
    """Shortest even and odd walk lengths from ``u`` to every vertex."""
    dist = [[INF] * G.n, [INF] * G.n]
    dist[0][u] = 0
    queue = deque([(u, 0)])
    while queue:
        v, p = queue.popleft()
        d = dist[p][v] + 1
        q = 1 - p
        for w, _ in G.adjacency[v]:
            if dist[q][w] == INF:
                dist[q][w] = d
                queue.append((w, q))
    return dist[0], dist[1]


def parity_distances(G: Graph, u: int, v: int) -> tuple[float, float]:
    """``(d_even, d_odd)``: shortest even / odd u-v walk lengths, ``INF`` if none.

    For ``u == v`` the even value is 0 (empty walk) and the odd value is the
    shortest odd closed walk through ``u``.
    """
    even, odd = parity_distance_table(G, u)
    return even[v], odd[v]


def blocks(G: Graph) -> BlockDecomposition:
    """Biconnected components as a partition of the edge set.

    Iterative Hopcroft-Tarjan low-point search with an edge stack.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    found: list[frozenset[int]] = []
    edge_stack: list[int] = []
    timer = 0
    for root in range(G.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frame: (vertex, parent edge, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            adj = G.adjacency[v]
            if i < len(adj):
                stack[-1] = (v, pe, i + 1)
                w, e = adj[i]
                if e == pe:
                    continue
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if not stack:
                break
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == pe:
                        break
                found.append(frozenset(comp))
    found.sort(key=min)
    return BlockDecomposition(tuple(found), tuple(len(b) == 1 for b in found))
