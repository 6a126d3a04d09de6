"""Edge colorings and exact proper-path connectivity checks.

A path is proper when consecutive edges differ in color. Paths (not walks)
are what every check here decides. The walk search over
``(vertex, last color)`` states is only used as a filter: no proper walk
means no proper path, and a shortest proper walk that happens to repeat no
vertex is already a proper path. Anything the filter cannot settle goes to
bounded depth-first backtracking.
"""
from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidParameter, SearchBudgetExceeded
from .graph import Graph

DEFAULT_BUDGET = 10_000_000
EVEN, ODD = "even", "odd"


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    palette_size: int

    @classmethod
    def from_colors(cls, colors: Iterable[int], palette_size: Optional[int] = None) -> "EdgeColoring":
        colors = tuple(int(c) for c in colors)
        k = max(colors, default=0) if palette_size is None else palette_size
        coloring = cls(colors, k)
        coloring._check_palette()
        return coloring

    @classmethod
    def monochrome(cls, G: Graph) -> "EdgeColoring":
        return cls.from_colors([1] * G.m)

    @classmethod
    def rainbow(cls, G: Graph) -> "EdgeColoring":
        return cls.from_colors(range(1, G.m + 1))

    def _check_palette(self) -> None:
        if self.colors and self.palette_size < 1:
            raise InvalidParameter("palette size must be >= 1 when edges exist")
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.palette_size:
                raise InvalidParameter(f"edge {i} has color {c} outside 1..{self.palette_size}")

    def validate(self, G: Graph) -> None:
        if len(self.colors) != G.m:
            raise InvalidParameter(f"coloring has {len(self.colors)} entries but graph has {G.m} edges")
        self._check_palette()

    def used_colors(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, e: int) -> int:
        return self.colors[e]


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    failing_pair: Optional[tuple[int, int]]
    pairs_checked: int

    def __bool__(self) -> bool:
        return self.connected


# --- walk machinery -------------------------------------------------------

def _walk_bfs(G: Graph, col: Sequence[int], source: int, track_parity: bool):
    """BFS over proper-walk states from ``source``.

    States are ``(vertex, last color[, parity])`` with last color 0 at the
    start. Returns the parent map (state -> (previous state, vertex)).
    """
    start = (source, 0, 0) if track_parity else (source, 0)
    parent = {start: None}
    queue = deque([start])
    adj = G.adjacency
    while queue:
        state = queue.popleft()
        v, last = state[0], state[1]
        for w, e in adj[v]:
            c = col[e]
            if c == last:
                continue
            nxt = (w, c, 1 - state[2]) if track_parity else (w, c)
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    return parent


def _trace(parent, state) -> list[int]:
    walk = []
    while state is not None:
        walk.append(state[0])
        state = parent[state]
    walk.reverse()
    return walk


def proper_walk_exists(G: Graph, c: EdgeColoring, u: int, v: int, parity: Optional[str] = None) -> bool:
    """Is there a u-v walk whose consecutive edges differ in color?

    ``parity`` restricts the walk length to even or odd; the empty walk
    counts as an even u-u walk.
    """
    if parity not in (None, EVEN, ODD):
        raise InvalidParameter(f"parity must be 'even', 'odd' or None, got {parity!r}")
    if u == v and parity in (None, EVEN):
        return True
    parent = _walk_bfs(G, c.colors, u, track_parity=parity is not None)
    if parity is None:
        return any(s[0] == v for s in parent)
    want = 0 if parity == EVEN else 1
    return any(s[0] == v and s[2] == want for s in parent)


# --- exact path search ----------------------------------------------------

class _Search:
    """Depth-first proper-path enumeration from one source with a node cap."""

    def __init__(self, G: Graph, col: Sequence[int], source: int, budget: int):
        self.adj = G.adjacency
        self.col = col
        self.source = source
        self.budget = budget
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(
                f"proper-path search from vertex {self.source} exceeded {self.budget} nodes"
            )

    def reach(self, targets: int) -> int:
        """Bitmask of vertices in ``targets`` joined to the source by a proper path."""
        adj, col = self.adj, self.col
        reached = 0

        def go(v, last, visited):
            nonlocal reached
            self._tick()
            for w, e in adj[v]:
                if visited >> w & 1:
                    continue
                c = col[e]
                if c == last:
                    continue
                reached |= 1 << w
                if reached & targets == targets:
                    return True
                if go(w, c, visited | 1 << w):
                    return True
            return False

        if targets:
            go(self.source, 0, 1 << self.source)
        return reached & targets

    def reach_parity(self, even_targets: int, odd_targets: int, need_cycle: bool):
        """Like :meth:`reach` but split by path length parity.

        ``need_cycle`` asks for a properly colored odd cycle through the
        source; closing edge and first edge must differ too.
        Returns ``(even_mask, odd_mask, cycle_found)``.
        """
        adj, col, s = self.adj, self.col, self.source
        reached = [0, 0]
        targets = (even_targets, odd_targets)
        cycle = not need_cycle

        def done():
            return cycle and reached[0] & targets[0] == targets[0] and reached[1] & targets[1] == targets[1]

        def go(v, last, visited, parity, first):
            nonlocal cycle
            self._tick()
            for w, e in adj[v]:
                c = col[e]
                if c == last:
                    continue
                if w == s:
                    # closing a cycle of length parity-of-(L+1): odd when L is even, L >= 2
                    if not cycle and parity == 0 and last != 0 and c != first:
                        cycle = True
                        if done():
                            return True
                    continue
                if visited >> w & 1:
                    continue
                p = 1 - parity
                reached[p] |= 1 << w
                if done():
                    return True
                if go(w, c, visited | 1 << w, p, first or c):
                    return True
            return False

        if not done():
            go(s, 0, 1 << s, 0, 0)
        return reached[0] & even_targets, reached[1] & odd_targets, cycle


def _is_simple(walk: list[int]) -> bool:
    return len(set(walk)) == len(walk)


def _path_reach(G: Graph, col: Sequence[int], source: int, targets: int, budget: int) -> int:
    """Targets joined to ``source`` by a proper path (bitmask)."""
    if not targets:
        return 0
    parent = _walk_bfs(G, col, source, track_parity=False)
    walkable = 0
    confirmed = 0
    for state in parent:
        v = state[0]
        bit = 1 << v
        if not targets & bit:
            continue
        walkable |= bit
        if not confirmed & bit and _is_simple(_trace(parent, state)):
            confirmed |= bit
    rest = walkable & ~confirmed
    if rest:
        confirmed |= _Search(G, col, source, budget).reach(rest)
    return confirmed


def _parity_reach(G: Graph, col: Sequence[int], source: int, targets: int, budget: int):
    """``(even_mask, odd_mask, odd_cycle)`` of proper paths from ``source``."""
    parent = _walk_bfs(G, col, source, track_parity=True)
    walk_ok = [0, 0]
    found = [0, 0]
    cycle = False
    for state in parent:
        v, last, p = state
        bit = 1 << v
        if v == source:
            if p == 1:
                walk_ok[1] |= bit
                walk = _trace(parent, state)
                # closed walk: inner vertices distinct, and the wrap-around pair of edges differ
                if not cycle and len(walk) >= 4 and _is_simple(walk[:-1]):
                    first = col[G.edge_index(walk[0], walk[1])]
                    if first != last:
                        cycle = True
            continue
        if not targets & bit:
            continue
        walk_ok[p] |= bit
        if not found[p] & bit and _is_simple(_trace(parent, state)):
            found[p] |= bit
    source_bit = 1 << source
    need_cycle = bool(targets & source_bit) and not cycle and bool(walk_ok[1] & source_bit)
    rest_even = walk_ok[0] & targets & ~found[0] & ~source_bit
    rest_odd = walk_ok[1] & targets & ~found[1] & ~source_bit
    if rest_even or rest_odd or need_cycle:
        e, o, cyc = _Search(G, col, source, budget).reach_parity(rest_even, rest_odd, need_cycle)
        found[0] |= e
        found[1] |= o
        cycle = cycle or (need_cycle and cyc)
    return found[0], found[1], cycle


def proper_path_exists(G: Graph, c: EdgeColoring, u: int, v: int, budget: int = DEFAULT_BUDGET) -> bool:
    if u == v:
        return True
    return bool(_path_reach(G, c.colors, u, 1 << v, budget))


def proper_path_exists_with_parity(G: Graph, c: EdgeColoring, u: int, v: int, parity: str,
                                   budget: int = DEFAULT_BUDGET) -> bool:
    """Proper u-v path of the given length parity; for ``u == v`` odd means an odd proper cycle."""
    if parity == EVEN and u == v:
        return True
    even, odd, cycle = _parity_reach(G, c.colors, u, 1 << v, budget)
    if u == v:
        return cycle
    return bool((even if parity == EVEN else odd) >> v & 1)


# --- all-pairs reports ------------------------------------------------------

def _source_failure(args) -> Optional[int]:
    G, col, u, budget, odd_even = args
    if odd_even:
        targets = ((1 << G.n) - 1) & ~((1 << u) - 1)
        even, odd, cycle = _parity_reach(G, col, u, targets, budget)
        if not cycle:
            return u
        even |= 1 << u
        for v in range(u + 1, G.n):
            if not (even >> v & 1 and odd >> v & 1):
                return v
        return None
    targets = ((1 << G.n) - 1) & ~((1 << (u + 1)) - 1)
    got = _path_reach(G, col, u, targets, budget)
    missing = targets & ~got
    if missing:
        return (missing & -missing).bit_length() - 1
    return None


def _report(G: Graph, c: EdgeColoring, budget: int, odd_even: bool, jobs: int) -> ConnectivityReport:
    c.validate(G)
    col = c.colors
    sources = range(G.n)
    tasks = ((G, col, u, budget, odd_even) for u in sources)
    checked = 0
    if jobs > 1 and G.n > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_source_failure, tasks))
    else:
        results = None
    for u in sources:
        bad = results[u] if results is not None else _source_failure(next(tasks))
        span = G.n - u if odd_even else G.n - u - 1
        if bad is not None:
            checked += bad - u + (1 if odd_even else 0)
            return ConnectivityReport(False, (u, bad), checked)
        checked += span
    return ConnectivityReport(True, None, checked)


def is_proper_connected(G: Graph, c: EdgeColoring, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> ConnectivityReport:
    """All-pairs proper path check; ``failing_pair`` is the lexicographically first failure."""
    return _report(G, c, budget, odd_even=False, jobs=jobs)


def is_odd_even_proper(G: Graph, c: EdgeColoring, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> ConnectivityReport:
    """Every pair ``u <= v`` joined by proper paths of both parities.

    ``u == v``: the even path is the empty one, the odd one must be a
    properly colored odd cycle through ``u``.
    """
    return _report(G, c, budget, odd_even=True, jobs=jobs)


def greedy_proper_edge_coloring(G: Graph) -> EdgeColoring:
    colors = [0] * G.m
    for e, (u, v) in enumerate(G.edges):
        taken = {colors[f] for _, f in G.adjacency[u]} | {colors[f] for _, f in G.adjacency[v]}
        c = 1
        while c in taken:
            c += 1
        colors[e] = c
    return EdgeColoring.from_colors(colors)


def is_proper_edge_coloring(G: Graph, c: EdgeColoring) -> bool:
    for v in range(G.n):
        seen = [c[e] for _, e in G.adjacency[v]]
        if len(seen) != len(set(seen)):
            return False
    return True
