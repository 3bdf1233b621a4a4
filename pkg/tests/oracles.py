"""Slow, obviously-correct reference implementations used only by the tests.

Everything here works on plain dicts of Python sets and never touches the
package's bitmask code.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def adjacency(g) -> dict[int, set[int]]:
    return {v: set(g.adj[v]) for v in range(g.n)}


def global_step(adj, black: set[int]) -> set[int]:
    new = set(black)
    for u in black:
        white = [w for w in adj[u] if w not in black]
        if len(white) == 1:
            new.add(white[0])
    return new


def iterations(adj, z) -> int | None:
    """Number of global steps to blacken everything, or None if z does not force."""
    black, steps = set(z), 0
    while len(black) < len(adj):
        nxt = global_step(adj, black)
        if nxt == black:
            return None
        black, steps = nxt, steps + 1
    return steps


def brute_force(g):
    """(Z, I, all minimum sets in ascending membership-string order) by plain enumeration."""
    adj = adjacency(g)
    n = len(adj)
    for k in range(n + 1):
        hits = []
        for combo in combinations(range(n), k):
            it = iterations(adj, combo)
            if it is not None:
                hits.append((frozenset(combo), it))
        if hits:
            hits.sort(key=lambda h: membership_string(h[0], n))
            return k, min(it for _, it in hits), [s for s, _ in hits]
    raise AssertionError("unreachable")


def membership_string(s, n: int) -> str:
    return "".join("1" if v in s else "0" for v in range(n))


def nx_graph(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def path_cover_brute(g) -> int:
    """Minimum number of vertex-disjoint paths covering V, by trying every set of path edges."""
    edges = list(g.edges())
    n = g.n
    best = n
    for k in range(min(len(edges), n - 1), -1, -1):
        if n - k >= best:
            break
        for sub in combinations(edges, k):
            deg = [0] * n
            ok = True
            for u, v in sub:
                deg[u] += 1
                deg[v] += 1
                if deg[u] > 2 or deg[v] > 2:
                    ok = False
                    break
            if not ok:
                continue
            h = nx.Graph(list(sub))
            h.add_nodes_from(range(n))
            if nx.is_forest(h):
                best = min(best, n - k)
                break
    return best
