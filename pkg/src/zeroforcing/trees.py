"""Search for a 9-vertex tree whose forcing chains are shorter than its iteration index."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .forcing import DEFAULT_LIST_CAP, llfc
from .graph import Graph, VertexSet
from .search import solve

# The ten minimum zero forcing sets listed for the example tree, 1-based.
LISTED_SETS = (
    {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5},
    {2, 4, 9}, {2, 5, 9}, {3, 4, 5}, {3, 4, 9}, {3, 5, 9},
)

# First of the trees found below, relabelled so its Z(T)-sets are exactly LISTED_SETS
# (edges given 1-based).
EXAMPLE_TREE_EDGES = ((1, 6), (1, 7), (2, 8), (3, 8), (4, 7), (5, 7), (6, 8), (6, 9))


def example_tree() -> Graph:
    return Graph.from_edges(9, [(u - 1, v - 1) for u, v in EXAMPLE_TREE_EDGES],
                            labels=[str(v) for v in range(1, 10)])


@dataclass
class TreeCandidate:
    tree: Graph
    z: int
    iteration_index: int
    sets: list[tuple[VertexSet, int, int, int, bool]]    # (Z-set, I_Z, min LLFC, max LLFC, truncated)

    @property
    def all_llfc_two(self) -> bool:
        return all(lo == hi == 2 and not tr for _, _, lo, hi, tr in self.sets)

    @property
    def all_iterations_three(self) -> bool:
        return all(i == 3 for _, i, _, _, _ in self.sets)


def nonisomorphic_trees(n: int):
    import networkx as nx

    for t in nx.nonisomorphic_trees(n):
        yield Graph.from_edges(n, t.edges())


def tree_candidates(n: int = 9, z: int = 3, count: int = 10, index: int = 3,
                    cap: int = DEFAULT_LIST_CAP) -> list[TreeCandidate]:
    """Trees on n vertices with Z = z, exactly ``count`` Z-sets and I = index."""
    out = []
    for tree in nonisomorphic_trees(n):
        p = solve(tree)
        if p.z != z or p.num_minimum != count or p.iteration_index != index:
            continue
        rows = []
        for zset, iters in p.minimum_sets_with_iterations():
            ll = llfc(tree, zset, cap)
            rows.append((zset, iters, ll.min, ll.max, ll.truncated))
        out.append(TreeCandidate(tree, p.z, p.iteration_index, rows))
    return out


def find_example_tree(cap: int = DEFAULT_LIST_CAP) -> TreeCandidate | None:
    """A tree with Z=3, ten Z-sets, I=3, and LLFC = 2 < I_Z = 3 for every Z-set, if one exists."""
    for cand in tree_candidates(cap=cap):
        if cand.all_llfc_two and cand.all_iterations_three:
            return cand
    return None


def listed_labelling(tree: Graph) -> list[int] | None:
    """A relabelling (old id -> new 0-based id) turning the tree's Z-sets into LISTED_SETS."""
    target = {frozenset(v - 1 for v in s) for s in LISTED_SETS}
    sets = [frozenset(s) for s in solve(tree).minimum_sets()]
    if len(sets) != len(target):
        return None
    for perm in permutations(range(tree.n)):
        if {frozenset(perm[v] for v in s) for s in sets} == target:
            return list(perm)
    return None
