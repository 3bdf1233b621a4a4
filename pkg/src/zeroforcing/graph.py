"""Simple undirected graphs on vertices 0..n-1 and bit-indexed vertex sets."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Largest vertex count handled by the single-word search kernels; larger graphs
# (up to MAX_VERTICES) go through the pure-Python multi-word path.
WORD_VERTICES = 64
MAX_VERTICES = 256


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad indices, bad text)."""


class IsolatedVertexWarning(UserWarning):
    pass


class DuplicateEdgeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of an n-vertex graph, stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"vertex set {self.bits:#x} has members >= n={self.n}")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(bits, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    def _check(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise ValueError("vertex sets belong to graphs of different order")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def __invert__(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.bits != other.bits

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)}, n={self.n})"

    def to_list(self) -> list[int]:
        return list(self)

    def is_full(self) -> bool:
        return self.bits == (1 << self.n) - 1


def order_key(bits: int, n: int) -> int:
    """Sort key for deterministic subset order.

    Subsets compare lexicographically by their membership string b_0 b_1 ... b_{n-1},
    so vertex 0 is the most significant position.
    """
    return int(format(bits, f"0{n}b")[::-1], 2) if n else 0


class Graph:
    """Immutable simple undirected graph with vertices 0..n-1.

    ``labels`` optionally maps each vertex to a human-readable coordinate such as
    ``"(2,3)"``.  Equality compares vertex count and adjacency only.
    """

    __slots__ = ("n", "adj", "labels", "nbr_bits", "_hash")

    def __init__(self, n: int, adj: Sequence[Iterable[int]], labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise GraphError(f"graphs with more than {MAX_VERTICES} vertices are not supported")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        frozen = tuple(frozenset(a) for a in adj)
        for u, nbrs in enumerate(frozen):
            if u in nbrs:
                raise GraphError(f"self-loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if u not in frozen[v]:
                    raise GraphError(f"adjacency not symmetric between {u} and {v}")
        if labels is not None and len(labels) != n:
            raise GraphError("label map must name every vertex")
        self.n = n
        self.adj = frozen
        self.labels = tuple(labels) if labels is not None else None
        self.nbr_bits = tuple(sum(1 << v for v in nbrs) for nbrs in frozen)
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(vertices, self.n)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def validate(self) -> list[str]:
        """Return warnings about the graph; isolated vertices are allowed but flagged."""
        issues = []
        iso = self.isolated_vertices()
        if iso and self.n > 1:
            issues.append(f"isolated vertices: {iso}")
        return issues

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = [[index[w] for w in self.adj[v] if w in index] for v in vertices]
        labels = [self.label(v) for v in vertices] if self.labels is not None else None
        return Graph(len(vertices), adj, labels)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph([u for u in range(self.n) if u != v])

    def delete_edge(self, u: int, v: int) -> "Graph":
        if v not in self.adj[u]:
            raise GraphError(f"({u}, {v}) is not an edge")
        adj = [set(a) for a in self.adj]
        adj[u].discard(v)
        adj[v].discard(u)
        return Graph(self.n, adj, self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u in range(self.n):
            adj[perm[u]] = {perm[w] for w in self.adj[u]}
        return Graph(self.n, adj)


def degree_stats(g: Graph) -> tuple[int, int, list[int]]:
    """(minimum degree, maximum degree, degree sequence indexed by vertex)."""
    degs = [len(a) for a in g.adj]
    if not degs:
        return 0, 0, []
    return min(degs), max(degs), degs


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (i, j) at id i*|V(H)| + j and label "(i+1,j+1)"."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product needs two nonempty graphs")
    t = h.n
    adj: list[set[int]] = [set() for _ in range(g.n * t)]
    for i in range(g.n):
        for j in range(t):
            v = i * t + j
            adj[v].update(i * t + jj for jj in h.adj[j])
            adj[v].update(ii * t + j for ii in g.adj[i])
    labels = [f"({i + 1},{j + 1})" for i in range(g.n) for j in range(t)]
    return Graph(g.n * t, adj, labels)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``u v`` lines format.

    Self-loops and out-of-range indices raise GraphError; duplicate edges only warn.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"malformed header line: {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"malformed header line: {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphError("negative vertex or edge count")
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    seen = set()
    for lineno, ln in enumerate(body, start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: malformed edge {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: malformed edge {ln!r}") from None
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex index out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {key}", DuplicateEdgeWarning, stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
    g = Graph.from_edges(n, edges)
    for issue in g.validate():
        warnings.warn(issue, IsolatedVertexWarning, stacklevel=2)
    return g


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"
