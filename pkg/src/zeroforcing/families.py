"""Generators for the named graph families, with canonical vertex labelings.

Products of an s-vertex graph with a t-vertex graph put coordinate (i, j),
1 <= i <= s, 1 <= j <= t, at id (i-1)*t + (j-1).  Bouquets put the cut-vertex
at id 0 followed by each cycle's non-cut vertices in cyclic order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, cartesian_product, parse_edge_list

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "grid",
    "triangular_grid",
    "king_grid",
    "cycle_x_path",
    "complete_x_path",
    "complete_x_complete",
    "cycle_x_complete",
    "cycle_x_cycle",
    "bouquet",
    "edge_list",
)

ONE_PARAM = ("path", "cycle", "complete")
TWO_PARAM = tuple(f for f in FAMILIES if f not in ONE_PARAM + ("bouquet", "edge_list"))

# Smallest allowed value of each parameter (s, t) for two-parameter families.
_TWO_PARAM_MIN = {
    "complete_bipartite": (1, 1),
    "grid": (2, 2),
    "triangular_grid": (2, 2),
    "king_grid": (2, 2),
    "cycle_x_path": (3, 2),
    "complete_x_path": (2, 2),
    "complete_x_complete": (2, 2),
    "cycle_x_complete": (3, 2),
    "cycle_x_cycle": (3, 3),
}
_ONE_PARAM_MIN = {"path": 2, "cycle": 3, "complete": 2}


class ParameterError(ValueError):
    """A family parameter lies outside the family's hypotheses."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    source: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        validate_spec(self)

    def __str__(self) -> str:
        if self.family == "edge_list":
            return "edge_list"
        return f"{self.family}({','.join(map(str, self.params))})"


def validate_spec(spec: FamilySpec) -> None:
    fam, p = spec.family, spec.params
    if fam not in FAMILIES:
        raise ParameterError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
    if fam == "edge_list":
        if spec.source is None:
            raise ParameterError("edge_list family needs edge-list text")
        return
    if fam in ONE_PARAM:
        if len(p) != 1:
            raise ParameterError(f"{fam} takes one parameter n, got {len(p)}")
        lo = _ONE_PARAM_MIN[fam]
        if p[0] < lo:
            raise ParameterError(f"{fam} needs n >= {lo}, got n={p[0]}")
        return
    if fam == "bouquet":
        if len(p) < 1:
            raise ParameterError("bouquet needs at least one circle (n >= 1)")
        if any(k < 2 for k in p):
            raise ParameterError(f"bouquet needs every k_i >= 2, got {p}")
        if list(p) != sorted(p):
            raise ParameterError(f"bouquet needs k_1 <= ... <= k_n, got {p}")
        return
    if len(p) != 2:
        raise ParameterError(f"{fam} takes two parameters s,t, got {len(p)}")
    s_min, t_min = _TWO_PARAM_MIN[fam]
    if p[0] < s_min or p[1] < t_min:
        raise ParameterError(f"{fam} needs s >= {s_min} and t >= {t_min}, got s={p[0]}, t={p[1]}")


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def _with_diagonals(s: int, t: int, down: bool, up: bool) -> Graph:
    base = cartesian_product(path(s), path(t))
    edges = base.edges()
    for i in range(s - 1):
        for j in range(t - 1):
            if down:
                edges.append((i * t + j, (i + 1) * t + j + 1))
            if up:
                edges.append((i * t + j + 1, (i + 1) * t + j))
    return Graph.from_edges(s * t, edges, base.labels)


def triangular_grid(s: int, t: int) -> Graph:
    """P_s □ P_t plus the diagonal (i,j)-(i+1,j+1) in every unit square."""
    return _with_diagonals(s, t, down=True, up=False)


def king_grid(s: int, t: int) -> Graph:
    return _with_diagonals(s, t, down=True, up=True)


def bouquet(ks: tuple[int, ...]) -> Graph:
    n = 1 + sum(ks)
    edges = []
    labels = ["v"]
    start = 1
    for i, k in enumerate(ks, start=1):
        ids = list(range(start, start + k))
        edges.append((0, ids[0]))
        edges.extend(zip(ids, ids[1:]))
        edges.append((ids[-1], 0))
        labels.extend(f"w_{{{i},{j}}}" for j in range(1, k + 1))
        start += k
    return Graph.from_edges(n, edges, labels)


def star_with_tail(m: int, n: int) -> Graph:
    """Star K_{1,m} whose center is joined to an end-vertex of P_n.

    Center is 0, leaves are 1..m, the path is m+1..m+n with m+1 next to the center.
    """
    edges = [(0, leaf) for leaf in range(1, m + 1)]
    if n:
        edges.append((0, m + 1))
        edges.extend((m + i, m + i + 1) for i in range(1, n))
    return Graph.from_edges(1 + m + n, edges)


def build_family(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    if fam == "path":
        return path(p[0])
    if fam == "cycle":
        return cycle(p[0])
    if fam == "complete":
        return complete(p[0])
    if fam == "complete_bipartite":
        return complete_bipartite(*p)
    if fam == "bouquet":
        return bouquet(p)
    if fam == "edge_list":
        return parse_edge_list(spec.source)
    s, t = p
    if fam == "grid":
        return cartesian_product(path(s), path(t))
    if fam == "triangular_grid":
        return triangular_grid(s, t)
    if fam == "king_grid":
        return king_grid(s, t)
    factors = {
        "cycle_x_path": (cycle, path),
        "complete_x_path": (complete, path),
        "complete_x_complete": (complete, complete),
        "cycle_x_complete": (cycle, complete),
        "cycle_x_cycle": (cycle, cycle),
    }
    first, second = factors[fam]
    return cartesian_product(first(s), second(t))


def family(name: str, *params: int) -> Graph:
    """Shorthand: ``family("cycle", 5)``."""
    return build_family(FamilySpec(name, params))
