"""The color-change dynamical system on a graph.

Sets are handled as ``VertexSet`` at the API boundary and as plain int bitmasks
inside the loops.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .graph import Graph, VertexSet

DEFAULT_LIST_CAP = 10**6


class NotZeroForcingError(ValueError):
    """An operation that needs a zero forcing set was given one that stalls."""


def _step(nbr: tuple[int, ...], black: int) -> int:
    new = black
    bits = black
    while bits:
        low = bits & -bits
        bits ^= low
        white = nbr[low.bit_length() - 1] & ~black
        if white and not white & (white - 1):
            new |= white
    return new


def _closure(nbr: tuple[int, ...], black: int) -> int:
    # One-at-a-time forcing reaches the same fixpoint as global steps, in fewer passes.
    changed = True
    while changed:
        changed = False
        bits = black
        while bits:
            low = bits & -bits
            bits ^= low
            white = nbr[low.bit_length() - 1] & ~black
            if white and not white & (white - 1):
                black |= white
                changed = True
    return black


def color_change_step(g: Graph, black: VertexSet) -> VertexSet:
    """Apply the color-change rule once, simultaneously at every black vertex."""
    return VertexSet(_step(g.nbr_bits, black.bits), g.n)


def closure(g: Graph, z: VertexSet) -> VertexSet:
    return VertexSet(_closure(g.nbr_bits, z.bits), g.n)


def is_zero_forcing_set(g: Graph, z: VertexSet) -> bool:
    return _closure(g.nbr_bits, z.bits) == (1 << g.n) - 1


@dataclass(frozen=True)
class ForcingTrace:
    z0: VertexSet
    layers: tuple[VertexSet, ...]
    success: bool

    @property
    def derived(self) -> tuple[VertexSet, ...]:
        """D^1, D^2, ...: the vertices first turned black at each global step."""
        return tuple(b - a for a, b in zip(self.layers, self.layers[1:]))

    @property
    def iterations(self) -> int:
        """Number of strictly growing global steps (the iteration index on success)."""
        return len(self.layers) - 1

    @property
    def final(self) -> VertexSet:
        return self.layers[-1]

    def first_black(self) -> list[int | None]:
        """For each vertex, the m with the vertex in Z_m but not Z_{m-1}; None if never black."""
        times: list[int | None] = [None] * self.z0.n
        for m, layer in enumerate(self.layers):
            for v in layer:
                if times[v] is None:
                    times[v] = m
        return times

    def to_dict(self) -> dict:
        return {
            "z0": self.z0.to_list(),
            "layers": [layer.to_list() for layer in self.layers],
            "derived": [d.to_list() for d in self.derived],
            "success": self.success,
            "iterations": self.iterations,
            "first_black": self.first_black(),
            "white": (~self.final).to_list(),
        }


def run_forcing(g: Graph, z: VertexSet) -> ForcingTrace:
    nbr = g.nbr_bits
    black = z.bits
    layers = [z]
    while True:
        nxt = _step(nbr, black)
        if nxt == black:
            break
        black = nxt
        layers.append(VertexSet(black, g.n))
    return ForcingTrace(z, tuple(layers), black == (1 << g.n) - 1)


def iteration_count(g: Graph, bits: int) -> tuple[int, bool]:
    """(number of global steps to the fixpoint, whether the fixpoint is V(G)) for a bitmask."""
    nbr = g.nbr_bits
    steps = 0
    while True:
        nxt = _step(nbr, bits)
        if nxt == bits:
            return steps, bits == (1 << g.n) - 1
        bits = nxt
        steps += 1


def random_sequential_closure(g: Graph, z: VertexSet, rng: random.Random) -> VertexSet:
    """Apply single forces in random order until none is possible."""
    nbr = g.nbr_bits
    black = z.bits
    while True:
        options = []
        for u in VertexSet(black, g.n):
            white = nbr[u] & ~black
            if white and not white & (white - 1):
                options.append(white)
        if not options:
            return VertexSet(black, g.n)
        black |= rng.choice(options)


class Force(NamedTuple):
    source: int
    target: int

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"


@dataclass(frozen=True)
class ChronologicalList:
    z: VertexSet
    forces: tuple[Force, ...]

    def is_valid(self, g: Graph) -> bool:
        nbr = g.nbr_bits
        black = self.z.bits
        for u, w in self.forces:
            if not (black >> u) & 1 or (black >> w) & 1:
                return False
            if nbr[u] & ~black != 1 << w:
                return False
            black |= 1 << w
        return black == (1 << g.n) - 1


def _valid_forces(nbr: tuple[int, ...], black: int) -> list[Force]:
    out = []
    bits = black
    while bits:
        low = bits & -bits
        bits ^= low
        white = nbr[low.bit_length() - 1] & ~black
        if white and not white & (white - 1):
            out.append(Force(low.bit_length() - 1, white.bit_length() - 1))
    return out


def iter_chronological_lists(g: Graph, z: VertexSet) -> Iterator[ChronologicalList]:
    """All one-force-at-a-time orderings from z, depth first, smallest (u, w) first."""
    if not is_zero_forcing_set(g, z):
        raise NotZeroForcingError(f"{z.to_list()} is not a zero forcing set")
    nbr = g.nbr_bits
    full = (1 << g.n) - 1
    stack: list[Force] = []

    def walk(black: int) -> Iterator[ChronologicalList]:
        if black == full:
            yield ChronologicalList(z, tuple(stack))
            return
        for f in _valid_forces(nbr, black):
            stack.append(f)
            yield from walk(black | (1 << f.target))
            stack.pop()

    yield from walk(z.bits)


class ListEnumeration(NamedTuple):
    lists: list[ChronologicalList]
    truncated: bool


def enumerate_chronological_lists(g: Graph, z: VertexSet, cap: int = DEFAULT_LIST_CAP) -> ListEnumeration:
    if cap < 1:
        raise ValueError("cap must be at least 1")
    lists = []
    for lst in iter_chronological_lists(g, z):
        if len(lists) == cap:
            return ListEnumeration(lists, True)
        lists.append(lst)
    return ListEnumeration(lists, False)


def extract_maximal_chains(lst: ChronologicalList) -> list[tuple[int, ...]]:
    """Maximal forcing chains, one per vertex of z, in increasing order of start vertex."""
    succ = {u: w for u, w in lst.forces}
    chains = []
    for start in lst.z:
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    return chains


def reversal(lst: ChronologicalList) -> VertexSet:
    return VertexSet.of((c[-1] for c in extract_maximal_chains(lst)), lst.z.n)


def longest_chain(lst: ChronologicalList) -> int:
    """Length, counted in forces, of the longest chain of the list."""
    return max((len(c) - 1 for c in extract_maximal_chains(lst)), default=0)


class LLFC(NamedTuple):
    min: int
    max: int
    truncated: bool
    lists: int
    stepwise: int       # longest chain of the list that follows the global steps


def llfc(g: Graph, z: VertexSet, cap: int = DEFAULT_LIST_CAP) -> LLFC:
    """Longest forcing chain length of z, minimised and maximised over chronological lists.

    Chain length is measured in forces.  Only exact when ``truncated`` is False.
    ``stepwise`` is the value for the single list that forces along the global
    steps (see canonical_list); it never exceeds I_Z.
    """
    if not is_zero_forcing_set(g, z):
        raise NotZeroForcingError(f"{z.to_list()} is not a zero forcing set")
    nbr = g.nbr_bits
    full = (1 << g.n) - 1
    depth = [0] * g.n
    lo, hi = g.n, -1
    seen = 0
    truncated = False

    def walk(black: int, longest: int) -> bool:
        nonlocal lo, hi, seen, truncated
        if black == full:
            if seen == cap:
                truncated = True
                return False
            seen += 1
            lo = min(lo, longest)
            hi = max(hi, longest)
            return True
        for u, w in _valid_forces(nbr, black):
            depth[w] = depth[u] + 1
            if not walk(black | (1 << w), max(longest, depth[w])):
                return False
        return True

    walk(z.bits, 0)
    return LLFC(lo, hi, truncated, seen, longest_chain(canonical_list(g, z)))


def canonical_list(g: Graph, z: VertexSet) -> ChronologicalList:
    """A chronological list that follows the global steps.

    Within each step targets are forced in increasing order, each by its smallest
    eligible black neighbour.
    """
    nbr = g.nbr_bits
    black = z.bits
    forces = []
    while True:
        by_target: dict[int, int] = {}
        for u, w in _valid_forces(nbr, black):
            by_target.setdefault(w, u)
        if not by_target:
            break
        for w in sorted(by_target):
            forces.append(Force(by_target[w], w))
            black |= 1 << w
    return ChronologicalList(z, tuple(forces))


def generic_matrix(g: Graph) -> dict[tuple[int, int], str]:
    """Nonzero pattern of the generic symmetric matrix of g.

    Diagonal entries are named a_1..a_n (arbitrary, possibly zero); off-diagonal
    entries of edges are named c_1, c_2, ... row by row (each nonzero).
    """
    entries = {}
    k = 0
    for i in range(g.n):
        entries[(i, i)] = f"a_{i + 1}"
        for j in sorted(g.adj[i]):
            if j > i:
                k += 1
                entries[(i, j)] = entries[(j, i)] = f"c_{k}"
    return entries


def generic_kernel_rounds(g: Graph, z: VertexSet) -> tuple[int, bool]:
    """Solve A x = 0 by rounds of naive substitution, starting from x_v = 0 on z.

    In a round every equation with a single unknown whose coefficient is a
    nonzero off-diagonal entry forces that unknown to zero.  Returns
    (rounds taken, whether x = 0 was reached).
    """
    entries = generic_matrix(g)
    rows: list[list[tuple[int, str]]] = [[] for _ in range(g.n)]
    for (i, j), name in sorted(entries.items()):
        rows[i].append((j, name))
    known = set(z)
    rounds = 0
    while len(known) < g.n:
        deduced = set()
        for row in rows:
            unknown = [(j, name) for j, name in row if j not in known]
            if len(unknown) == 1 and unknown[0][1].startswith("c_"):
                deduced.add(unknown[0][0])
        if not deduced:
            return rounds, False
        known |= deduced
        rounds += 1
    return rounds, True


_COORD = re.compile(r"^\((\d+),(\d+)\)$")


def render_trace(g: Graph, trace: ForcingTrace, forces: ChronologicalList | None = None) -> str:
    """Text rendering: each vertex shows the m of the first Z_m containing it ('.' if never)."""
    times = trace.first_black()
    cell = ["." if t is None else str(t) for t in times]
    coords = [_COORD.match(g.label(v)) for v in range(g.n)] if g.labels else []
    lines = []
    if coords and all(coords):
        ij = [(int(m.group(1)), int(m.group(2))) for m in coords]
        rows = max(i for i, _ in ij)
        cols = max(j for _, j in ij)
        grid = [["" for _ in range(cols)] for _ in range(rows)]
        for v, (i, j) in enumerate(ij):
            grid[i - 1][j - 1] = cell[v]
        width = max(len(c) for c in cell)
        lines.extend(" ".join(c.rjust(width) for c in row) for row in grid)
    else:
        lines.extend(f"{g.label(v)}: {cell[v]}" for v in range(g.n))
    for i, d in enumerate(trace.derived, start=1):
        lines.append(f"D^{i} = {{{', '.join(g.label(v) for v in d)}}}")
    lines.append(f"success: {str(trace.success).lower()}  iterations: {trace.iterations}")
    if not trace.success:
        lines.append(f"white: {{{', '.join(g.label(v) for v in ~trace.final)}}}")
    if forces is not None:
        lines.append("forces: " + ", ".join(f"{g.label(u)}->{g.label(w)}" for u, w in forces.forces))
    return "\n".join(lines)


def trace_json(g: Graph, trace: ForcingTrace, forces: ChronologicalList | None = None) -> str:
    payload = trace.to_dict()
    if g.labels is not None:
        payload["labels"] = list(g.labels)
    if forces is not None:
        payload["forces"] = [[u, w] for u, w in forces.forces]
    return json.dumps(payload, sort_keys=True)
