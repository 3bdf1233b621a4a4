"""Exact zero forcing number and iteration index by subset enumeration.

Subsets are tried in ascending size, starting at the minimum degree, and within
one size in ascending ``order_key`` order, so the first forcing subset found is
the certificate and the witness.  Each connected component is searched on its
own: Z adds up over components and I is the largest component value.

Inside a component, vertex v is stored at bit position n-1-v.  Colex order of
those masks, which is plain ascending integer order, then equals ``order_key``
order of the original sets.  One size is split into prefix ranges fixed by the
two highest bits.  The ranges are contiguous in that order, so they can go to a
thread pool and be reassembled without depending on the schedule.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb, prod

import numpy as np

from .forcing import _closure, iteration_count
from .graph import WORD_VERTICES, Graph, VertexSet, order_key

DEFAULT_BUDGET = 2**31


class BudgetExceeded(RuntimeError):
    """The worst-case enumeration would exceed the closure budget."""

    def __init__(self, lower_bound: int, needed: int, budget: int):
        self.lower_bound = lower_bound
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"closure budget {budget} exceeded: size {lower_bound} needs up to {needed} "
            f"more closures; Z >= {lower_bound} established so far"
        )


def default_budget() -> int:
    env = os.environ.get("ZF_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class _Component:
    vertices: list[int]                 # global ids, ascending
    z: int
    sets: list[int] = field(default_factory=list)   # global bitmasks, ascending order_key
    iters: list[int] = field(default_factory=list)
    exhaustive: bool = False            # every minimum set was collected


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self, k: int, amount: int) -> None:
        if self.used + amount > self.limit:
            raise BudgetExceeded(k, amount, self.limit)
        self.used += amount


def _prefixes(n: int, k: int) -> list[tuple[int, int, int]]:
    """(prefix mask, remaining size, limit) ranges for size k, in ascending mask order."""
    if k == 0:
        return [(0, 0, 0)]
    if k == 1:
        return [(1 << h, 0, 0) for h in range(n)]
    return [
        ((1 << h1) | (1 << h2), k - 2, h2)
        for h1 in range(k - 1, n)
        for h2 in range(k - 2, h1)
    ]


def _to_int64(x: int) -> np.int64:
    return np.int64(x - (1 << 64) if x >= 1 << 63 else x)


def _from_int64(x) -> int:
    x = int(x)
    return x + (1 << 64) if x < 0 else x


def _colex(n: int, k: int):
    """k-subsets of {0..n-1} as bitmasks in ascending integer order."""
    c = list(range(k))
    while True:
        yield sum(1 << p for p in c)
        j = 0
        while j < k and c[j] + 1 == (c[j + 1] if j + 1 < k else n):
            j += 1
        if j == k:
            return
        c[j] += 1
        c[:j] = range(j)


def _search_component(
    g: Graph, vertices: list[int], full: bool, budget: _Budget, workers: int, backend: str
) -> _Component:
    n = len(vertices)
    if n == 1:
        return _Component(vertices, 1, [1 << vertices[0]], [0], True)
    # internal bit p <-> vertex vertices[n-1-p]
    rev = vertices[::-1]
    pos = {v: p for p, v in enumerate(rev)}
    nbr = [sum(1 << pos[w] for w in g.adj[v]) for v in rev]
    full_mask = (1 << n) - 1
    delta = min(len(g.adj[v]) for v in vertices)

    def to_global(mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << rev[low.bit_length() - 1]
            mask ^= low
        return out

    use_kernel = backend == "auto" and n <= WORD_VERTICES
    if use_kernel:
        from . import _kernels

        nbr_arr = np.array([_to_int64(x) for x in nbr], dtype=np.int64)
        full64 = _to_int64(full_mask)
        pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    else:
        local = Graph(n, [[pos[w] for w in g.adj[v]] for v in rev])

    try:
        for k in range(max(delta, 1), n + 1):
            budget.charge(k, comb(n, k))
            if use_kernel:
                parts = _prefixes(n, k)

                def run(part, first_only=not full):
                    prefix, r, limit = part
                    _, masks, iters = _kernels.scan(nbr_arr, n, full64, _to_int64(prefix), r, limit, first_only)
                    return [_from_int64(m) for m in masks], [int(i) for i in iters]

                found: list[int] = []
                iters: list[int] = []
                chunk = max(1, workers) * 8 if not full else len(parts)
                for start in range(0, len(parts), chunk):
                    batch = parts[start:start + chunk]
                    results = pool.map(run, batch) if pool else map(run, batch)
                    for masks, its in results:
                        found.extend(masks)
                        iters.extend(its)
                    if found and not full:
                        found, iters = found[:1], iters[:1]
                        break
            else:
                found, iters = [], []
                for mask in _colex(n, k):
                    if _closure(local.nbr_bits, mask) == full_mask:
                        found.append(mask)
                        iters.append(iteration_count(local, mask)[0])
                        if not full:
                            break
            if found:
                return _Component(vertices, k, [to_global(m) for m in found], iters, full)
    finally:
        if use_kernel and pool is not None:
            pool.shutdown()
    raise AssertionError("the full vertex set always forces")


@dataclass
class ZeroForcingProfile:
    """Z(G), and when the search was exhaustive, I(G) and the Z(G)-sets."""

    n: int
    z: int
    zfs_witness: VertexSet
    iteration_index: int | None
    ii_witness: VertexSet | None
    num_minimum: int | None
    closures: int
    components: list[_Component]

    def minimum_sets(self) -> list[VertexSet]:
        if self.num_minimum is None:
            raise ValueError("search was not exhaustive at size Z; rerun with full=True")
        combos = itertools.product(*(c.sets for c in self.components))
        masks = sorted((sum(parts) for parts in combos), key=lambda b: order_key(b, self.n))
        return [VertexSet(b, self.n) for b in masks]

    def minimum_sets_with_iterations(self) -> list[tuple[VertexSet, int]]:
        if self.num_minimum is None:
            raise ValueError("search was not exhaustive at size Z; rerun with full=True")
        combos = itertools.product(*(list(zip(c.sets, c.iters)) for c in self.components))
        rows = [(sum(m for m, _ in parts), max(i for _, i in parts)) for parts in combos]
        rows.sort(key=lambda row: order_key(row[0], self.n))
        return [(VertexSet(b, self.n), i) for b, i in rows]


def solve(
    g: Graph,
    *,
    full: bool = True,
    budget: int | None = None,
    workers: int = 1,
    backend: str = "auto",
) -> ZeroForcingProfile:
    """Search every component of g.

    ``full`` collects every minimum zero forcing set (needed for I); otherwise the
    search stops at the first forcing set of minimum size.  ``backend="python"``
    bypasses the compiled kernels.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if backend not in ("auto", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    tracker = _Budget(default_budget() if budget is None else budget)
    comps = [
        _search_component(g, vs, full, tracker, max(1, workers), backend)
        for vs in g.components()
    ]
    z = sum(c.z for c in comps)
    witness = VertexSet(sum(c.sets[0] for c in comps), g.n)
    if not full:
        return ZeroForcingProfile(g.n, z, witness, None, None, None, tracker.used, comps)
    index = max(min(c.iters) for c in comps)
    # The least set achieving I takes, per component, the least set with at most I steps.
    ii = sum(next(m for m, i in zip(c.sets, c.iters) if i <= index) for c in comps)
    count = prod(len(c.sets) for c in comps)
    return ZeroForcingProfile(g.n, z, witness, index, VertexSet(ii, g.n), count, tracker.used, comps)


def zero_forcing_number(g: Graph, *, budget: int | None = None, workers: int = 1, backend: str = "auto"):
    """(Z(G), least Z(G)-set in order_key order)."""
    p = solve(g, full=False, budget=budget, workers=workers, backend=backend)
    return p.z, p.zfs_witness


def all_minimum_zfs(g: Graph, *, budget: int | None = None, workers: int = 1, backend: str = "auto") -> list[VertexSet]:
    return solve(g, budget=budget, workers=workers, backend=backend).minimum_sets()


def iteration_index(g: Graph, *, budget: int | None = None, workers: int = 1, backend: str = "auto"):
    """(I(G), least Z(G)-set whose iteration index is I(G))."""
    p = solve(g, budget=budget, workers=workers, backend=backend)
    return p.iteration_index, p.ii_witness
