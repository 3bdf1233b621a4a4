"""Path cover number, bound checks, deletion perturbation and the full invariant report."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .expected import ExpectedInvariants, expected_invariants
from .families import FamilySpec
from .graph import Graph, VertexSet, degree_stats
from .search import solve

PATH_COVER_LIMIT = 16


class SizeLimitError(ValueError):
    pass


class BoundViolation(AssertionError):
    """A proven inequality failed; this points at a bug in the engine, not in the graph."""


def path_cover_number(g: Graph, limit: int = PATH_COVER_LIMIT) -> int:
    if g.n > limit:
        raise SizeLimitError(f"exact path cover is limited to {limit} vertices, graph has {g.n}")
    if g.n == 0:
        return 0
    from . import _kernels

    return int(_kernels.path_cover(np.array(g.nbr_bits, dtype=np.int64), g.n))


@dataclass
class BoundsReport:
    delta: int
    max_degree: int
    path_cover: int | None
    lower_bound: int | None     # smallest integer I allowed by max{|V|/Z - 1, 1}; None if edgeless
    upper_bound: int
    satisfied: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.satisfied.values())

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "max_degree": self.max_degree,
            "path_cover": self.path_cover,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "satisfied": dict(sorted(self.satisfied.items())),
        }


def check_bounds(g: Graph, z: int, i: int, path_cover: int | None = None, strict: bool = True) -> BoundsReport:
    """Check max{|V|/Z - 1, 1} <= I <= |V| - Z, delta <= Z and P <= Z.

    The lower bound is compared exactly as a rational.  With ``strict`` a failed
    check raises BoundViolation.
    """
    delta, max_deg, _ = degree_stats(g)
    sat = {"delta_le_z": delta <= z, "upper": i <= g.n - z}
    lower = None
    if g.num_edges:
        rational = Fraction(g.n, z) - 1
        sat["lower"] = i >= rational and i >= 1
        lower = max(-(-g.n // z) - 1, 1)
    if path_cover is not None:
        sat["path_cover_le_z"] = path_cover <= z
    report = BoundsReport(delta, max_deg, path_cover, lower, g.n - z, sat)
    if strict and not report.ok:
        failed = [k for k, v in sat.items() if not v]
        raise BoundViolation(f"bounds violated on {g!r} (Z={z}, I={i}): {failed}")
    return report


@dataclass
class PerturbationReport:
    z: int
    vertex_rows: list[tuple[int, int, int]]             # (v, Z(G-v), difference)
    edge_rows: list[tuple[tuple[int, int], int, int]]    # (e, Z(G-e), difference)

    @property
    def ok(self) -> bool:
        return all(abs(d) <= 1 for _, _, d in self.vertex_rows + self.edge_rows)


def _z(g: Graph, budget, workers) -> int:
    return solve(g, full=False, budget=budget, workers=workers).z if g.n else 0


def perturbation_check(g: Graph, *, budget: int | None = None, workers: int = 1) -> PerturbationReport:
    """Z(G) - 1 <= Z(G - x) <= Z(G) + 1 for every vertex and every edge x."""
    z = _z(g, budget, workers)
    vrows = []
    for v in range(g.n):
        zv = _z(g.delete_vertex(v), budget, workers)
        vrows.append((v, zv, zv - z))
    erows = []
    for u, v in g.edges():
        ze = _z(g.delete_edge(u, v), budget, workers)
        erows.append(((u, v), ze, ze - z))
    return PerturbationReport(z, vrows, erows)


@dataclass
class InvariantReport:
    graph: Graph
    spec: FamilySpec | None
    zero_forcing_number: int
    iteration_index: int
    zfs_witness: VertexSet
    ii_witness: VertexSet
    num_minimum_zfs: int
    bounds: BoundsReport
    expected: ExpectedInvariants | None
    timing: dict[str, float] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def match(self) -> bool | None:
        if self.expected is None:
            return None
        return self.expected.matches(self.zero_forcing_number, self.iteration_index)

    def to_dict(self) -> dict:
        spec = self.spec
        return {
            "graph": {
                "family": spec.family if spec else "edge_list",
                "params": list(spec.params) if spec else [],
                "n": self.graph.n,
                "m": self.graph.num_edges,
            },
            "z": self.zero_forcing_number,
            "i": self.iteration_index,
            "zfs_witness": self.zfs_witness.to_list(),
            "ii_witness": self.ii_witness.to_list(),
            "num_min_zfs": self.num_minimum_zfs,
            "bounds": self.bounds.to_dict(),
            "expected": self.expected.to_dict() if self.expected else None,
            "match": self.match,
            "notes": list(self.notes),
            "timing_ms": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def compute_report(
    g: Graph,
    spec: FamilySpec | None = None,
    *,
    budget: int | None = None,
    workers: int = 1,
    path_cover_limit: int = PATH_COVER_LIMIT,
    timing: bool = False,
) -> InvariantReport:
    clock = {}
    t0 = time.perf_counter()
    profile = solve(g, budget=budget, workers=workers)
    clock["search"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    pc = path_cover_number(g) if g.n <= path_cover_limit else None
    clock["path_cover"] = time.perf_counter() - t0

    bounds = check_bounds(g, profile.z, profile.iteration_index, pc)
    notes = []
    if len(profile.components) > 1:
        notes.append("disconnected: Z summed and I maximised over components")
    if g.isolated_vertices() and g.n > 1:
        notes.append("graph has isolated vertices")
    expected = expected_invariants(spec) if spec is not None else None
    return InvariantReport(
        graph=g,
        spec=spec,
        zero_forcing_number=profile.z,
        iteration_index=profile.iteration_index,
        zfs_witness=profile.zfs_witness,
        ii_witness=profile.ii_witness,
        num_minimum_zfs=profile.num_minimum,
        bounds=bounds,
        expected=expected,
        timing={k: round(v * 1000, 3) for k, v in clock.items()} if timing else None,
        notes=notes,
    )
