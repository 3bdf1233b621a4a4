"""Exhaustive check of the conjectured zero forcing numbers of C_s □ C_t."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass

from .expected import _CYCLE_CYCLE_KNOWN, conjectured_cycle_product_z, cycle_product_z_upper_bound
from .families import family
from .invariants import check_bounds
from .search import BudgetExceeded, solve

COLUMNS = ("s", "t", "n", "z", "i", "conjectured_z", "z_upper_bound", "num_min_zfs", "status", "note")


@dataclass
class SweepRow:
    s: int
    t: int
    n: int
    z: int | None
    i: int | None
    conjectured_z: int
    z_upper_bound: int
    num_min_zfs: int | None
    status: str         # confirmed | refuted | skipped
    note: str = ""


def conjecture_sweep(max_s: int, max_t: int | None = None, *, min_s: int = 3,
                     budget: int | None = None, workers: int = 1) -> list[SweepRow]:
    """One row per 3 <= s <= t, s <= max_s, t <= max_t."""
    max_t = max_s if max_t is None else max_t
    rows = []
    for s in range(max(min_s, 3), max_s + 1):
        for t in range(s, max_t + 1):
            conj = conjectured_cycle_product_z(s, t)
            ub = cycle_product_z_upper_bound(s, t)
            g = family("cycle_x_cycle", s, t)
            try:
                p = solve(g, budget=budget, workers=workers)
            except BudgetExceeded as exc:
                rows.append(SweepRow(s, t, g.n, None, None, conj, ub, None, "skipped",
                                     f"budget: Z >= {exc.lower_bound}"))
                continue
            check_bounds(g, p.z, p.iteration_index)
            notes = []
            if p.z > ub:
                notes.append("upper bound violated")
            known = _CYCLE_CYCLE_KNOWN.get((s, t))
            if known and known != (p.z, p.iteration_index):
                notes.append(f"differs from stated value Z={known[0]}, I={known[1]}")
            if s == t:
                notes.append("odd formula" if s % 2 else "even formula")
            rows.append(SweepRow(s, t, g.n, p.z, p.iteration_index, conj, ub, p.num_minimum,
                                 "confirmed" if p.z == conj else "refuted", "; ".join(notes)))
    return rows


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in asdict(row).items()})
    return buf.getvalue()


def rows_to_text(rows: list[SweepRow]) -> str:
    out = []
    for r in rows:
        mark = {"confirmed": "ok", "refuted": "REFUTED", "skipped": "skipped"}[r.status]
        z = "?" if r.z is None else r.z
        i = "?" if r.i is None else r.i
        line = f"C_{r.s} x C_{r.t}: Z={z} I={i} conjectured Z={r.conjectured_z} (<= {r.z_upper_bound}) {mark}"
        if r.note:
            line += f"  [{r.note}]"
        out.append(line)
    return "\n".join(out)
