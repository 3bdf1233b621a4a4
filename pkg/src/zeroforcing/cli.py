"""Command line: compute | verify | conjecture | trace.

Exit codes: 0 all checks pass, 1 verification mismatch, 2 usage error,
3 budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .conjecture import conjecture_sweep, rows_to_csv, rows_to_text
from .expected import expected_invariants
from .families import FAMILIES, ONE_PARAM, FamilySpec, ParameterError, build_family
from .forcing import (
    ChronologicalList,
    Force,
    canonical_list,
    llfc,
    render_trace,
    run_forcing,
    trace_json,
    _valid_forces,
)
from .graph import Graph, GraphError, VertexSet, parse_edge_list
from .invariants import BoundViolation, compute_report
from .search import BudgetExceeded

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

REPORT_COLUMNS = (
    "family", "params", "n", "m", "z", "i", "zfs_witness", "ii_witness", "num_min_zfs",
    "delta", "path_cover", "lower_bound", "upper_bound", "expected_z", "expected_i",
    "i_is_upper_bound", "match",
)
VERIFY_COLUMNS = ("family", "params", "n", "z", "expected_z", "i", "expected_i", "relation", "status")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    spec: FamilySpec | None
    graph_path: str | None
    s_range: tuple[int, int] | None
    t_range: tuple[int, int] | None
    fmt: str
    budget: int | None
    workers: int
    list_cap: int
    seed: int
    timing: bool


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected a..b") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_params(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad parameter list {text!r}") from None


def _split_tokens(text: str) -> list[str]:
    tokens, depth, cur = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "," and depth == 0:
            tokens.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    tokens.append("".join(cur))
    return [t.strip() for t in tokens if t.strip()]


def parse_vertex_set(g: Graph, text: str) -> VertexSet:
    """Comma separated 0-based ids, or labels such as ``(2,1)`` from the graph's label map."""
    by_label = {}
    if g.labels is not None:
        by_label = {lab.replace(" ", ""): v for v, lab in enumerate(g.labels)}
    members = []
    for tok in _split_tokens(text):
        key = tok.replace(" ", "")
        if key in by_label and not key.isdigit():
            members.append(by_label[key])
        elif key.lstrip("-").isdigit():
            v = int(key)
            if not 0 <= v < g.n:
                raise UsageError(f"vertex {v} out of range for n={g.n}")
            members.append(v)
        else:
            raise UsageError(f"unknown vertex {tok!r}")
    return g.vertex_set(members)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--budget", type=int, default=None, help="closure budget (default: ZF_BUDGET or 2^31)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--list-cap", type=int, default=10**6, help="cap on enumerated chronological lists")
    p.add_argument("--seed", type=int, default=0, help="seed for the random chronological list in trace")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings (output no longer reproducible)")


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[f for f in FAMILIES if f != "edge_list"])
    p.add_argument("--params", type=parse_params, default=())
    p.add_argument("--graph", help="edge-list file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeroforcing", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Z, I, witnesses and bound checks for one graph")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("verify", help="compare computed values with the closed forms over a parameter range")
    p.add_argument("--family", required=True, choices=[f for f in FAMILIES if f != "edge_list"])
    p.add_argument("--s", type=parse_range, required=True,
                   help="range a..b: n for one-parameter families, circle count for bouquet")
    p.add_argument("--t", type=parse_range, default=None, help="range a..b: t, or circle sizes for bouquet")
    _add_common(p)

    p = sub.add_parser("conjecture", help="exact Z(C_s x C_t) against the conjectured values")
    p.add_argument("--max", type=int, required=True, dest="max_s")
    p.add_argument("--max-t", type=int, default=None)
    p.add_argument("--min", type=int, default=3, dest="min_s")
    _add_common(p)

    p = sub.add_parser("trace", help="global forcing steps from an explicit initial set")
    _add_source(p)
    p.add_argument("--set", required=True, dest="zset")
    p.add_argument("--list", choices=("none", "canonical", "random"), default="none",
                   help="also print one chronological list of forces")
    p.add_argument("--llfc", action="store_true", help="also report min/max longest forcing chain")
    _add_common(p)
    return parser


def _load_graph(args) -> tuple[Graph, FamilySpec | None]:
    if bool(args.family) == bool(args.graph):
        raise UsageError("give exactly one of --family or --graph")
    if args.graph:
        text = Path(args.graph).read_text(encoding="utf-8")
        return parse_edge_list(text), None
    spec = FamilySpec(args.family, args.params)
    return build_family(spec), spec


def _report_row(rep) -> dict:
    d = rep.to_dict()
    exp = d["expected"] or {}
    return {
        "family": d["graph"]["family"],
        "params": " ".join(map(str, d["graph"]["params"])),
        "n": d["graph"]["n"],
        "m": d["graph"]["m"],
        "z": d["z"],
        "i": d["i"],
        "zfs_witness": " ".join(map(str, d["zfs_witness"])),
        "ii_witness": " ".join(map(str, d["ii_witness"])),
        "num_min_zfs": d["num_min_zfs"],
        "delta": d["bounds"]["delta"],
        "path_cover": d["bounds"]["path_cover"],
        "lower_bound": d["bounds"]["lower_bound"],
        "upper_bound": d["bounds"]["upper_bound"],
        "expected_z": exp.get("z"),
        "expected_i": exp.get("i"),
        "i_is_upper_bound": exp.get("i_is_upper_bound"),
        "match": d["match"],
    }


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: "" if r[k] is None else r[k] for k in columns})
    return buf.getvalue().rstrip("\n")


def cmd_compute(cfg: RunConfig, g: Graph) -> tuple[str, int]:
    rep = compute_report(g, cfg.spec, budget=cfg.budget, workers=cfg.workers, timing=cfg.timing)
    if cfg.fmt == "json":
        out = rep.to_json()
    elif cfg.fmt == "csv":
        out = _csv(REPORT_COLUMNS, [_report_row(rep)])
    else:
        name = str(cfg.spec) if cfg.spec else (cfg.graph_path or "graph")
        lab = lambda s: "{" + ", ".join(g.label(v) for v in s) + "}"
        b = rep.bounds
        lines = [
            f"graph: {name}  n={g.n} m={g.num_edges}",
            f"z={rep.zero_forcing_number}  i={rep.iteration_index}  minimum zero forcing sets: {rep.num_minimum_zfs}",
            f"zfs witness: {lab(rep.zfs_witness)}",
            f"ii witness:  {lab(rep.ii_witness)}",
            f"bounds: delta={b.delta} P={b.path_cover if b.path_cover is not None else '-'} "
            f"lower={b.lower_bound if b.lower_bound is not None else '-'} upper={b.upper_bound} "
            f"({'ok' if b.ok else 'VIOLATED'})",
        ]
        if rep.expected is not None and rep.expected.has_value:
            e = rep.expected
            rel = "<=" if e.i_is_upper_bound else "="
            lines.append(f"expected: z={e.z} i{rel}{e.i}  [{e.source}]  match={rep.match}")
        lines.extend(f"note: {n}" for n in rep.notes)
        if rep.timing:
            lines.append("timing_ms: " + ", ".join(f"{k}={v}" for k, v in rep.timing.items()))
        out = "\n".join(lines)
    return out, EXIT_MISMATCH if rep.match is False else EXIT_OK


def verify_specs(family: str, s_range, t_range) -> list[tuple[tuple[int, ...], FamilySpec | None, str]]:
    """Parameter tuples for a verify run, each with its spec or the reason it has none."""
    s_lo, s_hi = s_range
    out = []
    if family in ONE_PARAM:
        tuples = [(n,) for n in range(s_lo, s_hi + 1)]
    elif family == "bouquet":
        if t_range is None:
            raise UsageError("bouquet needs --t for the circle sizes")
        ks = range(t_range[0], t_range[1] + 1)
        tuples = [c for n in range(s_lo, s_hi + 1) for c in itertools.combinations_with_replacement(ks, n)]
    else:
        if t_range is None:
            raise UsageError(f"{family} needs --t")
        tuples = [(s, t) for s in range(s_lo, s_hi + 1) for t in range(t_range[0], t_range[1] + 1)]
    for params in tuples:
        try:
            out.append((params, FamilySpec(family, params), ""))
        except ParameterError as exc:
            out.append((params, None, str(exc)))
    return out


def cmd_verify(cfg: RunConfig, family: str) -> tuple[str, int]:
    rows = []
    code = EXIT_OK
    for params, spec, why in verify_specs(family, cfg.s_range, cfg.t_range):
        row = {"family": family, "params": " ".join(map(str, params)), "n": None, "z": None,
               "expected_z": None, "i": None, "expected_i": None, "relation": "", "status": ""}
        exp = expected_invariants(spec) if spec else None
        if exp is None or not exp.has_value:
            row["status"] = "no closed form"
            rows.append(row)
            continue
        g = build_family(spec)
        relation = "" if exp.i is None else "<=" if exp.i_is_upper_bound else "="
        row.update(n=g.n, expected_z=exp.z, expected_i=exp.i, relation=relation)
        try:
            rep = compute_report(g, spec, budget=cfg.budget, workers=cfg.workers)
        except BudgetExceeded:
            row["status"] = "skipped (budget)"
            code = max(code, EXIT_BUDGET) if code != EXIT_MISMATCH else code
            rows.append(row)
            continue
        row.update(z=rep.zero_forcing_number, i=rep.iteration_index)
        if rep.match:
            row["status"] = "match"
        else:
            row["status"] = "MISMATCH"
            code = EXIT_MISMATCH
        rows.append(row)
    if cfg.fmt == "json":
        out = json.dumps(rows, sort_keys=True)
    elif cfg.fmt == "csv":
        out = _csv(VERIFY_COLUMNS, rows)
    else:
        lines = []
        for r in rows:
            if r["z"] is None:
                lines.append(f"{family}({r['params'].replace(' ', ',')}): {r['status']}")
                continue
            i_part = f"I={r['i']}"
            if r["expected_i"] is not None:
                i_part += f" (expected {r['relation']} {r['expected_i']})"
            lines.append(
                f"{family}({r['params'].replace(' ', ',')}): Z={r['z']} (expected {r['expected_z']}) "
                f"{i_part} {r['status']}"
            )
        out = "\n".join(lines)
    return out, code


def cmd_conjecture(cfg: RunConfig, min_s: int, max_s: int, max_t: int | None) -> tuple[str, int]:
    rows = conjecture_sweep(max_s, max_t, min_s=min_s, budget=cfg.budget, workers=cfg.workers)
    if cfg.fmt == "json":
        out = json.dumps([r.__dict__ for r in rows], sort_keys=True)
    elif cfg.fmt == "csv":
        out = rows_to_csv(rows).rstrip("\n")
    else:
        out = rows_to_text(rows)
    code = EXIT_OK
    if any(r.status == "skipped" for r in rows):
        code = EXIT_BUDGET
    if any(r.status == "refuted" for r in rows):
        code = EXIT_MISMATCH
    return out, code


def _random_list(g: Graph, z: VertexSet, rng: random.Random) -> ChronologicalList:
    black, forces = z.bits, []
    while True:
        options = _valid_forces(g.nbr_bits, black)
        if not options:
            return ChronologicalList(z, tuple(forces))
        f = rng.choice(options)
        forces.append(Force(*f))
        black |= 1 << f.target


def cmd_trace(cfg: RunConfig, g: Graph, zset_text: str, list_mode: str, want_llfc: bool) -> tuple[str, int]:
    z = parse_vertex_set(g, zset_text)
    trace = run_forcing(g, z)
    forces = None
    if list_mode == "canonical":
        forces = canonical_list(g, z)
    elif list_mode == "random":
        forces = _random_list(g, z, random.Random(cfg.seed))
    chain = llfc(g, z, cfg.list_cap) if want_llfc and trace.success else None
    if cfg.fmt == "json":
        payload = json.loads(trace_json(g, trace, forces))
        if chain is not None:
            payload["llfc"] = {"min": chain.min, "max": chain.max, "stepwise": chain.stepwise,
                              "truncated": chain.truncated}
        out = json.dumps(payload, sort_keys=True)
    elif cfg.fmt == "csv":
        rows = [{"vertex": v, "label": g.label(v), "first_black": t}
                for v, t in enumerate(trace.first_black())]
        out = _csv(("vertex", "label", "first_black"), rows)
    else:
        out = render_trace(g, trace, forces)
        if chain is not None:
            out += f"\nLLFC: min={chain.min} max={chain.max} stepwise={chain.stepwise}" + (" (truncated)" if chain.truncated else "")
    return out, EXIT_OK if trace.success else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        cfg = RunConfig(
            command=args.command,
            spec=None,
            graph_path=getattr(args, "graph", None),
            s_range=getattr(args, "s", None),
            t_range=getattr(args, "t", None),
            fmt=args.format,
            budget=args.budget,
            workers=args.workers,
            list_cap=args.list_cap,
            seed=args.seed,
            timing=args.timing,
        )
        if args.command == "compute":
            g, cfg.spec = _load_graph(args)
            out, code = cmd_compute(cfg, g)
        elif args.command == "verify":
            out, code = cmd_verify(cfg, args.family)
        elif args.command == "conjecture":
            out, code = cmd_conjecture(cfg, args.min_s, args.max_s, args.max_t)
        else:
            g, cfg.spec = _load_graph(args)
            out, code = cmd_trace(cfg, g, args.zset, args.list, args.llfc)
    except (UsageError, ParameterError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except BoundViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
