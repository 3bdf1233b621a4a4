import json
import random
from math import ceil

import pytest

from zeroforcing.expected import (
    NoConstruction,
    conjectured_cycle_product_z,
    expected_invariants,
    proof_witness,
    proof_witnesses,
)
from zeroforcing.families import FamilySpec, family
from zeroforcing.forcing import run_forcing
from zeroforcing.graph import Graph, parse_edge_list
from zeroforcing.invariants import (
    BoundViolation,
    SizeLimitError,
    check_bounds,
    compute_report,
    path_cover_number,
    perturbation_check,
)
from zeroforcing.search import solve

from oracles import brute_force, path_cover_brute


def spec(name, *p):
    return FamilySpec(name, p)


@pytest.mark.parametrize("fx", [
    ("path", 6), ("cycle", 6), ("complete", 5), ("complete_bipartite", 1, 3),
    ("complete_bipartite", 2, 3), ("grid", 3, 3), ("cycle_x_complete", 3, 2),
    ("bouquet", 2, 2, 3), ("king_grid", 2, 4), ("triangular_grid", 2, 4),
], ids=str)
def test_path_cover_matches_brute_force(fx):
    g = family(*fx)
    assert path_cover_number(g) == path_cover_brute(g)


def test_path_cover_examples():
    assert path_cover_number(family("path", 7)) == 1
    star = family("complete_bipartite", 1, 3)
    assert path_cover_number(star) == 2 == solve(star).z
    c3k2 = family("cycle_x_complete", 3, 2)
    assert path_cover_number(c3k2) <= solve(c3k2).z == 3
    with pytest.raises(SizeLimitError):
        path_cover_number(family("path", 17))


def test_path_cover_equals_z_on_random_trees():
    import networkx as nx

    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 12)
        t = nx.random_labeled_tree(n, seed=rng.randrange(10**6)) if hasattr(nx, "random_labeled_tree") \
            else nx.random_tree(n, seed=rng.randrange(10**6))
        g = Graph.from_edges(n, t.edges())
        assert path_cover_number(g) == solve(g).z


def test_bound_examples():
    g = family("grid", 5, 3)
    p = solve(g)
    rep = check_bounds(g, p.z, p.iteration_index)
    assert p.iteration_index == 4 == g.n // p.z - 1 == rep.lower_bound
    k = family("complete", 6)
    rep = check_bounds(k, 5, 1)
    assert rep.lower_bound == 1 and rep.upper_bound == 1 and rep.ok
    # rational comparison: 7/3 - 1 = 4/3, so I = 1 is too small
    with pytest.raises(BoundViolation):
        check_bounds(family("path", 7), 3, 1)
    assert not check_bounds(family("path", 7), 3, 1, strict=False).ok
    assert check_bounds(family("path", 7), 3, 2).lower_bound == 2


def test_bounds_skip_lower_when_edgeless():
    g = Graph(3, [[], [], []])
    rep = check_bounds(g, 3, 0)
    assert rep.lower_bound is None and rep.ok


def test_perturbation_examples():
    rep = perturbation_check(family("cycle", 4))
    assert rep.ok and {z for _, z, _ in rep.edge_rows} == {1}
    rep = perturbation_check(family("complete", 4))
    assert rep.z == 3 and {z for _, z, _ in rep.vertex_rows} == {2}
    rep = perturbation_check(family("path", 4))
    assert dict(((e, z) for e, z, _ in rep.edge_rows))[(1, 2)] == 2
    rep = perturbation_check(family("complete_bipartite", 1, 3))
    assert rep.ok


@pytest.mark.parametrize("s,expected", [
    (spec("cycle_x_path", 6, 2), (4, 2)),
    (spec("complete_x_complete", 3, 4), (7, 2)),
    (spec("bouquet", 2, 2), (3, 1)),
    (spec("complete_bipartite", 1, 5), (4, 2)),
    (spec("complete_bipartite", 4, 5), (7, 1)),
    (spec("cycle_x_complete", 5, 3), (6, 2)),
    (spec("cycle_x_cycle", 3, 3), (5, 2)),
])
def test_expected_examples(s, expected):
    e = expected_invariants(s)
    assert (e.z, e.i) == expected and not e.i_is_upper_bound


def test_expected_bounds_and_missing_values():
    e = expected_invariants(spec("triangular_grid", 3, 5))
    assert (e.z, e.i, e.i_is_upper_bound) == (3, 9, True)
    e = expected_invariants(spec("king_grid", 3, 6))
    assert (e.z, e.i, e.i_is_upper_bound) == (8, 5, True)
    e = expected_invariants(spec("cycle_x_cycle", 5, 7))
    assert e.z_is_conjecture and e.i is None and e.z == 10
    assert conjectured_cycle_product_z(5, 5) == 9 and conjectured_cycle_product_z(6, 6) == 12
    e = expected_invariants(FamilySpec("edge_list", (), source="x"))
    assert not e.has_value and e.matches(3, 1) is None


def test_proof_witness_examples():
    w = proof_witness(spec("complete_x_complete", 5, 4))
    assert len(w.zset) == 13 and w.iterations == 2 and w.exact
    w = proof_witness(spec("cycle_x_cycle", 5, 5))
    assert len(w.zset) == 9 and w.verify()
    g = family("cycle_x_cycle", 5, 5)
    tr = run_forcing(g, w.zset)
    cols = {(i - 1) * 5 + (j - 1) for i in range(1, 6) for j in (1, 5)}
    assert cols <= set(tr.layers[2])
    for t in range(2, 7):
        w = proof_witness(spec("king_grid", 3, t))
        assert len(w.zset) == t + 2 and not w.exact and w.iterations == t - 1
        assert run_forcing(family("king_grid", 3, t), w.zset).iterations <= t - 1
    w = proof_witness(spec("bouquet", 2, 3, 4))
    assert len(w.zset) == 4 and w.iterations == 3
    with pytest.raises(NoConstruction):
        proof_witnesses(spec("cycle_x_cycle", 4, 5))


@pytest.mark.parametrize("s", [
    spec("path", 5), spec("cycle", 7), spec("complete", 4), spec("complete_bipartite", 2, 4),
    spec("complete_bipartite", 1, 4), spec("grid", 3, 5), spec("grid", 5, 3), spec("complete_x_path", 3, 4),
    spec("cycle_x_path", 6, 2), spec("cycle_x_path", 4, 3), spec("cycle_x_complete", 5, 2),
    spec("complete_x_complete", 3, 4), spec("triangular_grid", 3, 4), spec("triangular_grid", 4, 3),
    spec("king_grid", 4, 3), spec("king_grid", 4, 4), spec("bouquet", 4), spec("bouquet", 2, 2, 5),
], ids=str)
def test_witnesses_sized_and_valid(s):
    exp = expected_invariants(s)
    for w in proof_witnesses(s):
        assert w.verify()
        assert len(w.zset) == exp.z


def test_report_json_and_match():
    g = family("cycle", 7)
    rep = compute_report(g, spec("cycle", 7))
    d = json.loads(rep.to_json())
    assert d["z"] == 2 and d["i"] == 3 and d["match"] is True
    assert set(d) == {"graph", "z", "i", "zfs_witness", "ii_witness", "num_min_zfs", "bounds",
                      "expected", "match", "notes", "timing_ms"}
    assert d["graph"] == {"family": "cycle", "params": [7], "n": 7, "m": 7}
    assert d["timing_ms"] is None
    assert compute_report(g, timing=True).timing["search"] >= 0


def test_report_edge_list_and_disconnected():
    g = parse_edge_list("4 2\n0 1\n2 3\n")
    rep = compute_report(g)
    assert rep.zero_forcing_number == 2 and rep.match is None
    assert rep.to_dict()["graph"]["family"] == "edge_list"
    assert any("disconnected" in n for n in rep.notes)


def test_report_matches_oracle_values():
    for name, *p in [("bouquet", 2, 3), ("grid", 2, 4), ("complete_x_path", 2, 3)]:
        g = family(name, *p)
        rep = compute_report(g, FamilySpec(name, tuple(p)))
        z, i, sets = brute_force(g)
        assert (rep.zero_forcing_number, rep.iteration_index, rep.num_minimum_zfs) == (z, i, len(sets))
        assert rep.match
