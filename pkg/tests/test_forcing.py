import json
import random

import pytest

from zeroforcing.families import family
from zeroforcing.forcing import (
    ChronologicalList,
    Force,
    NotZeroForcingError,
    canonical_list,
    closure,
    color_change_step,
    enumerate_chronological_lists,
    extract_maximal_chains,
    generic_kernel_rounds,
    generic_matrix,
    is_zero_forcing_set,
    llfc,
    longest_chain,
    random_sequential_closure,
    render_trace,
    reversal,
    run_forcing,
    trace_json,
)
from zeroforcing.graph import VertexSet

from oracles import adjacency, global_step


def labelled(g, *labels):
    """Vertex set from the 1-based labels used for C_3 x K_2 in the worked example."""
    return g.vertex_set(v - 1 for v in labels)


def one_based(vs):
    return {v + 1 for v in vs}


@pytest.fixture
def c3k2():
    return family("cycle_x_complete", 3, 2)


def test_step_examples(c3k2):
    assert color_change_step(c3k2, labelled(c3k2, 2, 4, 6)).is_full()
    assert one_based(color_change_step(c3k2, labelled(c3k2, 3, 4, 6))) == {2, 3, 4, 6}
    full = VertexSet.full(6)
    assert color_change_step(c3k2, full) == full


def test_step_agrees_with_oracle():
    rng = random.Random(3)
    for name, *p in [("grid", 3, 4), ("bouquet", 2, 3), ("king_grid", 3, 3), ("cycle", 7)]:
        g = family(name, *p)
        adj = adjacency(g)
        for _ in range(50):
            s = {v for v in range(g.n) if rng.random() < 0.4}
            assert set(color_change_step(g, g.vertex_set(s))) == global_step(adj, s)


def test_run_forcing_examples(c3k2):
    tr = run_forcing(c3k2, labelled(c3k2, 3, 4, 6))
    assert tr.success and tr.iterations == 2
    assert [one_based(d) for d in tr.derived] == [{2}, {1, 5}]
    tr = run_forcing(c3k2, labelled(c3k2, 2, 4, 6))
    assert tr.iterations == 1 and [one_based(d) for d in tr.derived] == [{1, 3, 5}]
    for n in range(2, 9):
        tr = run_forcing(family("path", n), VertexSet.of([0], n))
        assert tr.success and tr.iterations == n - 1
    tr = run_forcing(family("cycle", 4), VertexSet.of([0, 2], 4))
    assert not tr.success and tr.final.to_list() == [0, 2]
    assert tr.to_dict()["white"] == [1, 3]


def test_full_set_has_zero_iterations():
    g = family("grid", 3, 3)
    tr = run_forcing(g, VertexSet.full(9))
    assert tr.success and tr.iterations == 0 and tr.first_black() == [0] * 9


def test_closure_and_zfs(c3k2):
    assert closure(c3k2, labelled(c3k2, 3, 4, 6)).is_full()
    assert is_zero_forcing_set(c3k2, labelled(c3k2, 2, 4, 6))
    assert not is_zero_forcing_set(c3k2, labelled(c3k2, 1, 2))


def test_chronological_list_examples(c3k2):
    res = enumerate_chronological_lists(family("path", 3), VertexSet.of([0], 3))
    assert [l.forces for l in res.lists] == [(Force(0, 1), Force(1, 2))]
    assert not res.truncated
    res = enumerate_chronological_lists(c3k2, labelled(c3k2, 2, 4, 6))
    assert res.lists and all(len(l.forces) == 3 and l.is_valid(c3k2) for l in res.lists)
    assert all(len({w for _, w in l.forces}) == 3 for l in res.lists)
    res = enumerate_chronological_lists(family("complete", 3), VertexSet.of([0, 1], 3))
    assert [l.forces for l in res.lists] == [(Force(0, 2),), (Force(1, 2),)]


def test_enumeration_cap_and_errors():
    g = family("grid", 3, 3)
    res = enumerate_chronological_lists(g, g.vertex_set([0, 3, 6]), cap=2)
    assert res.truncated and len(res.lists) == 2
    with pytest.raises(NotZeroForcingError):
        enumerate_chronological_lists(family("cycle", 4), VertexSet.of([0], 4))
    with pytest.raises(NotZeroForcingError):
        llfc(family("cycle", 4), VertexSet.of([0], 4))


def test_chains_and_reversal(c3k2):
    lst = ChronologicalList(VertexSet.of([0], 3), (Force(0, 1), Force(1, 2)))
    assert extract_maximal_chains(lst) == [(0, 1, 2)]
    assert reversal(lst).to_list() == [2]
    assert longest_chain(lst) == 2
    z = labelled(c3k2, 2, 4, 6)
    lst = ChronologicalList(z, (Force(1, 0), Force(3, 2), Force(5, 4)))
    assert lst.is_valid(c3k2)
    assert [tuple(v + 1 for v in c) for c in extract_maximal_chains(lst)] == [(2, 1), (4, 3), (6, 5)]
    assert one_based(reversal(lst)) == {1, 3, 5}


def test_chain_with_idle_start_vertex():
    # z = {0, 3} on P_4: one of the ends never forces in a list that goes 0->1->2
    g = family("path", 4)
    lst = ChronologicalList(g.vertex_set([0, 3]), (Force(0, 1), Force(1, 2)))
    assert lst.is_valid(g)
    assert extract_maximal_chains(lst) == [(0, 1, 2), (3,)]
    assert reversal(lst).to_list() == [2, 3]


def test_llfc_examples(c3k2):
    # The worked values 1 and 2 are those of the global-step list; other one-at-a-time
    # lists can chain further (e.g. 4->2, 2->1, 1->5 from {3,4,6}) or less far.
    r = llfc(c3k2, labelled(c3k2, 2, 4, 6))
    assert (r.stepwise, r.min, r.max, r.truncated) == (1, 1, 2, False)
    r = llfc(c3k2, labelled(c3k2, 3, 4, 6))
    assert (r.stepwise, r.min, r.max) == (2, 1, 3)
    r = llfc(family("path", 4), VertexSet.of([0], 4))
    assert (r.stepwise, r.min, r.max) == (3, 3, 3)


def test_llfc_matches_enumeration():
    g = family("grid", 3, 3)
    z = g.vertex_set([0, 3, 6])
    res = enumerate_chronological_lists(g, z)
    lengths = [longest_chain(l) for l in res.lists]
    r = llfc(g, z)
    assert (r.min, r.max, r.lists) == (min(lengths), max(lengths), len(lengths))


def test_generic_kernel_examples(c3k2):
    assert generic_kernel_rounds(c3k2, labelled(c3k2, 2, 4, 6)) == (1, True)
    assert generic_kernel_rounds(c3k2, labelled(c3k2, 3, 4, 6)) == (2, True)
    assert generic_kernel_rounds(family("cycle", 4), VertexSet.of([0], 4))[1] is False


def test_generic_matrix_names(c3k2):
    m = generic_matrix(c3k2)
    assert m[(0, 0)] == "a_1" and m[(5, 5)] == "a_6"
    assert m[(0, 1)] == m[(1, 0)] == "c_1"
    assert (0, 3) not in m
    assert len({v for k, v in m.items() if k[0] != k[1]}) == 9


def test_canonical_list_valid():
    g = family("cycle_x_cycle", 5, 5)
    at = lambda i, j: (i - 1) * 5 + (j - 1)
    z = g.vertex_set(at(i, j) for i in (1, 2) for j in range(1, 6) if (i, j) != (1, 3))
    lst = canonical_list(g, z)
    assert lst.is_valid(g) and len(lst.forces) == 25 - 9


def test_random_sequential_closure_is_confluent():
    g = family("king_grid", 3, 4)
    rng = random.Random(11)
    for _ in range(100):
        z = g.vertex_set(v for v in range(g.n) if rng.random() < 0.3)
        assert random_sequential_closure(g, z, rng) == closure(g, z) == run_forcing(g, z).final


def test_render_grid_and_json(c3k2):
    z = labelled(c3k2, 3, 4, 6)
    tr = run_forcing(c3k2, z)
    text = render_trace(c3k2, tr, canonical_list(c3k2, z))
    assert text.splitlines()[:3] == ["2 1", "0 0", "2 0"]
    assert "D^1 = {(1,2)}" in text
    assert "success: true  iterations: 2" in text
    data = json.loads(trace_json(c3k2, tr))
    assert data["derived"] == [[1], [0, 4]] and data["iterations"] == 2


def test_render_labels_without_grid():
    g = family("bouquet", 2, 2)
    tr = run_forcing(g, g.vertex_set([0, 1]))
    text = render_trace(g, tr)
    assert "v: 0" in text and "success: false" in text and "white:" in text
