import random

import pytest

from latdim.blowup import BlowUpSpec, build_blowup
from latdim.errors import Disconnected, PreconditionFailed, TooLarge
from latdim.graphs import SimpleGraph, complete_graph, join_complete
from latdim.lattice import boolean_lattice
from latdim.solvers import (
    closed_form_report,
    closed_form_sdim_blowup,
    independence_number,
    masks_by_popcount,
    max_independent_set,
    metric_dimension_bruteforce,
    strong_metric_dimension,
    strong_metric_dimension_bruteforce,
    vertex_cover_number,
)
from latdim.strong_resolving import is_strong_resolving_set, strong_resolving_graph
from latdim.zerodiv import complement_zero_divisor_graph

from conftest import FIG3_LENGTHS, brute_force_mis_size


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return SimpleGraph(n, edges)


def random_connected_graph(n, p, seed):
    rng = random.Random(seed)
    edges = {(i, i + 1) for i in range(n - 1)}
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return SimpleGraph(n, sorted(edges))


# independent set / vertex cover --------------------------------------------------

def test_mis_against_subset_scan():
    for seed in range(40):
        g = random_graph(seed % 6 + 4, 0.15 + (seed % 7) * 0.1, seed)
        mis = max_independent_set(g)
        assert len(mis) == brute_force_mis_size(g)
        mask = 0
        for v in mis:
            assert g.adj[v] & mask == 0
            mask |= 1 << v


def test_mis_denser_medium_graphs():
    for seed in range(6):
        g = random_graph(13, 0.5, seed=100 + seed)
        assert independence_number(g) == brute_force_mis_size(g)


def test_mis_lexicographically_least():
    # P4 has optima {0,2}, {0,3}, {1,3}; the least is {0,2}
    p4 = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
    assert max_independent_set(p4) == [0, 2]
    assert max_independent_set(complete_graph(5)) == [0]
    assert max_independent_set(SimpleGraph(4)) == [0, 1, 2, 3]
    assert max_independent_set(SimpleGraph(0)) == []


def test_mis_of_boolean3_sr_graph():
    sr = strong_resolving_graph(complement_zero_divisor_graph(boolean_lattice(3)))
    mis = max_independent_set(sr.graph)
    assert len(mis) == 3
    assert vertex_cover_number(sr.graph) == 3


def test_gallai_identity_on_samples():
    for seed in range(15):
        g = random_graph(9, 0.4, seed=200 + seed)
        assert independence_number(g) + vertex_cover_number(g) == g.n


# strong metric dimension ----------------------------------------------------------

def test_sdim_boolean3():
    gc = complement_zero_divisor_graph(boolean_lattice(3))
    rep = strong_metric_dimension(gc, "gc")
    assert rep.sdim == 3
    assert rep.alpha == 3 and rep.beta == 3
    assert rep.alpha + rep.beta == 6
    assert len(rep.witness) == 3
    assert is_strong_resolving_set(gc, rep.witness)
    assert rep.method == "sr_vertex_cover"


def test_sdim_complete_graphs():
    for t in (2, 3, 5, 7):
        assert strong_metric_dimension(complete_graph(t)).sdim == t - 1


def test_sdim_fig3(fig3_spec):
    gc = complement_zero_divisor_graph(build_blowup(fig3_spec))
    rep = strong_metric_dimension(gc, "fig3")
    assert rep.sdim == 9
    assert rep.beta == 3
    assert is_strong_resolving_set(gc, rep.witness)


def test_sdim_trivial_graphs():
    assert strong_metric_dimension(SimpleGraph(1)).sdim == 0
    assert strong_metric_dimension(complete_graph(2)).sdim == 1
    with pytest.raises(Disconnected):
        strong_metric_dimension(SimpleGraph(2))


def test_sdim_bruteforce_known_values():
    p3 = SimpleGraph(3, [(0, 1), (1, 2)])
    c4 = SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert strong_metric_dimension_bruteforce(p3) == 1
    assert strong_metric_dimension_bruteforce(c4) == 2
    gc = complement_zero_divisor_graph(boolean_lattice(3))
    assert strong_metric_dimension_bruteforce(gc) == 3


def test_sdim_bruteforce_guards():
    with pytest.raises(TooLarge):
        strong_metric_dimension_bruteforce(SimpleGraph(20), cap=16)
    with pytest.raises(Disconnected):
        strong_metric_dimension_bruteforce(SimpleGraph(3))


def test_solver_equals_bruteforce_on_connected_samples():
    for seed in range(12):
        g = random_connected_graph(seed % 4 + 6, 0.3, seed=300 + seed)
        assert strong_metric_dimension(g).sdim == strong_metric_dimension_bruteforce(g)


def test_solver_equals_bruteforce_on_join_graphs():
    g = join_complete(SimpleGraph(5, [(0, 1), (2, 3)]), 2)
    assert strong_metric_dimension(g).sdim == strong_metric_dimension_bruteforce(g)


# metric dimension -----------------------------------------------------------------

def test_metric_dimension_known_values():
    assert metric_dimension_bruteforce(complete_graph(4)) == 3
    assert metric_dimension_bruteforce(SimpleGraph(3, [(0, 1), (1, 2)])) == 1
    gc = complement_zero_divisor_graph(boolean_lattice(3))
    dim = metric_dimension_bruteforce(gc)
    assert dim == 2
    assert dim <= strong_metric_dimension_bruteforce(gc)


def test_metric_dimension_guards():
    with pytest.raises(TooLarge):
        metric_dimension_bruteforce(SimpleGraph(25), cap=16)
    with pytest.raises(Disconnected):
        metric_dimension_bruteforce(SimpleGraph(2))


def test_dim_le_sdim_on_samples():
    for seed in range(10):
        g = random_connected_graph(7, 0.35, seed=400 + seed)
        assert metric_dimension_bruteforce(g) <= strong_metric_dimension_bruteforce(g)


# closed form ----------------------------------------------------------------------

def test_closed_form_values(fig3_spec):
    assert closed_form_sdim_blowup(BlowUpSpec(3)) == 3
    assert closed_form_sdim_blowup(fig3_spec) == 9
    assert closed_form_sdim_blowup(BlowUpSpec(4)) == 7
    with pytest.raises(PreconditionFailed):
        closed_form_sdim_blowup(BlowUpSpec(2))


def test_closed_form_report(fig3_spec):
    rep = closed_form_report(fig3_spec, "fig3")
    assert rep.sdim == rep.alpha == 9
    assert rep.beta == 3
    assert rep.method == "closed_form"


# report serialization --------------------------------------------------------------

def test_report_line_and_table():
    gc = complement_zero_divisor_graph(boolean_lattice(3))
    rep = strong_metric_dimension(gc, "gc(n=3)")
    line = rep.to_line()
    assert line.startswith("sdim=3 method=sr_vertex_cover alpha=3 beta=3 witness=")
    assert ",".join(str(v) for v in rep.witness) in line
    table = rep.to_table()
    assert "gc(n=3)" in table and "sdim" in table


def test_masks_by_popcount_order():
    masks = list(masks_by_popcount(4, 2))
    assert masks == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
    assert list(masks_by_popcount(3, 0)) == [0]
    assert list(masks_by_popcount(2, 3)) == []
