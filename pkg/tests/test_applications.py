import pytest

from latdim.applications import (
    PIRSpec,
    ReducedRingSpec,
    VectorSpaceSpec,
    blowup_equivalence_check,
    build_component_graph,
    build_intersection_graph,
    component_closed_form,
    component_graph,
    component_graph_matches_vector_model,
    component_graph_vector_model,
    equivalent_blowup_spec,
    intersection_closed_form,
    intersection_graph,
    maximal_graph,
    parse_app_spec,
    pir_ideal_lattice,
    reduced_ring_graphs,
    reduced_zero_divisor_count,
    total_graph,
)
from latdim.blowup import BlowUpSpec
from latdim.errors import ParseError, PreconditionFailed, SpecInvalid, TooLarge
from latdim.graphs import complete_graph, disjoint_union
from latdim.solvers import strong_metric_dimension_bruteforce
from latdim.strong_resolving import strong_resolving_graph

from conftest import FIG3_LENGTHS


def test_spec_validation():
    with pytest.raises(SpecInvalid):
        ReducedRingSpec((2, 1))
    with pytest.raises(SpecInvalid):
        ReducedRingSpec(())
    with pytest.raises(SpecInvalid):
        PIRSpec((0,))
    with pytest.raises(SpecInvalid):
        VectorSpaceSpec(3, 1)


# reduced rings -------------------------------------------------------------------

def test_reduced_counts():
    assert reduced_zero_divisor_count(ReducedRingSpec((2, 2, 2))) == 6
    assert reduced_zero_divisor_count(ReducedRingSpec((3, 3, 3))) == 18
    assert reduced_zero_divisor_count(ReducedRingSpec((2, 2, 2, 2))) == 14


def test_reduced_ring_graphs_boolean():
    g, gc, rep = reduced_ring_graphs(ReducedRingSpec((2, 2, 2)))
    assert gc.n == 6
    assert rep.sdim == 3


def test_reduced_ring_graphs_333():
    _, gc, rep = reduced_ring_graphs(ReducedRingSpec((3, 3, 3)))
    assert gc.n == 18
    assert rep.sdim == 15


def test_reduced_needs_three_factors():
    with pytest.raises(PreconditionFailed):
        reduced_ring_graphs(ReducedRingSpec((3, 3)))


# blow-up equivalence ---------------------------------------------------------------

def test_equivalent_blowup_lengths():
    spec = equivalent_blowup_spec(ReducedRingSpec((3, 3)))
    assert spec.length(frozenset({1})) == 2
    assert spec.length(frozenset({2})) == 2
    spec = equivalent_blowup_spec(ReducedRingSpec((3, 2, 2)))
    assert spec.length(frozenset({1})) == 2
    assert spec.length(frozenset({2})) == 1
    assert spec.length(frozenset({1, 2})) == 2
    assert spec.length(frozenset({2, 3})) == 1


def test_blowup_equivalence_check_matches():
    for sizes in ((2, 2, 2), (3, 3), (3, 2, 2)):
        report = blowup_equivalence_check(ReducedRingSpec(sizes))
        assert report.matched
    report = blowup_equivalence_check(ReducedRingSpec((3, 3)))
    assert report.subset_sizes == {frozenset({1}): 2, frozenset({2}): 2}


# total and maximal graphs ----------------------------------------------------------

def test_total_graph_unit_chains():
    g, rep = total_graph(BlowUpSpec(3))
    assert g.n == 6
    assert rep.sdim == 3


def test_total_and_maximal_share_the_graph(fig3_spec):
    g1, r1 = total_graph(fig3_spec)
    g2, r2 = maximal_graph(fig3_spec)
    assert g1 == g2
    assert r1.sdim == r2.sdim == 9


def test_total_graph_needs_three_atoms():
    with pytest.raises(PreconditionFailed):
        total_graph(BlowUpSpec(2))


# intersection graphs ---------------------------------------------------------------

def test_pir_ideal_lattice_shape():
    lat = pir_ideal_lattice(PIRSpec((1, 1)))
    assert lat.m == 9  # two 3-chains


def test_intersection_graph_two_factors():
    ig, rep = intersection_graph(PIRSpec((1, 1)))
    assert ig.n == 7
    assert rep.sdim == 5
    assert rep.notes == ()
    assert strong_metric_dimension_bruteforce(ig) == 5


def test_intersection_graph_clique_size_from_lattice():
    ig, t = build_intersection_graph(PIRSpec((1, 1)))
    assert t == 3
    ig, t = build_intersection_graph(PIRSpec((2, 1)))
    assert t == 5


def test_intersection_graph_three_factors():
    ig, rep = intersection_graph(PIRSpec((1, 1, 1)))
    assert ig.n == 25
    assert rep.sdim == 21
    assert intersection_closed_form(PIRSpec((1, 1, 1))) == 21


def test_intersection_graph_mixed_factors():
    ig, rep = intersection_graph(PIRSpec((2, 1)))
    assert ig.n == 10
    assert rep.sdim == 8


def test_intersection_sr_decomposition_three_factors():
    # with at least three chain factors, the core complement is connected
    # and SR(join) splits as SR(core) + clique
    from latdim.strong_resolving import sr_join_direct, sr_of_join_decomposition
    from latdim.zerodiv import complement_zero_divisor_graph

    spec = PIRSpec((1, 1, 1))
    core = complement_zero_divisor_graph(pir_ideal_lattice(spec))
    _, t = build_intersection_graph(spec)
    assert sr_join_direct(core, t) == sr_of_join_decomposition(core, t)


def test_intersection_needs_two_factors():
    with pytest.raises(PreconditionFailed):
        intersection_graph(PIRSpec((2,)))


def test_two_factor_sr_shape():
    # the two-factor intersection graph splits as two cliques: the SR graph
    # of the 7-vertex example is K4 + K3
    ig, _ = build_intersection_graph(PIRSpec((1, 1)))
    sr = strong_resolving_graph(ig)
    expect = disjoint_union(complete_graph(4, list("abcd")), complete_graph(3))
    assert sr.graph.adj == expect.adj


# component graphs ------------------------------------------------------------------

def test_component_graph_small():
    ig, rep = component_graph(VectorSpaceSpec(3, 2))
    assert ig.n == 7
    assert rep.sdim == 3
    assert strong_metric_dimension_bruteforce(ig) == 3


def test_component_graph_q3():
    ig, rep = component_graph(VectorSpaceSpec(3, 3))
    assert ig.n == 26
    assert rep.sdim == 22
    assert component_closed_form(VectorSpaceSpec(3, 3)) == 22


def test_component_graph_n4():
    ig, rep = component_graph(VectorSpaceSpec(4, 2))
    assert ig.n == 15
    assert rep.sdim == 7
    assert strong_metric_dimension_bruteforce(ig, cap=15) == 7


def test_component_graph_needs_dimension_three():
    with pytest.raises(PreconditionFailed):
        component_graph(VectorSpaceSpec(2, 2))


def test_component_graph_clique_size():
    _, t = build_component_graph(VectorSpaceSpec(3, 3))
    assert t == 8


def test_vector_model_oracle():
    direct = component_graph_vector_model(VectorSpaceSpec(3, 2))
    assert direct.n == 7
    # skeleton rule: adjacent iff supports intersect
    assert direct.has_edge(direct.labels.index("(1,0,0)"),
                           direct.labels.index("(1,1,0)"))
    assert not direct.has_edge(direct.labels.index("(1,0,0)"),
                               direct.labels.index("(0,1,0)"))
    for spec in (VectorSpaceSpec(3, 2), VectorSpaceSpec(3, 3), VectorSpaceSpec(4, 3)):
        assert component_graph_matches_vector_model(spec)
    with pytest.raises(TooLarge):
        component_graph_vector_model(VectorSpaceSpec(7, 4))


# inline specs ----------------------------------------------------------------------

def test_parse_app_specs():
    assert parse_app_spec("reduced", "q=2,2,2") == ReducedRingSpec((2, 2, 2))
    assert parse_app_spec("reduced", "reduced q=3,3") == ReducedRingSpec((3, 3))
    assert parse_app_spec("pir", "n=1,1") == PIRSpec((1, 1))
    assert parse_app_spec("vspace", "n=3 q=2") == VectorSpaceSpec(3, 2)
    assert parse_app_spec("vspace", "q=2 n=3") == VectorSpaceSpec(3, 2)


def test_parse_app_spec_errors():
    with pytest.raises(ParseError):
        parse_app_spec("reduced", "")
    with pytest.raises(ParseError):
        parse_app_spec("reduced", "n=2,2")
    with pytest.raises(ParseError):
        parse_app_spec("vspace", "n=3")
    with pytest.raises(ParseError):
        parse_app_spec("pir", "n=a,b")
    with pytest.raises(ParseError):
        parse_app_spec("reduced", "q=2,2 extra=1")
