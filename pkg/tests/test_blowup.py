import random

import pytest

from latdim.blowup import (
    BlowUpElement,
    BlowUpSpec,
    blowup_join,
    blowup_meet,
    build_blowup,
    parse_blowup_spec,
    proper_subset_masks,
    subset_from_mask,
    verify_blowup_structure,
)
from latdim.errors import ParseError, SpecInvalid
from latdim.lattice import boolean_lattice

from conftest import FIG3_LENGTHS

# covering pairs of the 14-element example, read off its Hasse diagram
FIG3_COVERS = {
    ("(0,0,0)", "(0,0,1)"), ("(0,0,0)", "(0,1,0)"), ("(0,0,0)", "(1,0,0)"),
    ("(1,0,0)", "(2,0,0)"), ("(2,0,0)", "(3,0,0)"),
    ("(0,0,1)", "(0,0,2)"),
    ("(3,0,0)", "(1,1,0)"), ("(3,0,0)", "(1,0,1)"),
    ("(0,1,0)", "(1,1,0)"), ("(0,1,0)", "(0,1,1)"),
    ("(0,0,2)", "(1,0,1)"), ("(0,0,2)", "(0,1,1)"),
    ("(1,1,0)", "(2,2,0)"),
    ("(1,0,1)", "(2,0,2)"), ("(2,0,2)", "(3,0,3)"),
    ("(2,2,0)", "(1,1,1)"), ("(3,0,3)", "(1,1,1)"), ("(0,1,1)", "(1,1,1)"),
}


def test_spec_validation():
    with pytest.raises(SpecInvalid):
        BlowUpSpec(1)
    with pytest.raises(SpecInvalid):
        BlowUpSpec(3, {frozenset({1}): 0})
    with pytest.raises(SpecInvalid):
        BlowUpSpec(3, {frozenset({1, 2, 3}): 2})
    with pytest.raises(SpecInvalid):
        BlowUpSpec(3, {frozenset({9}): 1})
    with pytest.raises(SpecInvalid):
        BlowUpSpec(3, {frozenset(): 1})


def test_spec_defaults_to_unit_chains():
    spec = BlowUpSpec(3)
    assert spec.proper_element_count == 6
    assert spec.lengths_canonical() == (1,) * 6


def test_unit_chain_blowup_is_boolean():
    lat = build_blowup(BlowUpSpec(3), validate=True)
    ref = boolean_lattice(3)
    assert lat.m == ref.m == 8
    # same lattice up to the label bijection
    to_ref = [ref.labels.index(lab) for lab in lat.labels]
    for x in range(lat.m):
        for y in range(lat.m):
            assert lat.leq(x, y) == ref.leq(to_ref[x], to_ref[y])


def test_fig3_element_count_and_zero_divisors(fig3_spec):
    lat = build_blowup(fig3_spec, validate=True)
    assert lat.m == 14
    assert len(lat.zero_divisors()) == 12
    assert fig3_spec.proper_element_count == 12


def test_fig3_hasse_diagram(fig3_spec):
    lat = build_blowup(fig3_spec)
    covers = {(lat.labels[x], lat.labels[y]) for x, y in lat.covers()}
    assert covers == FIG3_COVERS


def test_n2_blowup_is_two_stacked_chains():
    spec = BlowUpSpec(2, {frozenset({1}): 2, frozenset({2}): 2})
    lat = build_blowup(spec, validate=True)
    assert lat.m == 6
    # two parallel chains between the bounds: 4 zero-divisors, atoms at level 1
    assert len(lat.zero_divisors()) == 4
    assert len(lat.atoms()) == 2


def test_blowup_meet_rules(fig3_spec):
    x1 = lambda t: BlowUpElement(frozenset({1}), t)
    x12 = lambda t: BlowUpElement(frozenset({1, 2}), t)
    x13 = lambda t: BlowUpElement(frozenset({1, 3}), t)
    x23 = lambda t: BlowUpElement(frozenset({2, 3}), t)
    # same chain: minimum level
    assert blowup_meet(x1(2), x1(3), fig3_spec) == x1(2)
    # crossing chains meet at the top of the chain on the intersection
    assert blowup_meet(x12(2), x13(3), fig3_spec) == x1(3)
    assert blowup_meet(x12(1), x23(1), fig3_spec) == BlowUpElement(frozenset({2}), 1)
    # disjoint subsets meet at bottom
    assert blowup_meet(x1(1), BlowUpElement(frozenset({2}), 1), fig3_spec) == \
        BlowUpElement(frozenset(), 1)


def test_blowup_join_rules(fig3_spec):
    x1 = lambda t: BlowUpElement(frozenset({1}), t)
    x2 = BlowUpElement(frozenset({2}), 1)
    x12 = lambda t: BlowUpElement(frozenset({1, 2}), t)
    assert blowup_join(x1(3), x2, fig3_spec) == x12(1)
    assert blowup_join(x1(1), x1(2), fig3_spec) == x1(2)
    assert blowup_join(x12(1), BlowUpElement(frozenset({3}), 1), fig3_spec) == \
        BlowUpElement(frozenset({1, 2, 3}), 1)


def test_blowup_meet_join_agree_with_tables(fig3_spec):
    lat = build_blowup(fig3_spec)
    elems = fig3_spec.elements()
    index = {e: i for i, e in enumerate(elems)}
    for a in elems:
        for b in elems:
            got_meet = index[blowup_meet(a, b, fig3_spec)]
            got_join = index[blowup_join(a, b, fig3_spec)]
            assert got_meet == lat.meet(index[a], index[b])
            assert got_join == lat.join(index[a], index[b])


def test_annihilator_constant_on_chains(fig3_spec):
    lat = build_blowup(fig3_spec)
    elems = fig3_spec.elements()
    by_subset = {}
    for i, e in enumerate(elems):
        by_subset.setdefault(e.subset, []).append(i)
    for members in by_subset.values():
        assert len({lat.annihilator_mask(x) for x in members}) == 1


def test_verify_structure_fig3(fig3_spec):
    lat = build_blowup(fig3_spec)
    report = verify_blowup_structure(lat, fig3_spec)
    assert report.quotient_is_boolean
    assert report.class_count == 8
    assert lat.is_zero_distributive()
    assert lat.is_atomic()


def test_verify_structure_unit_chains():
    spec = BlowUpSpec(3)
    report = verify_blowup_structure(build_blowup(spec), spec)
    assert report.pseudocomplemented and report.dual_pseudocomplemented


def test_verify_structure_random_n4():
    rng = random.Random(11)
    for _ in range(3):
        lengths = {subset_from_mask(m): rng.randint(1, 3)
                   for m in proper_subset_masks(4)}
        spec = BlowUpSpec(4, lengths)
        lat = build_blowup(spec, validate=True)
        report = verify_blowup_structure(lat, spec)
        assert report.atom_pseudocomplements_ok


def test_zero_divisor_count_formula():
    rng = random.Random(5)
    for n in (3, 4):
        lengths = {subset_from_mask(m): rng.randint(1, 3)
                   for m in proper_subset_masks(n)}
        spec = BlowUpSpec(n, lengths)
        lat = build_blowup(spec)
        assert len(lat.zero_divisors()) == spec.proper_element_count


FIG3_TEXT = """\
# worked example
blowup n=3
chain 1 : 3
chain 2 : 1
chain 3 : 2
chain 1,2 : 2
chain 1,3 : 3
chain 2,3 : 1
"""


def test_parse_blowup_spec(fig3_spec):
    spec = parse_blowup_spec(FIG3_TEXT)
    assert spec == fig3_spec
    assert spec.length(frozenset({1, 3})) == 3
    assert spec.length(frozenset({2})) == 1


def test_parse_blowup_spec_errors():
    with pytest.raises(ParseError):
        parse_blowup_spec("chain 1 : 2\n")
    with pytest.raises(ParseError):
        parse_blowup_spec("blowup n=3\nchain 0,9 : 2\n")
    with pytest.raises(ParseError):
        parse_blowup_spec("blowup n=3\nchain 1,2,3 : 2\n")
    with pytest.raises(ParseError):
        parse_blowup_spec("blowup n=3\nchain 1 : 2\nchain 1 : 3\n")
    with pytest.raises(ParseError):
        parse_blowup_spec("blowup n=1\n")
