"""Theorem-verification battery over corpora of blow-up specs.

Each check pits a structural claim or closed formula against an
independent computation on a concrete lattice: closed-form strong
resolving graphs against the distance-based construction, dimension
formulas against the exact solver and the brute-force oracle, and so
on.  Corpora enumerate all specs within bounds when small and otherwise
draw a seeded sample, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .blowup import BlowUpElement, BlowUpSpec, build_blowup, proper_subset_masks, subset_from_mask, verify_blowup_structure
from .errors import LatdimError
from .graphs import SimpleGraph, diameter, is_connected, join_complete
from .solvers import (
    closed_form_sdim_blowup,
    max_independent_set,
    metric_dimension_bruteforce,
    strong_metric_dimension,
    strong_metric_dimension_bruteforce,
)
from .strong_resolving import (
    blowup_sr_closed_form,
    sr_join_direct,
    sr_of_join_decomposition,
    strong_resolving_graph,
)
from .zerodiv import check_connectivity_theorem, complement_zero_divisor_graph


@dataclass(frozen=True)
class CheckResult:
    case: str
    check: str
    passed: bool
    detail: str = ""


# corpus generation ---------------------------------------------------------------

def enumerate_blowup_specs(n, len_max):
    """All specs with chain lengths in 1..len_max, in deterministic order
    (lengths in canonical subset order, last subset varying fastest)."""
    masks = proper_subset_masks(n)
    subsets = [subset_from_mask(m) for m in masks]
    for lengths in itertools.product(range(1, len_max + 1), repeat=len(subsets)):
        yield BlowUpSpec(n, dict(zip(subsets, lengths)))


def spec_from_index(n, len_max, index):
    """Decode a spec from its position in the enumeration order."""
    masks = proper_subset_masks(n)
    digits = []
    for _ in masks:
        digits.append(index % len_max)
        index //= len_max
    digits.reverse()
    subsets = [subset_from_mask(m) for m in masks]
    return BlowUpSpec(n, {s: d + 1 for s, d in zip(subsets, digits)})


def corpus_specs(n, len_max, seed, limit=100):
    """Exhaustive corpus when it fits within the limit, else a sorted
    seeded sample of enumeration indices."""
    total = len_max ** len(proper_subset_masks(n))
    if total <= limit:
        return list(enumerate_blowup_specs(n, len_max))
    rng = random.Random(seed)
    picks = sorted(rng.sample(range(total), limit))
    return [spec_from_index(n, len_max, i) for i in picks]


def _case_label(spec):
    return f"n={spec.n} lens={','.join(map(str, spec.lengths_canonical()))}"


# individual checks ---------------------------------------------------------------

def check_structure(spec):
    """Lattice axioms plus pseudocomplementation, 0-distributivity,
    atomicity and the Boolean quotient."""
    try:
        lat = build_blowup(spec, validate=True)
        verify_blowup_structure(lat, spec)
        if not lat.is_zero_distributive():
            return False, "blow-up is not 0-distributive"
        if not lat.is_atomic():
            return False, "blow-up is not atomic"
    except LatdimError as exc:
        return False, str(exc)
    return True, ""


def check_connectivity(spec):
    """Component/diameter facts of the complement graph."""
    try:
        report = check_connectivity_theorem(build_blowup(spec))
    except LatdimError as exc:
        return False, str(exc)
    if spec.n >= 3 and (not report.connected or report.diameter != 2):
        return False, f"expected a connected diameter-2 complement, got {report}"
    return True, f"atoms={report.atom_count} diam={report.diameter}"


def check_sr_closed_form(spec, tamper=False):
    """Closed-form SR graph equals the distance-based one edge for edge.

    ``tamper`` drops one edge from the generic construction first; used
    to prove the comparison can fail loudly.
    """
    lat = build_blowup(spec)
    generic = strong_resolving_graph(complement_zero_divisor_graph(lat))
    if tamper and generic.graph.edge_count():
        edges = generic.graph.edges()[1:]
        g = SimpleGraph(generic.graph.n, edges, generic.graph.labels)
        generic = type(generic)(generic.base_n, generic.boundary, g)
    closed = blowup_sr_closed_form(lat)
    if closed != generic:
        return False, "closed-form and distance-based SR graphs differ"
    return True, f"edges={closed.graph.edge_count()}"


def check_sr_join_split(spec, t):
    """SR of the join with a clique equals SR of the core plus the clique."""
    core = complement_zero_divisor_graph(build_blowup(spec))
    lhs = sr_join_direct(core, t)
    rhs = sr_of_join_decomposition(core, t)
    if lhs != rhs:
        return False, f"join decomposition fails at t={t}"
    return True, f"t={t}"


def _paper_style_witness(spec, lat):
    # one level-1 representative per chain whose subset contains atom 1
    elems = spec.elements()
    index_of = {e: i for i, e in enumerate(elems)}
    zs = lat.zero_divisors()
    pos = {z: i for i, z in enumerate(zs)}
    out = []
    for mask in proper_subset_masks(spec.n):
        if mask & 1:
            out.append(pos[index_of[BlowUpElement(subset_from_mask(mask), 1)]])
    return out


def check_sr_independence(spec):
    """Independence number of the SR graph is 2^(n-1) - 1, and the
    canonical witness (level-1 elements of the chains containing atom 1)
    is independent."""
    lat = build_blowup(spec)
    sr = blowup_sr_closed_form(lat)
    beta = len(max_independent_set(sr.graph))
    want = (1 << (spec.n - 1)) - 1
    if beta != want:
        return False, f"independence number {beta}, expected {want}"
    witness = _paper_style_witness(spec, lat)
    if len(witness) != want:
        return False, "canonical witness has the wrong size"
    for i, u in enumerate(witness):
        for v in witness[i + 1:]:
            if sr.graph.has_edge(u, v):
                return False, "canonical witness is not independent"
    return True, f"beta={beta}"


def check_sr_diameter(spec):
    """SR graph is connected with diameter at most 3."""
    sr = blowup_sr_closed_form(build_blowup(spec))
    if not is_connected(sr.graph):
        return False, "SR graph is disconnected"
    d = diameter(sr.graph)
    if d > 3:
        return False, f"SR diameter {d} > 3"
    return True, f"diam={d}"


def check_sdim_formula(spec, brute_cap=14):
    """Closed form equals the SR vertex-cover dimension, and the
    brute-force oracle when the graph is small enough."""
    formula = closed_form_sdim_blowup(spec)
    gc = complement_zero_divisor_graph(build_blowup(spec))
    report = strong_metric_dimension(gc, _case_label(spec))
    if report.sdim != formula:
        return False, f"solver {report.sdim} != formula {formula}"
    if gc.n <= brute_cap:
        brute = strong_metric_dimension_bruteforce(gc, cap=brute_cap)
        if brute != formula:
            return False, f"brute force {brute} != formula {formula}"
        return True, f"sdim={formula} (brute checked)"
    return True, f"sdim={formula}"


def check_gallai(spec):
    """The solver's independent set and complementary cover partition the
    SR vertex set: independence, coverage and the size identity."""
    sr = blowup_sr_closed_form(build_blowup(spec))
    mis = max_independent_set(sr.graph)
    in_mis = set(mis)
    for i, u in enumerate(mis):
        for v in mis[i + 1:]:
            if sr.graph.has_edge(u, v):
                return False, "independent set has an internal edge"
    cover = [v for v in range(sr.graph.n) if v not in in_mis]
    cover_set = set(cover)
    for u, v in sr.graph.edges():
        if u not in cover_set and v not in cover_set:
            return False, f"edge ({u}, {v}) not covered"
    if len(mis) + len(cover) != sr.graph.n:
        return False, "cover and independent set sizes do not add up"
    return True, f"alpha={len(cover)} beta={len(mis)}"


def check_dims_bound(spec, cap=12):
    """Metric dimension never exceeds the strong one, and a diameter-2
    graph on a dim-sized basis has at most 2^dim further vertices (the
    pigeonhole on {1,2}-distance vectors).  Skipped above the brute cap."""
    gc = complement_zero_divisor_graph(build_blowup(spec))
    if gc.n > cap:
        return True, f"skipped: |V|={gc.n} > cap {cap}"
    dim = metric_dimension_bruteforce(gc, cap=cap)
    sdim = strong_metric_dimension_bruteforce(gc, cap=cap)
    if dim > sdim:
        return False, f"dim {dim} > sdim {sdim}"
    if gc.n - dim > (1 << dim):
        return False, f"|V|-dim={gc.n - dim} exceeds 2^dim={1 << dim}"
    return True, f"dim={dim} sdim={sdim}"


LEMMA_CHECKS = ("structure", "connectivity", "sr_closed_form",
                "sr_join_split", "sr_independence", "sr_diameter")
FORMULA_CHECKS = ("sdim_formula", "gallai", "dims_bound")


def run_suite(suite="all", n_max=4, len_max=2, seed=7, limit=100,
              inject_fault=False, out=print):
    """Run the selected checks over the corpus; returns the failure count.

    Output is deterministic for fixed arguments: cases are numbered in
    corpus order and no timing information is printed.
    """
    if suite == "lemmas":
        names = LEMMA_CHECKS
    elif suite == "formulas":
        names = FORMULA_CHECKS
    elif suite == "all":
        names = LEMMA_CHECKS + FORMULA_CHECKS
    else:
        raise ValueError(f"unknown suite {suite!r}")

    cases = []
    for n in range(3, n_max + 1):
        cases.extend(corpus_specs(n, len_max, seed, limit))

    failures = 0
    checks_run = 0
    for idx, spec in enumerate(cases):
        label = _case_label(spec)
        for name in names:
            if name == "structure":
                ok, detail = check_structure(spec)
            elif name == "connectivity":
                ok, detail = check_connectivity(spec)
            elif name == "sr_closed_form":
                ok, detail = check_sr_closed_form(spec, tamper=inject_fault and idx == 0)
            elif name == "sr_join_split":
                ok, detail = check_sr_join_split(spec, t=idx % 3 + 1)
            elif name == "sr_independence":
                ok, detail = check_sr_independence(spec)
            elif name == "sr_diameter":
                ok, detail = check_sr_diameter(spec)
            elif name == "sdim_formula":
                ok, detail = check_sdim_formula(spec)
            elif name == "gallai":
                ok, detail = check_gallai(spec)
            else:
                ok, detail = check_dims_bound(spec)
            checks_run += 1
            if not ok:
                failures += 1
            status = "PASS" if ok else "FAIL"
            suffix = f" {detail}" if detail else ""
            out(f"[{idx:04d}] {label} {name} {status}{suffix}")
    out(f"suite={suite} cases={len(cases)} checks={checks_run} failures={failures}")
    return failures
