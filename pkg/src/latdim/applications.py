"""Ring- and vector-space graphs reduced to lattice pipelines.

Every construction here is parameterized by numeric data (field sizes,
proper nonzero ideal counts, vector-space dimension) rather than ring
elements: the graphs of interest are determined by a product of chains
or a blow-up lattice, and each closed-form strong metric dimension is
re-derived by the exact solver, raising FormulaMismatch on any
disagreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .bitops import bits, mask_of
from .blowup import BlowUpSpec, build_blowup, proper_subset_masks, subset_from_mask
from .errors import (
    Disconnected,
    FormulaMismatch,
    ParseError,
    PreconditionFailed,
    SignatureMismatch,
    SpecInvalid,
    TooLarge,
)
from .graphs import SimpleGraph, complement, is_connected, join_complete
from .lattice import chain_tuples, product_of_chains, tuple_label
from .solvers import strong_metric_dimension
from .zerodiv import complement_zero_divisor_graph, zero_divisor_graph


@dataclass(frozen=True)
class ReducedRingSpec:
    """A product of finite fields, encoded by the field sizes."""

    field_sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(q) for q in self.field_sizes)
        object.__setattr__(self, "field_sizes", sizes)
        if not sizes:
            raise SpecInvalid("need at least one field")
        if any(q < 2 for q in sizes):
            raise SpecInvalid("field sizes must be at least 2")


@dataclass(frozen=True)
class PIRSpec:
    """A product of principal ideal ring non-field factors.

    ``proper_ideal_counts[i]`` counts the proper nonzero ideals of the
    i-th factor, so its ideal lattice is a chain on that count plus two
    elements (zero and the whole ring).
    """

    proper_ideal_counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.proper_ideal_counts)
        object.__setattr__(self, "proper_ideal_counts", counts)
        if not counts:
            raise SpecInvalid("need at least one factor")
        if any(c < 1 for c in counts):
            raise SpecInvalid("each factor needs at least one proper nonzero ideal")


@dataclass(frozen=True)
class VectorSpaceSpec:
    """A finite-dimensional vector space over a finite field."""

    dimension: int
    field_size: int

    def __post_init__(self):
        object.__setattr__(self, "dimension", int(self.dimension))
        object.__setattr__(self, "field_size", int(self.field_size))
        if self.dimension < 1:
            raise SpecInvalid("dimension must be at least 1")
        if self.field_size < 2:
            raise SpecInvalid("field size must be at least 2")


# reduced rings -----------------------------------------------------------------

def reduced_zero_divisor_count(spec):
    """|Z*| of a product of fields: prod(q) - prod(q - 1) - 1."""
    q = spec.field_sizes
    return math.prod(q) - math.prod(x - 1 for x in q) - 1


def reduced_closed_form(spec):
    n = len(spec.field_sizes)
    if n < 3:
        raise PreconditionFailed("the dimension formula needs at least three fields")
    return reduced_zero_divisor_count(spec) - (1 << (n - 1)) + 1


def reduced_ring_graphs(spec):
    """Zero-divisor graph of a product of fields, its complement, and
    the strong metric dimension checked against the closed form."""
    n = len(spec.field_sizes)
    if n < 3:
        raise PreconditionFailed("need at least three field factors")
    lat = product_of_chains(spec.field_sizes)
    g = zero_divisor_graph(lat)
    gc = complement(g)
    expected_vertices = reduced_zero_divisor_count(spec)
    if gc.n != expected_vertices:
        raise FormulaMismatch(
            f"zero-divisor count {gc.n} != formula {expected_vertices}")
    graph_id = f"reduced({','.join(map(str, spec.field_sizes))})"
    report = strong_metric_dimension(gc, graph_id)
    expected = expected_vertices - (1 << (n - 1)) + 1
    if report.sdim != expected:
        raise FormulaMismatch(
            f"{graph_id}: solver sdim {report.sdim} != formula {expected}")
    return g, gc, report


@dataclass(frozen=True)
class BlowupEquivalenceReport:
    """Matched class signature between a product of chains and its blow-up."""

    n: int
    vertex_count: int
    subset_sizes: dict
    matched: bool


def equivalent_blowup_spec(spec):
    """The blow-up whose zero-divisor graph matches a product of fields:
    the chain on subset S has one element per tuple supported on S."""
    n = len(spec.field_sizes)
    q = spec.field_sizes
    lengths = {}
    for mask in proper_subset_masks(n):
        subset = subset_from_mask(mask)
        lengths[subset] = math.prod(q[i - 1] - 1 for i in subset)
    return BlowUpSpec(n, lengths)


def blowup_equivalence_check(spec):
    """Verify that the zero-divisor graph of a product of chains equals
    that of the matching blow-up, vertex class by vertex class.

    Vertices on both sides are sorted by (support size, support,
    position); classes must have equal sizes and the permuted adjacency
    must agree exactly.
    """
    n = len(spec.field_sizes)
    if n < 2:
        raise PreconditionFailed("need at least two factors")
    lat1 = product_of_chains(spec.field_sizes)
    g1 = zero_divisor_graph(lat1)
    tuples = chain_tuples(spec.field_sizes)
    zs = lat1.zero_divisors()
    supports = [mask_of(i for i, c in enumerate(tuples[z]) if c) for z in zs]

    bspec = equivalent_blowup_spec(spec)
    g2 = zero_divisor_graph(build_blowup(bspec))

    sizes = {}
    for s in supports:
        sizes[s] = sizes.get(s, 0) + 1
    expected_sizes = {m: bspec.length_of_mask(m) for m in proper_subset_masks(n)}
    if sizes != expected_sizes:
        raise SignatureMismatch("per-subset class sizes differ from the blow-up chains")

    if g1.n != g2.n:
        raise SignatureMismatch(f"vertex counts differ: {g1.n} vs {g2.n}")
    order = sorted(range(g1.n),
                   key=lambda v: (supports[v].bit_count(), supports[v], v))
    for a in range(g1.n):
        for b in range(a + 1, g1.n):
            if g1.has_edge(order[a], order[b]) != g2.has_edge(a, b):
                raise SignatureMismatch(
                    f"adjacency differs at canonical pair ({a}, {b})")

    return BlowupEquivalenceReport(
        n=n,
        vertex_count=g1.n,
        subset_sizes={subset_from_mask(m): c for m, c in sorted(sizes.items())},
        matched=True,
    )


# blow-up complements: total and maximal graphs ----------------------------------

def _blowup_complement_sdim(spec, graph_id):
    if spec.n < 3:
        raise PreconditionFailed("need at least three atoms")
    lat = build_blowup(spec)
    gc = complement_zero_divisor_graph(lat)
    report = strong_metric_dimension(gc, graph_id)
    expected = gc.n - (1 << (spec.n - 1)) + 1
    if report.sdim != expected:
        raise FormulaMismatch(
            f"{graph_id}: solver sdim {report.sdim} != formula {expected}")
    return gc, report


def total_graph(spec):
    """Total graph of the nonzero annihilating ideals, modeled as the
    blow-up complement; sdim must equal |V| - 2^(n-1) + 1."""
    return _blowup_complement_sdim(spec, f"total({spec!r})")


def maximal_graph(spec):
    """Maximal graph of a ring with n maximal ideals: the same graph as
    :func:`total_graph` under a different name."""
    return _blowup_complement_sdim(spec, f"maximal({spec!r})")


# intersection graphs ------------------------------------------------------------

def pir_ideal_lattice(spec):
    """Ideal lattice of a product of PIR non-fields: a product of chains,
    one per factor, each with proper-nonzero-count + 2 elements."""
    return product_of_chains(tuple(c + 2 for c in spec.proper_ideal_counts))


def intersection_closed_form(spec):
    k = len(spec.proper_ideal_counts)
    if k < 2:
        raise PreconditionFailed("need at least two factors")
    total = math.prod(c + 2 for c in spec.proper_ideal_counts)
    return total - 2 - (1 << (k - 1))


def build_intersection_graph(spec):
    """Intersection graph of ideals: all nonzero proper ideals, adjacent
    iff they meet above zero.

    Equals the zero-divisor complement of the ideal lattice joined with
    a clique on the ideals whose annihilator is trivial; the clique size
    is computed from the lattice, not trusted from a count formula.
    """
    k = len(spec.proper_ideal_counts)
    if k < 2:
        raise PreconditionFailed("need at least two factors")
    lat = pir_ideal_lattice(spec)
    core = complement_zero_divisor_graph(lat)
    botbit = 1 << lat.bottom
    t = sum(1 for x in range(lat.m)
            if x not in (lat.bottom, lat.top)
            and lat.annihilator_mask(x) == botbit)
    ig = join_complete(core, t)
    if ig.n != lat.m - 2:
        raise AssertionError("vertex bookkeeping error in the intersection graph")
    return ig, t


def intersection_graph(spec):
    """Intersection graph with its dimension report; sdim must equal
    |V| - 2^(k-1) for k factors."""
    k = len(spec.proper_ideal_counts)
    ig, t = build_intersection_graph(spec)
    if not is_connected(ig):
        raise Disconnected("intersection graph is disconnected")
    graph_id = f"intersection({','.join(map(str, spec.proper_ideal_counts))})"
    report = strong_metric_dimension(ig, graph_id)
    expected = ig.n - (1 << (k - 1))
    if report.sdim != expected:
        raise FormulaMismatch(
            f"{graph_id}: solver sdim {report.sdim} != formula {expected}")
    # the customary count formula for the clique size; flag disagreement
    usual_count = math.prod(c + 1 for c in spec.proper_ideal_counts) - 1
    if usual_count != t:
        report = replace(report, notes=report.notes + (
            f"lattice-derived clique size {t} differs from count formula {usual_count}",))
    return ig, report


def component_closed_form(spec):
    n = spec.dimension
    if n < 3:
        raise PreconditionFailed("the dimension formula needs dimension at least three")
    return spec.field_size ** n - 1 - (1 << (n - 1))


def component_blowup_spec(spec):
    """Blow-up model of the nonzero component graph: the chain on subset
    S collects the (q-1)^|S| vectors supported exactly on S."""
    n = spec.dimension
    q = spec.field_size
    lengths = {}
    for mask in proper_subset_masks(n):
        lengths[subset_from_mask(mask)] = (q - 1) ** mask.bit_count()
    return BlowUpSpec(n, lengths)


def build_component_graph(spec):
    """Nonzero component graph of a vector space via the blow-up model."""
    n = spec.dimension
    if n < 3:
        raise PreconditionFailed("need dimension at least three")
    q = spec.field_size
    core = complement_zero_divisor_graph(build_blowup(component_blowup_spec(spec)))
    t = (q - 1) ** n
    ig = join_complete(core, t)
    if ig.n != q ** n - 1:
        raise AssertionError("vertex bookkeeping error in the component graph")
    return ig, t


def component_graph(spec):
    """Component graph with its dimension report; sdim must equal
    q^n - 1 - 2^(n-1)."""
    ig, t = build_component_graph(spec)
    graph_id = f"vspace(n={spec.dimension},q={spec.field_size})"
    report = strong_metric_dimension(ig, graph_id)
    expected = ig.n - (1 << (spec.dimension - 1))
    if report.sdim != expected:
        raise FormulaMismatch(
            f"{graph_id}: solver sdim {report.sdim} != formula {expected}")
    return ig, report


def component_graph_vector_model(spec, cap=4096):
    """Direct oracle: enumerate the nonzero vectors and join supports.

    Only coordinate supports matter, so vectors are plain tuples over
    range(q).  Vertices sort by (support size, support, tuple), which
    matches the blow-up model's canonical order class by class.
    """
    n = spec.dimension
    q = spec.field_size
    count = q ** n - 1
    if count > cap:
        raise TooLarge(f"{count} vectors exceeds the cap of {cap}")
    vectors = [v for v in chain_tuples((q,) * n) if any(v)]
    sup = {v: mask_of(i for i, c in enumerate(v) if c) for v in vectors}
    vectors.sort(key=lambda v: (sup[v].bit_count(), sup[v], v))
    edges = [(i, j)
             for i in range(count)
             for j in range(i + 1, count)
             if sup[vectors[i]] & sup[vectors[j]]]
    return SimpleGraph(count, edges, [tuple_label(v) for v in vectors])


def component_graph_matches_vector_model(spec, cap=4096):
    """Adjacency equality between the blow-up model and the vector
    oracle (labels differ by design: the join names its clique k1..kt)."""
    model, _ = build_component_graph(spec)
    direct = component_graph_vector_model(spec, cap)
    return model.n == direct.n and model.adj == direct.adj


# inline spec parsing -------------------------------------------------------------

def _split_int_list(text):
    return tuple(int(t) for t in text.replace(",", " ").split())


def parse_app_spec(kind, text):
    """Parse one-line application specs: 'reduced q=2,2,2', 'pir n=1,1',
    'vspace n=3 q=2'.  The leading kind word is optional."""
    line = text.strip()
    if not line:
        raise ParseError("empty spec", 1)
    toks = line.split()
    if toks and toks[0] == kind:
        toks = toks[1:]
    fields = {}
    for tok in toks:
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}", 1)
        key, _, value = tok.partition("=")
        fields[key] = value
    wanted = {"reduced": ("q",), "pir": ("n",), "vspace": ("n", "q")}.get(kind)
    if wanted is None:
        raise ParseError(f"unknown spec kind {kind!r}", 1)
    missing = [k for k in wanted if k not in fields]
    if missing:
        raise ParseError(f"missing field {missing[0]!r} for {kind}", 1)
    extra = sorted(set(fields) - set(wanted))
    if extra:
        raise ParseError(f"unknown field(s) {','.join(extra)} for {kind}", 1)
    try:
        if kind == "reduced":
            return ReducedRingSpec(_split_int_list(fields["q"]))
        if kind == "pir":
            return PIRSpec(_split_int_list(fields["n"]))
        return VectorSpaceSpec(int(fields["n"]), int(fields["q"]))
    except ValueError:
        raise ParseError(f"non-integer value in {kind} spec", 1) from None
