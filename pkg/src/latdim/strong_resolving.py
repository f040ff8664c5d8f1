"""Maximal-distance machinery and strong resolving graphs.

A vertex u is maximally distant from v when no neighbor of u is
farther from v than u is.  Mutually maximally distant (MMD) pairs form
the edges of the strong resolving graph, whose vertex set is the
boundary (every vertex appearing in some MMD pair).  For blow-up
complements a distance-free closed form is available and is checked
against the generic construction in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, NotCoReachable, PreconditionFailed
from .graphs import (
    SimpleGraph,
    complete_graph,
    disjoint_union,
    is_connected,
    join_complete,
    to_dot,
)
from .zerodiv import complement_zero_divisor_graph


def _require_connected(g):
    if not is_connected(g):
        raise Disconnected(f"graph with {g.n} vertices is not connected")


def is_maximally_distant(g, u, v):
    """True iff every neighbor of u is at distance <= d(u, v) from v."""
    if u == v:
        raise ValueError("vertices must be distinct")
    dist = g.distances()
    duv = dist[u][v]
    if duv < 0:
        raise NotCoReachable(f"no path between {u} and {v}")
    dv = dist[v]
    return all(dv[w] <= duv for w in g.neighbors(u))


def mutually_maximally_distant(g, u, v):
    return is_maximally_distant(g, u, v) and is_maximally_distant(g, v, u)


def mmd_pairs(g):
    """All unordered mutually-maximally-distant pairs of a connected graph."""
    _require_connected(g)
    dist = g.distances()
    pairs = []
    for u in range(g.n):
        du = dist[u]
        for v in range(u + 1, g.n):
            duv = du[v]
            dv = dist[v]
            if all(dv[w] <= duv for w in g.neighbors(u)) and \
               all(du[w] <= duv for w in g.neighbors(v)):
                pairs.append((u, v))
    return pairs


def boundary(g):
    """Vertices appearing in some mutually-maximally-distant pair."""
    out = set()
    for u, v in mmd_pairs(g):
        out.add(u)
        out.add(v)
    return sorted(out)


@dataclass(frozen=True)
class SRGraph:
    """Strong resolving graph of a base graph.

    ``boundary[i]`` is the base-graph vertex behind SR vertex i; the SR
    graph inherits the base labels, so two SRGraphs built over the same
    canonical vertex order compare by plain equality.
    """

    base_n: int
    boundary: tuple
    graph: SimpleGraph

    @property
    def n(self):
        return self.graph.n

    def to_dot(self, name="SR"):
        return to_dot(self.graph, name, marked=set(range(self.graph.n)))


def strong_resolving_graph(g):
    """Boundary vertices with the MMD pairs as edges."""
    pairs = mmd_pairs(g)
    bnd = sorted({v for p in pairs for v in p})
    pos = {b: i for i, b in enumerate(bnd)}
    edges = [(pos[u], pos[v]) for u, v in pairs]
    labels = [g.labels[b] for b in bnd]
    return SRGraph(g.n, tuple(bnd), SimpleGraph(len(bnd), edges, labels))


def blowup_sr_closed_form(lattice, partition=None):
    """Strong resolving graph of a blow-up complement, no distances used.

    For a blow-up with at least three atoms the boundary is every
    zero-divisor, and two vertices are SR-adjacent iff they share an
    annihilator class or their meet is bottom.  Must coincide with
    :func:`strong_resolving_graph` applied to the complement graph.
    """
    if len(lattice.atoms()) < 3:
        raise PreconditionFailed("closed form needs at least three atoms")
    if partition is None:
        partition = lattice.annihilator_classes()
    zs = lattice.zero_divisors()
    k = len(zs)
    bot = lattice.bottom
    mt = lattice.meet_table
    cls = partition.class_of
    edges = []
    for i in range(k):
        zi = zs[i]
        for j in range(i + 1, k):
            zj = zs[j]
            if cls[zi] == cls[zj] or mt[zi][zj] == bot:
                edges.append((i, j))
    labels = [lattice.labels[z] for z in zs]
    return SRGraph(k, tuple(range(k)), SimpleGraph(k, edges, labels))


def blowup_sr_from_spec(spec):
    """Spec-level shortcut: build the blow-up and apply the closed form."""
    from .blowup import build_blowup

    return blowup_sr_closed_form(build_blowup(spec))


def sr_of_join_decomposition(core, t):
    """Strong resolving graph of ``core joined with a t-clique`` by parts.

    For t >= 2 this is SR(core) disjoint-union a t-clique; for
    zero-divisor complements with at least three atoms (equivalently,
    connected cores) it equals the directly computed strong resolving
    graph of the join.  t = 1 is special: a lone universal vertex has
    no clique partner and is never *mutually* maximally distant with a
    core vertex unless that vertex is universal, so the joined vertex
    drops out of the boundary and the result is SR(core) over the
    enlarged base.  That rule is exact when the core has diameter 2 and
    no universal vertex, which holds for every connected zero-divisor
    complement; other cores are rejected.  t = 0 degenerates to
    SR(core).
    """
    if t < 0:
        raise ValueError("t cannot be negative")
    if not is_connected(core):
        raise PreconditionFailed("core graph must be connected")
    sr_core = strong_resolving_graph(core)
    if t == 0:
        return sr_core
    if t == 1:
        from .graphs import diameter

        full = (1 << core.n) - 1
        has_universal = any(core.adj[v] == full & ~(1 << v) for v in range(core.n))
        if core.n < 2 or has_universal or diameter(core) != 2:
            raise PreconditionFailed(
                "t=1 split needs a diameter-2 core without universal vertices")
        return SRGraph(core.n + 1, sr_core.boundary, sr_core.graph)
    union = disjoint_union(sr_core.graph, complete_graph(t))
    bnd = tuple(sr_core.boundary) + tuple(range(core.n, core.n + t))
    return SRGraph(core.n + t, bnd, union)


def sr_join_direct(core, t):
    """The other side of the decomposition: SR of the actual join."""
    return strong_resolving_graph(join_complete(core, t))


def strongly_resolves(g, w, u, v):
    """True iff u lies on a shortest v-w path or v on a shortest u-w path."""
    dist = g.distances()
    duv, duw, dvw = dist[u][v], dist[u][w], dist[v][w]
    if duv < 0 or duw < 0 or dvw < 0:
        raise Disconnected("vertices are not co-reachable")
    return duw == duv + dvw or dvw == duv + duw


def is_strong_resolving_set(g, witness):
    """True iff every vertex pair is strongly resolved by some member."""
    _require_connected(g)
    ws = sorted(set(witness))
    dist = g.distances()
    for u in range(g.n):
        du = dist[u]
        for v in range(u + 1, g.n):
            duv = du[v]
            dv = dist[v]
            if not any(du[w] == duv + dv[w] or dv[w] == duv + du[w] for w in ws):
                return False
    return True


def is_resolving_set(g, witness):
    """True iff all vertices outside the set have distinct distance vectors."""
    _require_connected(g)
    ws = sorted(set(witness))
    inside = set(ws)
    dist = g.distances()
    seen = {}
    for v in range(g.n):
        if v in inside:
            continue
        sig = tuple(dist[v][w] for w in ws)
        if sig in seen:
            return False
        seen[sig] = v
    return True


def sr_of_blowup_complement(lattice):
    """Generic (distance-based) SR graph of a blow-up complement."""
    return strong_resolving_graph(complement_zero_divisor_graph(lattice))
