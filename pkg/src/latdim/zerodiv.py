"""Zero-divisor graph of a lattice and its complement.

Vertices are the nonzero elements with a nonzero annihilator partner;
two are adjacent in the zero-divisor graph iff their meet is bottom,
and in the complement iff it is not.  Vertex i of the graph corresponds
to the i-th smallest zero-divisor index of the lattice and carries the
lattice element's label; the graph keeps no reference to the lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionFailed, TheoremViolated
from .graphs import SimpleGraph, complement, components, diameter


def zero_divisor_graph(lattice):
    """Graph on the zero-divisors, adjacent iff their meet is bottom.

    A lattice without zero-divisors (a chain, say) yields the empty
    graph; that is a flag, not an error.
    """
    zs = lattice.zero_divisors()
    bot = lattice.bottom
    mt = lattice.meet_table
    k = len(zs)
    edges = [(i, j)
             for i in range(k)
             for j in range(i + 1, k)
             if mt[zs[i]][zs[j]] == bot]
    return SimpleGraph(k, edges, [lattice.labels[z] for z in zs])


def complement_zero_divisor_graph(lattice):
    """Complement of the zero-divisor graph: adjacent iff meet is nonzero."""
    return complement(zero_divisor_graph(lattice))


@dataclass(frozen=True)
class ConnectivityReport:
    """Verified connectivity facts about a zero-divisor complement."""

    atom_count: int
    component_count: int
    connected: bool
    diameter: int | None
    two_atoms_two_cliques: bool | None


def check_connectivity_theorem(lattice):
    """Verify the connectivity facts for an atomic 0-distributive lattice.

    The complement has at most two components; with exactly two atoms it
    is a disjoint union of two complete graphs; it is connected iff the
    lattice has at least three atoms, and then its diameter is exactly 2.
    Raises PreconditionFailed when the hypotheses do not hold and
    TheoremViolated when a conclusion fails.
    """
    if not lattice.is_atomic():
        raise PreconditionFailed("lattice is not atomic")
    if not lattice.is_zero_distributive():
        raise PreconditionFailed("lattice is not 0-distributive")
    zs = lattice.zero_divisors()
    if not zs:
        raise PreconditionFailed("lattice has no zero-divisors")

    g = complement_zero_divisor_graph(lattice)
    comps = components(g)
    cc = len(comps)
    atom_count = len(lattice.atoms())

    if cc > 2:
        raise TheoremViolated(f"complement has {cc} components, expected at most 2")

    two_cliques = None
    if atom_count == 2:
        two_cliques = cc == 2
        for part in comps:
            pmask = 0
            for v in part:
                pmask |= 1 << v
            for v in part:
                if g.adj[v] & pmask != pmask & ~(1 << v):
                    two_cliques = False
        if not two_cliques:
            raise TheoremViolated("two atoms but the complement is not two complete graphs")

    connected = cc == 1
    if connected != (atom_count >= 3):
        raise TheoremViolated(
            f"connected={connected} but atom count is {atom_count}")

    diam = None
    if connected:
        diam = diameter(g)
        if diam != 2:
            raise TheoremViolated(f"connected complement has diameter {diam}, expected 2")

    return ConnectivityReport(atom_count, cc, connected, diam, two_cliques)
