"""Simple undirected graphs with labelled vertices.

Adjacency is stored as one bitmask per vertex, so neighborhood
operations, BFS and the solver hot loops are word-parallel.  Graphs are
treated as immutable after construction; the all-pairs distance matrix
is computed lazily and cached.
"""

from __future__ import annotations

import math

from .bitops import bits, mask_of
from .errors import ParseError


class SimpleGraph:
    """Undirected simple graph: no loops, no multi-edges."""

    __slots__ = ("n", "labels", "adj", "_dist")

    def __init__(self, n, edges=(), labels=None):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count cannot be negative")
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError("labels length does not match vertex count")
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.n = n
        self.labels = labels
        self.adj = tuple(adj)
        self._dist = None

    @classmethod
    def from_adjacency(cls, adj_masks, labels=None):
        adj = tuple(int(a) for a in adj_masks)
        n = len(adj)
        for v in range(n):
            if (adj[v] >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(adj[v]):
                if u >= n:
                    raise ValueError(f"adjacency of {v} out of range")
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        g = cls(n, (), labels)
        g.adj = adj
        return g

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    __hash__ = None

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edge_count()})"

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v):
        return bits(self.adj[v])

    def degree(self, v):
        return self.adj[v].bit_count()

    def edges(self):
        """Edge list with i < j, ascending."""
        out = []
        for i in range(self.n):
            hi = self.adj[i] >> (i + 1) << (i + 1)
            for j in bits(hi):
                out.append((i, j))
        return out

    def edge_count(self):
        return sum(a.bit_count() for a in self.adj) // 2

    def distances(self):
        """All-pairs BFS distance matrix; -1 marks unreachable pairs.

        Cached on first use; callers must treat the result as read-only.
        """
        if self._dist is None:
            out = []
            for s in range(self.n):
                row = [-1] * self.n
                row[s] = 0
                seen = frontier = 1 << s
                d = 0
                while frontier:
                    nxt = 0
                    for v in bits(frontier):
                        nxt |= self.adj[v]
                    nxt &= ~seen
                    if not nxt:
                        break
                    d += 1
                    for v in bits(nxt):
                        row[v] = d
                    seen |= nxt
                    frontier = nxt
                out.append(row)
            self._dist = out
        return self._dist


def complement(g):
    """Same vertices, adjacency flipped off the diagonal."""
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return SimpleGraph.from_adjacency(adj, g.labels)


def complete_graph(t, labels=None):
    if t < 0:
        raise ValueError("vertex count cannot be negative")
    if labels is None:
        labels = [f"k{i + 1}" for i in range(t)]
    full = (1 << t) - 1
    return SimpleGraph.from_adjacency([full & ~(1 << v) for v in range(t)], labels)


def join_complete(g, t):
    """Add t new mutually adjacent vertices, each adjacent to all of g.

    New vertices are labelled k1..kt.
    """
    if t < 0:
        raise ValueError("t cannot be negative")
    n = g.n
    new_block = ((1 << t) - 1) << n
    full = (1 << (n + t)) - 1
    adj = [g.adj[v] | new_block for v in range(n)]
    adj += [full & ~(1 << (n + i)) for i in range(t)]
    labels = list(g.labels) + [f"k{i + 1}" for i in range(t)]
    return SimpleGraph.from_adjacency(adj, labels)


def disjoint_union(g, h):
    """Vertex-disjoint union; labels are prefixed only if they collide."""
    la, lb = list(g.labels), list(h.labels)
    if set(la) & set(lb):
        la = ["a:" + s for s in la]
        lb = ["b:" + s for s in lb]
    adj = list(g.adj) + [a << g.n for a in h.adj]
    return SimpleGraph.from_adjacency(adj, la + lb)


def all_pairs_distances(g):
    """BFS distance matrix; -1 for unreachable pairs.  Read-only."""
    return g.distances()


def components(g):
    """Connected components as sorted vertex lists, ordered by least vertex."""
    left = (1 << g.n) - 1
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(sorted(bits(seen)))
        left &= ~seen
    return out


def is_connected(g):
    return g.n <= 1 or len(components(g)) == 1


def diameter(g):
    """Largest finite distance; math.inf when disconnected."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return math.inf
    return max(max(row) for row in g.distances())


# import/export -----------------------------------------------------------------

def _esc(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g, name="G", marked=frozenset()):
    """DOT text: vertices in index order, each edge once with i < j.
    Vertices in ``marked`` get peripheries=2."""
    lines = [f"graph {name} {{"]
    for i in range(g.n):
        attrs = f'label="{_esc(g.labels[i])}"'
        if i in marked:
            attrs += ", peripheries=2"
        lines.append(f"  {i} [{attrs}];")
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g):
    """Plain-text edge list: 'v <i> <label>' lines then 'e <i> <j>' lines."""
    lines = [f"v {i} {g.labels[i]}" for i in range(g.n)]
    lines += [f"e {i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def graph_from_edge_list(text):
    verts = {}
    raw_edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split(None, 2)
        if toks[0] == "v":
            if len(toks) < 2:
                raise ParseError("expected 'v <i> <label>'", lineno)
            try:
                i = int(toks[1])
            except ValueError:
                raise ParseError("vertex index is not an integer", lineno) from None
            if i in verts:
                raise ParseError(f"duplicate vertex {i}", lineno)
            verts[i] = toks[2] if len(toks) > 2 else str(i)
        elif toks[0] == "e":
            parts = line.split()
            if len(parts) != 3:
                raise ParseError("expected 'e <i> <j>'", lineno)
            try:
                raw_edges.append((int(parts[1]), int(parts[2]), lineno))
            except ValueError:
                raise ParseError("edge endpoints are not integers", lineno) from None
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", lineno)
    n = len(verts)
    if sorted(verts) != list(range(n)):
        raise ParseError("vertex indices must be exactly 0..n-1")
    edges = []
    for i, j, lineno in raw_edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ParseError(f"bad edge ({i}, {j})", lineno)
        edges.append((i, j))
    return SimpleGraph(n, edges, [verts[i] for i in range(n)])
