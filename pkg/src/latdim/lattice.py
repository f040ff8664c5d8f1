"""Bounded finite lattices stored as explicit order/meet/join tables.

Elements are integer indices ``0..m-1``; labels are display-only text.
The order relation is kept as one bitmask per element (``up[x]`` holds
every ``y`` with ``x <= y``), so poset axioms, bound lookups and
annihilator scans reduce to word operations on Python ints.  Everything
downstream (zero-divisor graphs, strong resolving machinery, solvers)
works on these tables at desk scale (m up to a few hundred).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bitops import bits, mask_of
from .errors import (
    ChainTooShort,
    EmptyInput,
    NotALattice,
    NotAPoset,
    NotBounded,
    ParseError,
    QuotientNotLattice,
)


def _check_poset(up):
    m = len(up)
    for x in range(m):
        if not (up[x] >> x) & 1:
            raise NotAPoset(f"relation is not reflexive at element {x}")
    for x in range(m):
        rest = up[x] & ~(1 << x)
        for y in bits(rest):
            if (up[y] >> x) & 1:
                raise NotAPoset(f"antisymmetry fails on elements {x} and {y}")
            if up[y] & ~up[x]:
                raise NotAPoset(f"transitivity fails through {x} <= {y}")


class FiniteLattice:
    """A bounded lattice on ``m`` elements.

    Instances are immutable after construction; every operation is pure,
    so concurrent use is safe.  Construct via :func:`lattice_from_leq`,
    :func:`lattice_from_pairs`, :func:`product_of_chains`,
    :func:`boolean_lattice` or :func:`latdim.blowup.build_blowup`.  The
    raw constructor takes up-set bitmasks and validates the poset axioms
    only when ``validate=True``; existence and uniqueness of meets,
    joins and bounds is always checked because the table construction
    needs them anyway.
    """

    __slots__ = ("m", "labels", "_up", "_down", "bottom", "top",
                 "meet_table", "join_table", "_by_down", "_by_up", "_ann")

    def __init__(self, up_masks, labels=None, *, validate=False):
        up = tuple(int(u) for u in up_masks)
        m = len(up)
        if m == 0:
            raise NotBounded("empty carrier set")
        if labels is None:
            labels = tuple(str(i) for i in range(m))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != m:
                raise ValueError("labels length does not match element count")
        full = (1 << m) - 1
        for x in range(m):
            if up[x] & ~full:
                raise ValueError(f"up-mask of element {x} references elements out of range")
        if validate:
            _check_poset(up)
        down = [0] * m
        for x in range(m):
            for y in bits(up[x]):
                down[y] |= 1 << x
        by_down = {}
        by_up = {}
        for x in range(m):
            by_down[down[x]] = x
            by_up[up[x]] = x
        if len(by_down) != m or len(by_up) != m:
            raise NotAPoset("two elements share an order ideal (antisymmetry broken)")
        bottom = by_up.get(full)
        top = by_down.get(full)
        if bottom is None or top is None:
            raise NotBounded("order has no global minimum or maximum")

        self.m = m
        self.labels = labels
        self._up = up
        self._down = tuple(down)
        self.bottom = bottom
        self.top = top
        self._by_down = by_down
        self._by_up = by_up

        # glb of {a,b} exists iff the intersection of their down-sets is
        # itself a down-set of some element; dict lookup settles both
        # existence and uniqueness in one step.
        meet = [[0] * m for _ in range(m)]
        join = [[0] * m for _ in range(m)]
        for a in range(m):
            meet[a][a] = a
            join[a][a] = a
            da = down[a]
            ua = up[a]
            for b in range(a):
                g = by_down.get(da & down[b])
                if g is None:
                    raise NotALattice(f"elements {a} and {b} have no greatest lower bound")
                meet[a][b] = meet[b][a] = g
                h = by_up.get(ua & up[b])
                if h is None:
                    raise NotALattice(f"elements {a} and {b} have no least upper bound")
                join[a][b] = join[b][a] = h
        self.meet_table = tuple(tuple(r) for r in meet)
        self.join_table = tuple(tuple(r) for r in join)
        self._ann = None

    def __len__(self):
        return self.m

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.m == other.m and self._up == other._up and self.labels == other.labels

    __hash__ = None

    def __repr__(self):
        return f"FiniteLattice(m={self.m}, bottom={self.bottom}, top={self.top})"

    # order and algebra -----------------------------------------------------

    def leq(self, a, b):
        """True iff ``a <= b``."""
        return bool((self._up[a] >> b) & 1)

    def up_mask(self, a):
        """Bitmask of all elements above ``a`` (inclusive)."""
        return self._up[a]

    def down_mask(self, a):
        """Bitmask of all elements below ``a`` (inclusive)."""
        return self._down[a]

    def meet(self, a, b):
        return self.meet_table[a][b]

    def join(self, a, b):
        return self.join_table[a][b]

    def covers(self):
        """All covering pairs ``(x, y)`` with ``x`` covered by ``y``."""
        out = []
        for x in range(self.m):
            for y in bits(self._up[x] & ~(1 << x)):
                if (self._up[x] & self._down[y]).bit_count() == 2:
                    out.append((x, y))
        return out

    def atoms(self):
        """Elements covering the bottom."""
        bot = self.bottom
        want = 1 << bot
        return tuple(x for x in range(self.m)
                     if x != bot and self._down[x] == want | (1 << x))

    def is_atomic(self):
        """Every nonzero element sits above some atom (always true for
        finite lattices, but asserted rather than assumed)."""
        am = mask_of(self.atoms())
        return all(self._down[x] & am
                   for x in range(self.m) if x != self.bottom)

    # annihilators ----------------------------------------------------------

    def annihilator_mask(self, a):
        """Bitmask of ``{b : a meet b = bottom}``; always contains bottom."""
        if self._ann is None:
            self._ann = [None] * self.m
        v = self._ann[a]
        if v is None:
            bot = self.bottom
            row = self.meet_table[a]
            v = mask_of(b for b in range(self.m) if row[b] == bot)
            self._ann[a] = v
        return v

    def annihilator(self, a):
        """The annihilator of ``a`` as a set of element indices."""
        return set(bits(self.annihilator_mask(a)))

    def pseudocomplement(self, a):
        """Greatest element of the annihilator of ``a``, or None.

        Annihilators are down-closed, so a greatest element exists iff
        the annihilator equals the down-set of some element.
        """
        return self._by_down.get(self.annihilator_mask(a))

    def is_pseudocomplemented(self):
        return all(self.pseudocomplement(a) is not None for a in range(self.m))

    def is_zero_distributive(self):
        """Check that a^b=0 and a^c=0 imply a^(b v c)=0 for all triples."""
        bot = self.bottom
        for a in range(self.m):
            members = list(bits(self.annihilator_mask(a)))
            row = self.meet_table[a]
            for i, b in enumerate(members):
                jr = self.join_table[b]
                for c in members[i + 1:]:
                    if row[jr[c]] != bot:
                        return False
        return True

    def zero_divisors(self):
        """Nonzero elements with a nonzero annihilator partner, ascending."""
        bot = self.bottom
        botbit = 1 << bot
        return tuple(a for a in range(self.m)
                     if a != bot and self.annihilator_mask(a) & ~botbit)

    # derived lattices -------------------------------------------------------

    def dual(self):
        """Order-reversed lattice: meets and joins swap, as do the bounds."""
        return FiniteLattice(self._down, self.labels, validate=False)

    def annihilator_classes(self):
        """Partition by equal annihilators plus the quotient lattice.

        Classes are ordered by smallest member.  The quotient order is
        reverse containment of annihilators and is validated as a
        bounded lattice; failure raises QuotientNotLattice.
        """
        groups = {}
        for x in range(self.m):
            groups.setdefault(self.annihilator_mask(x), []).append(x)
        classes = tuple(tuple(g) for g in groups.values())
        class_of = [0] * self.m
        for ci, members in enumerate(classes):
            for x in members:
                class_of[x] = ci
        anns = [self.annihilator_mask(c[0]) for c in classes]
        k = len(classes)
        up_q = [mask_of(j for j in range(k) if anns[j] & ~anns[i] == 0)
                for i in range(k)]
        labels = tuple(f"[{self.labels[c[0]]}]" for c in classes)
        try:
            quotient = FiniteLattice(up_q, labels, validate=True)
        except (NotAPoset, NotALattice, NotBounded) as exc:
            raise QuotientNotLattice(str(exc)) from exc
        return AnnihilatorClassPartition(classes, tuple(class_of), quotient)


@dataclass(frozen=True)
class AnnihilatorClassPartition:
    """Annihilator-equality classes of a lattice and their quotient."""

    classes: tuple
    class_of: tuple
    quotient: FiniteLattice


# constructors ----------------------------------------------------------------

def lattice_from_leq(m, leq, labels=None):
    """Build and validate a lattice from an m-by-m boolean order matrix."""
    if m < 1:
        raise ValueError("element count must be at least 1")
    rows = list(leq)
    if len(rows) != m:
        raise ValueError(f"expected {m} relation rows, got {len(rows)}")
    up = []
    for x, row in enumerate(rows):
        row = list(row)
        if len(row) != m:
            raise ValueError(f"relation row {x} has length {len(row)}, expected {m}")
        up.append(mask_of(y for y in range(m) if row[y]))
    return FiniteLattice(up, labels, validate=True)


def lattice_from_pairs(m, pairs, labels=None, *, add_reflexive=True):
    """Build and validate a lattice from an iterable of (i, j) pairs with i <= j."""
    if m < 1:
        raise ValueError("element count must be at least 1")
    up = [(1 << x) if add_reflexive else 0 for x in range(m)]
    for i, j in pairs:
        if not (0 <= i < m and 0 <= j < m):
            raise ValueError(f"pair ({i}, {j}) out of range for m={m}")
        up[i] |= 1 << j
    return FiniteLattice(up, labels, validate=True)


def chain_tuples(lengths):
    """Coordinate tuples of a product of chains, in canonical index order
    (last coordinate varies fastest)."""
    return list(itertools.product(*(range(q) for q in lengths)))


def tuple_label(t):
    return "(" + ",".join(str(v) for v in t) + ")"


def product_of_chains(lengths):
    """Direct product of chains C_{q_1} x ... x C_{q_n}.

    Order, meet and join are componentwise; element labels are the
    coordinate tuples.
    """
    lengths = tuple(int(q) for q in lengths)
    if not lengths:
        raise EmptyInput("need at least one chain")
    for q in lengths:
        if q < 2:
            raise ChainTooShort(f"chain length {q} < 2")
    elems = chain_tuples(lengths)
    m = len(elems)
    up = []
    for x in elems:
        u = 0
        for iy, y in enumerate(elems):
            if all(xc <= yc for xc, yc in zip(x, y)):
                u |= 1 << iy
        up.append(u)
    labels = [tuple_label(t) for t in elems]
    return FiniteLattice(up, labels, validate=False)


def boolean_lattice(n):
    """The lattice of subsets of an n-set, as a product of 2-chains."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return product_of_chains((2,) * n)


# spec-file loader -------------------------------------------------------------

def parse_lattice_spec(text):
    """Parse the lattice spec-file format.

    Grammar: a ``lattice m=<int>`` header, then either ``leq i j`` lines
    listing the full order relation (reflexive pairs optional, closure
    is NOT applied) or ``cover i j`` lines listing covers only (the
    loader computes the reflexive-transitive closure).  ``label i text``
    lines attach display labels.  Blank lines and ``#`` comments are
    ignored.
    """
    m = None
    mode = None
    rel = []
    label_map = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "lattice":
            if m is not None:
                raise ParseError("duplicate lattice header", lineno)
            if len(toks) != 2 or not toks[1].startswith("m="):
                raise ParseError("expected 'lattice m=<int>'", lineno)
            try:
                m = int(toks[1][2:])
            except ValueError:
                raise ParseError("element count is not an integer", lineno) from None
            if m < 1:
                raise ParseError("element count must be at least 1", lineno)
        elif toks[0] in ("leq", "cover"):
            if m is None:
                raise ParseError("lattice header must come first", lineno)
            if mode is None:
                mode = toks[0]
            elif mode != toks[0]:
                raise ParseError("cannot mix leq and cover lines", lineno)
            if len(toks) != 3:
                raise ParseError(f"expected '{toks[0]} <i> <j>'", lineno)
            try:
                i, j = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError("indices are not integers", lineno) from None
            if not (0 <= i < m and 0 <= j < m):
                raise ParseError(f"index out of range 0..{m - 1}", lineno)
            rel.append((i, j))
        elif toks[0] == "label":
            if m is None:
                raise ParseError("lattice header must come first", lineno)
            parts = line.split(None, 2)
            if len(parts) != 3:
                raise ParseError("expected 'label <i> <text>'", lineno)
            try:
                i = int(parts[1])
            except ValueError:
                raise ParseError("label index is not an integer", lineno) from None
            if not 0 <= i < m:
                raise ParseError(f"label index out of range 0..{m - 1}", lineno)
            label_map[i] = parts[2]
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", lineno)
    if m is None:
        raise ParseError("missing 'lattice m=<int>' header")
    up = [1 << x for x in range(m)]
    for i, j in rel:
        up[i] |= 1 << j
    if mode == "cover":
        for j in range(m):
            bit = 1 << j
            for i in range(m):
                if up[i] & bit:
                    up[i] |= up[j]
    labels = [label_map.get(i, str(i)) for i in range(m)]
    return FiniteLattice(up, labels, validate=True)


def load_lattice_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_lattice_spec(fh.read())
