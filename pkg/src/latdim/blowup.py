"""Blow-ups of Boolean lattices.

Every nonzero proper subset S of the atom set {1..n} is replaced by a
finite chain C_S; an element is a pair (subset, level).  Two elements
satisfy (A, s) <= (B, t) iff A = B and s <= t, or A is a proper subset
of B.  Bottom is (empty set, 1), top is (full set, 1).  Elements encode
as n-tuples with the level in the coordinates of the subset and zero
elsewhere, which is also the display label.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitops import bits, mask_of
from .errors import ParseError, SpecInvalid, StructureViolation
from .lattice import FiniteLattice


def proper_subset_masks(n):
    """Nonzero proper subsets of {1..n} as bitmasks (bit i-1 is atom i),
    in canonical order: popcount first, then numeric value."""
    return sorted(range(1, (1 << n) - 1), key=lambda s: (s.bit_count(), s))


def subset_from_mask(mask):
    return frozenset(i + 1 for i in bits(mask))


def _mask_from_subset(subset):
    return mask_of(i - 1 for i in subset)


@dataclass(frozen=True)
class BlowUpElement:
    """One lattice element: a subset of atoms plus a chain level."""

    subset: frozenset
    level: int

    def tuple_encoding(self, n):
        return tuple(self.level if i in self.subset else 0
                     for i in range(1, n + 1))

    def label(self, n):
        return "(" + ",".join(str(z) for z in self.tuple_encoding(n)) + ")"


class BlowUpSpec:
    """Chain-length assignment on the nonzero proper subsets of {1..n}.

    Unlisted subsets default to length 1, so the all-defaults spec is
    the Boolean lattice itself.
    """

    def __init__(self, n, chain_len=None):
        self.n = int(n)
        if self.n < 2:
            raise SpecInvalid(f"need at least 2 atoms, got {self.n}")
        full = frozenset(range(1, self.n + 1))
        lengths = {}
        for subset, length in (chain_len or {}).items():
            key = frozenset(int(i) for i in subset)
            if not key:
                raise SpecInvalid("the empty subset cannot carry a chain")
            if not key <= full:
                raise SpecInvalid(f"subset {sorted(key)} not within 1..{self.n}")
            if key == full:
                raise SpecInvalid("the full atom set cannot carry a chain")
            length = int(length)
            if length < 1:
                raise SpecInvalid(f"chain length {length} < 1 for subset {sorted(key)}")
            lengths[key] = length
        self.chain_len = lengths
        self._by_mask = {_mask_from_subset(s): v for s, v in lengths.items()}

    def length(self, subset):
        """Chain length for a nonzero proper subset (default 1)."""
        return self.chain_len.get(frozenset(subset), 1)

    def length_of_mask(self, mask):
        return self._by_mask.get(mask, 1)

    @property
    def proper_element_count(self):
        """Total number of elements on proper chains, i.e. |Z*| of the blow-up."""
        return sum(self.length_of_mask(s) for s in proper_subset_masks(self.n))

    def lengths_canonical(self):
        """Lengths in canonical subset order; identifies the spec."""
        return tuple(self.length_of_mask(s) for s in proper_subset_masks(self.n))

    def elements(self):
        """Full element list in canonical order: bottom, the chains by
        (popcount, mask, level), then top."""
        out = [BlowUpElement(frozenset(), 1)]
        for mask in proper_subset_masks(self.n):
            subset = subset_from_mask(mask)
            for level in range(1, self.length_of_mask(mask) + 1):
                out.append(BlowUpElement(subset, level))
        out.append(BlowUpElement(frozenset(range(1, self.n + 1)), 1))
        return out

    def __eq__(self, other):
        if not isinstance(other, BlowUpSpec):
            return NotImplemented
        return self.n == other.n and self.lengths_canonical() == other.lengths_canonical()

    __hash__ = None

    def __repr__(self):
        return f"BlowUpSpec(n={self.n}, lengths={','.join(map(str, self.lengths_canonical()))})"


def build_blowup(spec, *, validate=False):
    """Construct the blow-up lattice for a spec.

    Element count is 2 + sum of all chain lengths.  The result always
    passes meet/join/bound existence checks; full poset validation is
    optional because the order rule is correct by construction.
    """
    elems = spec.elements()
    m = len(elems)
    masks = [_mask_from_subset(e.subset) for e in elems]
    levels = [e.level for e in elems]
    up = []
    for i in range(m):
        mi, li = masks[i], levels[i]
        u = 0
        for j in range(m):
            mj = masks[j]
            if (mi == mj and li <= levels[j]) or (mi & ~mj == 0 and mi != mj):
                u |= 1 << j
        up.append(u)
    labels = [e.label(spec.n) for e in elems]
    return FiniteLattice(up, labels, validate=validate)


def blowup_meet(a, b, spec):
    """Meet straight from the chain rule, bypassing the lattice tables.

    Same subset: minimum level.  Nested subsets: the smaller element.
    Otherwise the top element of the chain on the intersection, or
    bottom when the subsets are disjoint.
    """
    if a.subset == b.subset:
        return BlowUpElement(a.subset, min(a.level, b.level))
    if a.subset < b.subset:
        return a
    if b.subset < a.subset:
        return b
    inter = a.subset & b.subset
    if not inter:
        return BlowUpElement(frozenset(), 1)
    return BlowUpElement(inter, spec.length(inter))


def blowup_join(a, b, spec):
    """Join, dual to :func:`blowup_meet`: maximum level on a shared
    chain, the larger of nested elements, else the level-1 element of
    the chain on the union (top when the union is all atoms)."""
    if a.subset == b.subset:
        return BlowUpElement(a.subset, max(a.level, b.level))
    if a.subset < b.subset:
        return b
    if b.subset < a.subset:
        return a
    union = a.subset | b.subset
    return BlowUpElement(union, 1)


@dataclass(frozen=True)
class BlowupStructureReport:
    """Outcome of the structural verification of a blow-up lattice."""

    n: int
    class_count: int
    pseudocomplemented: bool
    dual_pseudocomplemented: bool
    quotient_is_boolean: bool
    atom_pseudocomplements_ok: bool


def verify_blowup_structure(lattice, spec):
    """Check the structural facts a blow-up must satisfy.

    (i) the lattice and its dual are pseudocomplemented; (ii) the
    annihilator-class quotient is the Boolean lattice on n atoms, with
    the isomorphism given by the subset signature of each class; (iii)
    the pseudocomplement of atom i is the top of the chain on the
    complementary subset, and its pseudocomplement in turn is the top
    of the chain on {i}.  Raises StructureViolation naming the failing
    clause.
    """
    n = spec.n
    elems = spec.elements()
    if lattice.m != len(elems):
        raise StructureViolation("element count does not match the spec")
    index_of = {e: i for i, e in enumerate(elems)}
    full = frozenset(range(1, n + 1))

    for a in range(lattice.m):
        if lattice.pseudocomplement(a) is None:
            raise StructureViolation(
                f"clause i: no pseudocomplement for element {lattice.labels[a]}")
    dual = lattice.dual()
    for a in range(dual.m):
        if dual.pseudocomplement(a) is None:
            raise StructureViolation(
                f"clause i: no pseudocomplement in the dual for element {lattice.labels[a]}")

    part = lattice.annihilator_classes()
    if len(part.classes) != 1 << n:
        raise StructureViolation(
            f"clause ii: {len(part.classes)} classes, expected {1 << n}")
    class_subset = []
    for members in part.classes:
        subsets = {elems[x].subset for x in members}
        if len(subsets) != 1:
            raise StructureViolation("clause ii: a class mixes distinct chains")
        subset = next(iter(subsets))
        if subset not in (frozenset(), full) and len(members) != spec.length(subset):
            raise StructureViolation(
                f"clause ii: class of subset {sorted(subset)} is not the whole chain")
        class_subset.append(subset)
    if len(set(class_subset)) != 1 << n:
        raise StructureViolation("clause ii: classes do not biject with subsets")
    q = part.quotient
    for i in range(q.m):
        for j in range(q.m):
            if q.leq(i, j) != (class_subset[i] <= class_subset[j]):
                raise StructureViolation(
                    "clause ii: quotient order differs from subset inclusion")

    for i in range(1, n + 1):
        comp = full - {i}
        atom = index_of[BlowUpElement(frozenset({i}), 1)]
        want = index_of[BlowUpElement(comp, spec.length(comp))]
        got = lattice.pseudocomplement(atom)
        if got != want:
            raise StructureViolation(
                f"clause iii: pseudocomplement of atom {i} is "
                f"{lattice.labels[got]}, expected {lattice.labels[want]}")
        back = lattice.pseudocomplement(got)
        want_back = index_of[BlowUpElement(frozenset({i}), spec.length(frozenset({i})))]
        if back != want_back:
            raise StructureViolation(
                f"clause iii: pseudocomplement of the dual atom over {i} is "
                f"{lattice.labels[back]}, expected {lattice.labels[want_back]}")

    return BlowupStructureReport(
        n=n,
        class_count=len(part.classes),
        pseudocomplemented=True,
        dual_pseudocomplemented=True,
        quotient_is_boolean=True,
        atom_pseudocomplements_ok=True,
    )


# spec-file parsing -------------------------------------------------------------

def parse_blowup_spec(text):
    """Parse the blow-up spec-file format.

    Grammar: a ``blowup n=<int>`` header, then ``chain <i,j,...> : <len>``
    lines; unlisted subsets default to length 1.  Blank lines and ``#``
    comments are ignored.
    """
    n = None
    lengths = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "blowup":
            if n is not None:
                raise ParseError("duplicate blowup header", lineno)
            if len(toks) != 2 or not toks[1].startswith("n="):
                raise ParseError("expected 'blowup n=<int>'", lineno)
            try:
                n = int(toks[1][2:])
            except ValueError:
                raise ParseError("atom count is not an integer", lineno) from None
            if n < 2:
                raise ParseError("atom count must be at least 2", lineno)
        elif toks[0] == "chain":
            if n is None:
                raise ParseError("blowup header must come first", lineno)
            body = line[len("chain"):]
            if ":" not in body:
                raise ParseError("expected 'chain <subset> : <length>'", lineno)
            subset_txt, _, len_txt = body.partition(":")
            try:
                atoms = [int(t) for t in subset_txt.replace(",", " ").split()]
                length = int(len_txt)
            except ValueError:
                raise ParseError("subset members and length must be integers", lineno) from None
            if not atoms:
                raise ParseError("empty subset", lineno)
            if any(not 1 <= a <= n for a in atoms):
                raise ParseError(f"subset members must lie in 1..{n}", lineno)
            key = frozenset(atoms)
            if len(key) == n:
                raise ParseError("subset must be a proper subset of the atoms", lineno)
            if key in lengths:
                raise ParseError(f"duplicate chain for subset {sorted(key)}", lineno)
            if length < 1:
                raise ParseError("chain length must be at least 1", lineno)
            lengths[key] = length
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'blowup n=<int>' header")
    return BlowUpSpec(n, lengths)


def load_blowup_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_blowup_spec(fh.read())
