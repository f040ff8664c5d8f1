import pytest

from latdim.blowup import BlowUpSpec
from latdim.lattice import lattice_from_pairs

# chain lengths of the worked 14-element blow-up example:
# {1}->3, {2}->1, {3}->2, {1,2}->2, {1,3}->3, {2,3}->1
FIG3_LENGTHS = {
    frozenset({1}): 3,
    frozenset({2}): 1,
    frozenset({3}): 2,
    frozenset({1, 2}): 2,
    frozenset({1, 3}): 3,
    frozenset({2, 3}): 1,
}


@pytest.fixture
def fig3_spec():
    return BlowUpSpec(3, FIG3_LENGTHS)


def make_m3():
    """Five-element lattice with three atoms below a common top."""
    pairs = [(0, a) for a in (1, 2, 3, 4)] + [(a, 4) for a in (1, 2, 3)]
    return lattice_from_pairs(5, pairs, labels=["0", "a", "b", "c", "1"])


@pytest.fixture
def m3():
    return make_m3()


def brute_force_mis_size(g):
    """Independent MIS oracle: scan all vertex subsets (n <= ~16)."""
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(g.adj[v] & mask == 0 for v in range(g.n) if (mask >> v) & 1):
            best = size
    return best
