"""Helpers for int-as-bitset manipulation."""


def bits(mask):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    """Pack an iterable of bit positions into a mask."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m
