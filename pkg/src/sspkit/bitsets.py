"""Subsets of an ordered ground set as int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(positions: Iterable[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def submasks(mask: int) -> Iterator[int]:
    """All subsets of mask's bits, descending as integers (mask first, 0 last)."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask
