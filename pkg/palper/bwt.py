"""Burrows-Wheeler transform and perfectly clustered words."""

import logging
from typing import Iterator

from .exceptions import WordError
from .words import DIGITS, Word, conjugates

logger = logging.getLogger(__name__)


def bwt(w: Word) -> Word:
    """Last letters of the sorted conjugates of ``w``, repeated rotations kept."""
    if not w:
        raise WordError("undefined on empty word")
    return "".join(rotation[-1] for rotation in sorted(conjugates(w)))


def is_perfectly_clustered(w: Word, k: int) -> bool:
    if not 1 <= k <= len(DIGITS):
        raise WordError(f"alphabet size must be in 1..10, got {k}")
    top = DIGITS[k - 1]
    if any(symbol > top for symbol in w):
        raise WordError(f"symbol outside alphabet of size {k}")
    transformed = bwt(w)
    return all(a >= b for a, b in zip(transformed, transformed[1:]))


def necklaces(length: int, k: int) -> Iterator[Word]:
    """Lexicographically least representative of every conjugacy class (FKM order)."""
    if length < 1:
        return
    a = [0] * (length + 1)
    t = 1
    # iterative Fredricksen-Kessler-Maiorana
    while True:
        if length % t == 0:
            yield "".join(DIGITS[x] for x in a[1 : length + 1])
        t = length
        while t > 0 and a[t] == k - 1:
            t -= 1
        if t == 0:
            return
        a[t] += 1
        for j in range(t + 1, length + 1):
            a[j] = a[j - t]
