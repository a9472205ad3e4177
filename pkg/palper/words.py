"""
Core string primitives.

Words are plain ``str`` values over the digits ``'0'..'9'``.  Character order
is the natural order of the symbols, so slicing, reversal and sorting work
directly on the strings.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from .exceptions import WordError

logger = logging.getLogger(__name__)

Word = str

DIGITS = "0123456789"


def as_word(value: Union[str, Iterable[int]]) -> Word:
    """Convert a digit string or a sequence of small integers into a word."""
    if isinstance(value, str):
        word = value.strip()
    else:
        try:
            word = "".join(DIGITS[symbol] for symbol in value)
        except (IndexError, TypeError) as e:
            raise WordError(f"symbols must be integers 0-9: {e}") from e
    for symbol in word:
        if symbol not in DIGITS:
            raise WordError(f"invalid symbol {symbol!r}: words are strings over 0-9")
    return word


def symbols(w: Word) -> Tuple[int, ...]:
    """Return the integer symbols of ``w``."""
    return tuple(int(c) for c in w)


def _require_nonempty(w: Word) -> None:
    if not w:
        raise WordError("undefined on empty word")


def reverse(w: Word) -> Word:
    """Mirror image of ``w``."""
    return w[::-1]


def is_palindrome(w: Word) -> bool:
    return w == w[::-1]


@dataclass(frozen=True)
class BorderTable:
    """Longest proper border of every prefix of a word.

    ``borders[l]`` is the length of the longest proper border of ``w[:l]``;
    ``borders[0] == 0``.
    """

    borders: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.borders) - 1

    def longest(self, prefix_length: Optional[int] = None) -> int:
        if prefix_length is None:
            prefix_length = self.length
        return self.borders[prefix_length]

    def all_borders(self) -> List[int]:
        """Lengths of all proper borders of the whole word, longest first."""
        found = []
        b = self.borders[self.length] if self.length else 0
        while b > 0:
            found.append(b)
            b = self.borders[b]
        return found


def border_table(w: Word) -> BorderTable:
    """Failure function of ``w`` in one left-to-right pass."""
    n = len(w)
    borders = [0] * (n + 1)
    k = 0
    for i in range(1, n):
        while k > 0 and w[i] != w[k]:
            k = borders[k]
        if w[i] == w[k]:
            k += 1
        borders[i + 1] = k
    return BorderTable(tuple(borders))


class PalindromeOracle:
    """Constant-time palindrome queries on the factors of one word.

    Built from the odd and even palindromic radii (Manacher).
    """

    def __init__(self, w: Word):
        self.word = w
        n = len(w)
        self.odd = [0] * n
        self.even = [0] * n

        left, right = 0, -1
        for i in range(n):
            k = 1 if i > right else min(self.odd[left + right - i], right - i + 1)
            while i - k >= 0 and i + k < n and w[i - k] == w[i + k]:
                k += 1
            self.odd[i] = k
            if i + k - 1 > right:
                left, right = i - k + 1, i + k - 1

        left, right = 0, -1
        for i in range(n):
            k = 0 if i > right else min(self.even[left + right - i + 1], right - i + 1)
            while i - k - 1 >= 0 and i + k < n and w[i - k - 1] == w[i + k]:
                k += 1
            self.even[i] = k
            if i + k - 1 > right:
                left, right = i - k, i + k - 1

    def __len__(self):
        return len(self.word)

    def is_palindrome(self, i: int, j: int) -> bool:
        """Is ``w[i..j]`` (inclusive) a palindrome?  Empty ranges are."""
        length = j - i + 1
        if length <= 0:
            return True
        if length % 2:
            return self.odd[(i + j) // 2] >= (length + 1) // 2
        return self.even[(i + j + 1) // 2] >= length // 2

    def symmetric_split(self, start: int, stop: int) -> Optional[int]:
        """Smallest split of ``w[start:stop]`` into two palindromes, relative to ``start``."""
        for m in range(stop - start + 1):
            if self.is_palindrome(start, start + m - 1) and self.is_palindrome(start + m, stop - 1):
                return m
        return None


@dataclass(frozen=True)
class PPWitness:
    """A pair of palindromes certifying a palindromic periodicity."""

    p: Word
    s: Word

    @property
    def period(self) -> int:
        return len(self.p) + len(self.s)

    def __str__(self):
        return f"p={self.p} s={self.s}"


def _witness(root: Word, m: int) -> PPWitness:
    # a palindromic root is reported as (root, empty)
    if m == 0:
        return PPWitness(root, "")
    return PPWitness(root[:m], root[m:])


def periods(w: Word) -> List[int]:
    """All periods of ``w`` in increasing order.

    A period p satisfies ``w[i] == w[i + p]`` wherever both sides exist, so the
    length of ``w`` is always the last one.  The periods are ``|w| - b`` for the
    borders b of ``w``.  Raises ``WordError`` on the empty word.
    """
    _require_nonempty(w)
    n = len(w)
    table = border_table(w)
    return sorted([n] + [n - b for b in table.all_borders()])


def fractional_root(w: Word) -> Word:
    """Prefix of ``w`` whose length is the smallest period."""
    return w[: periods(w)[0]]


def is_primitive(w: Word) -> bool:
    """True unless ``w`` is ``u^k`` for some ``k >= 2``."""
    _require_nonempty(w)
    n = len(w)
    p = n - border_table(w).longest()
    return p == n or n % p != 0


def is_symmetric(w: Word) -> Optional[int]:
    """Smallest ``m`` such that ``w[:m]`` and ``w[m:]`` are palindromes, if any."""
    return PalindromeOracle(w).symmetric_split(0, len(w))


def is_conjugate_of_reverse(w: Word) -> bool:
    """Is the reverse of ``w`` one of its rotations?"""
    return len(w) == 0 or w[::-1] in w + w


def conjugates(w: Word) -> List[Word]:
    """Rotations ``w[i:] + w[:i]`` for i in ``range(len(w))``; repeats are kept."""
    _require_nonempty(w)
    return [w[i:] + w[:i] for i in range(len(w))]


def has_symmetric_root(w: Word) -> bool:
    """Is the fractional root of ``w`` a product of two palindromes?"""
    return is_symmetric(fractional_root(w)) is not None


def is_pal_periodicity(w: Word) -> Optional[PPWitness]:
    """Witness of the smallest symmetric period of ``w``, or None."""
    if not w:
        return None
    oracle = PalindromeOracle(w)
    for p in periods(w):
        m = oracle.symmetric_split(0, p)
        if m is not None:
            return _witness(w[:p], m)
    return None


def symmetric_word_periods(w: Word) -> List[int]:
    """Periods p of ``w`` whose prefix ``w[:p]`` is symmetric."""
    oracle = PalindromeOracle(w)
    return [p for p in periods(w) if oracle.symmetric_split(0, p) is not None]


def pal_witness_for_period(w: Word, p: int) -> Optional[PPWitness]:
    """Witness using period ``p``, or None when ``p`` is not a symmetric period."""
    _require_nonempty(w)
    if not 1 <= p <= len(w) or w[p:] != w[: len(w) - p]:
        return None
    m = is_symmetric(w[:p])
    return None if m is None else _witness(w[:p], m)


def naive_pal_periodicity(w: Word) -> Optional[PPWitness]:
    """Direct check of every period and every split, without precomputation."""
    n = len(w)
    for p in range(1, n + 1):
        if w[p:] != w[: n - p]:
            continue
        for m in range(p + 1):
            left, right = w[:m], w[m:p]
            if left == left[::-1] and right == right[::-1]:
                return _witness(w[:p], m)
    return None


def symmetric_rotations(w: Word) -> List[int]:
    """Offsets i for which the rotation ``w[i:] + w[:i]`` is symmetric.

    Every rotation is a factor of ``w + w``, so one oracle answers all of them.
    """
    _require_nonempty(w)
    n = len(w)
    oracle = PalindromeOracle(w + w)
    return [i for i in range(n) if oracle.symmetric_split(i, i + n) is not None]
