"""
Membership tests for finite Sturmian, trapezoidal, central, standard, rich and
closed words.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .exceptions import WordError
from .words import PalindromeOracle, Word, border_table

logger = logging.getLogger(__name__)


def _require_binary(w: Word) -> None:
    if w.strip("01"):
        raise WordError("binary input required")


@dataclass(frozen=True)
class PathologicalPair:
    """Minimal ``u`` with both ``0u0`` and ``1u1`` occurring in a host word."""

    u: Word
    zero_position: int
    one_position: int

    @property
    def pair(self):
        return f"0{self.u}0", f"1{self.u}1"


def _first_occurrences(w: Word, length: int, letter: str) -> dict:
    """Map middle ``u`` to the first position of ``letter u letter`` in ``w``."""
    found = {}
    for i in range(len(w) - length + 1):
        if w[i] == letter and w[i + length - 1] == letter:
            found.setdefault(w[i + 1 : i + length - 1], i)
    return found


def pathological_pair(w: Word) -> Optional[PathologicalPair]:
    """Shortest middle ``u`` with ``0u0`` and ``1u1`` both factors of ``w``.

    Ties go to the ``u`` whose ``0u0`` occurs first.  Returns None when ``w`` is
    balanced.  Binary input only.
    """
    _require_binary(w)
    for length in range(2, len(w) + 1):
        zeros = _first_occurrences(w, length, "0")
        if not zeros:
            continue
        ones = _first_occurrences(w, length, "1")
        common = [u for u in zeros if u in ones]
        if common:
            u = min(common, key=lambda middle: zeros[middle])
            return PathologicalPair(u, zeros[u], ones[u])
    return None


def is_finite_sturmian(w: Word) -> bool:
    """Balanced binary word: no pathological pair."""
    if not w:
        raise WordError("undefined on empty word")
    return pathological_pair(w) is None


def factor_complexity(w: Word, n: int) -> int:
    """Number of distinct factors of length ``n``."""
    if not 0 <= n <= len(w):
        raise WordError(f"factor length {n} outside [0, {len(w)}]")
    return len({w[i : i + n] for i in range(len(w) - n + 1)})


def is_trapezoidal(w: Word) -> bool:
    """At most ``n + 1`` distinct factors of every length ``n``."""
    _require_binary(w)
    if not w:
        raise WordError("undefined on empty word")
    return all(factor_complexity(w, n) <= n + 1 for n in range(len(w) + 1))


def is_central(u: Word) -> bool:
    """All four of ``0u0``, ``0u1``, ``1u0`` and ``1u1`` are finite Sturmian."""
    _require_binary(u)
    return all(pathological_pair(f"{a}{u}{b}") is None for a in "01" for b in "01")


def is_standard_sturmian(w: Word) -> bool:
    """``w = u01`` or ``w = u10`` with ``u`` central."""
    _require_binary(w)
    if len(w) < 2:
        raise WordError("standard words have length at least 2")
    return w[-2:] in ("01", "10") and is_central(w[:-2])


def palindromic_factors(w: Word) -> set:
    """Distinct nonempty palindromic factors of ``w``."""
    oracle = PalindromeOracle(w)
    found = set()
    n = len(w)
    for i in range(n):
        for k in range(oracle.odd[i]):
            found.add(w[i - k : i + k + 1])
        for k in range(1, oracle.even[i] + 1):
            found.add(w[i - k : i + k])
    return found


def distinct_palindromic_factors(w: Word) -> int:
    return len(palindromic_factors(w))


def is_rich(w: Word) -> bool:
    """Exactly ``len(w)`` distinct nonempty palindromic factors, the most possible."""
    return distinct_palindromic_factors(w) == len(w)


def is_closed(w: Word) -> bool:
    """Single letters, and words with a border occurring only as prefix and suffix."""
    if not w:
        raise WordError("undefined on empty word")
    n = len(w)
    if n == 1:
        return True
    for b in border_table(w).all_borders():
        # the border occurs at 0; its next occurrence must be the suffix one
        if w.find(w[:b], 1) == n - b:
            return True
    return False


def iter_language(
    predicate: Callable[[Word], bool], max_length: int, alphabet: str = "01"
) -> Iterator[Word]:
    """Yield every nonempty word up to ``max_length`` accepted by a prefix-closed predicate.

    Words come in length order, lexicographic inside each length.  Only accepted
    words are extended.
    """
    level = [a for a in alphabet if predicate(a)]
    length = 1
    while level and length <= max_length:
        yield from level
        logger.debug(f"language level {length}: {len(level)} words")
        if length == max_length:
            break
        level = [w + a for w in level for a in alphabet if predicate(w + a)]
        length += 1
