"""
Exhaustive searches for words with few palindromic periodicities.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations, product
from math import ceil
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .exceptions import DomainError, UnboundedInventoryError, WordError
from .words import DIGITS, Word, conjugates, is_pal_periodicity
from .workers import parallel_map

logger = logging.getLogger(__name__)


def canonical_form(w: Word) -> Word:
    """Rename letters in order of first occurrence: 0, 1, 2, ..."""
    names: Dict[str, str] = {}
    for letter in w:
        if letter not in names:
            names[letter] = DIGITS[len(names)]
    return "".join(names[letter] for letter in w)


def pp_factor_set(w: Word) -> FrozenSet[Word]:
    """Distinct nonempty factors of ``w`` that are palindromic periodicities."""
    factors = {w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)}
    return frozenset(f for f in factors if is_pal_periodicity(f) is not None)


def pp_factor_count(w: Word) -> int:
    return len(pp_factor_set(w))


def pp_suffixes(w: Word) -> List[Word]:
    """Suffixes of ``w`` that are palindromic periodicities: the factors new in ``w``."""
    return [w[i:] for i in range(len(w)) if is_pal_periodicity(w[i:]) is not None]


@dataclass(frozen=True)
class SearchReport:
    threshold: int
    length_reached: int
    frontier_sizes: Tuple[int, ...]
    extremal_words: Tuple[Word, ...]
    closed: bool
    alphabet: Optional[int] = None

    def renamings(self, k: Optional[int] = None) -> Tuple[Word, ...]:
        """Every renaming of the extremal words inside a ``k``-letter alphabet."""
        k = k or self.alphabet
        if k is None:
            raise DomainError("renamings need a fixed alphabet size")
        found = set()
        for w in self.extremal_words:
            used = sorted(set(w))
            for image in permutations(DIGITS[:k], len(used)):
                table = dict(zip(used, image))
                found.add("".join(table[c] for c in w))
        return tuple(sorted(found))

    def to_dict(self):
        return {
            "threshold": self.threshold,
            "length_reached": self.length_reached,
            "frontier_sizes": list(self.frontier_sizes),
            "extremal_words": list(self.extremal_words),
            "closed": self.closed,
        }


def _letters_after(w: Word, alphabet: Optional[int]) -> str:
    top = int(max(w)) + 1 if w else 0
    limit = len(DIGITS) if alphabet is None else alphabet
    return DIGITS[: min(top + 1, limit)]


def _extend(task: Tuple[Word, FrozenSet[Word], int, Optional[int]]) -> List[Tuple[Word, FrozenSet[Word]]]:
    w, found, threshold, alphabet = task
    children = []
    for letter in _letters_after(w, alphabet):
        child = w + letter
        counted = found.union(pp_suffixes(child))
        if len(counted) <= threshold:
            children.append((child, counted))
    return children


def iter_levels(
    threshold: int,
    length_cap: int,
    alphabet: Optional[int] = None,
    threads: Optional[int] = None,
    progress: bool = False,
) -> Iterator[List[Tuple[Word, FrozenSet[Word]]]]:
    """Canonical words level by level, pruned at ``threshold`` palindromic periodicities.

    Counts only grow when a word is extended, so pruned words have no surviving
    extension.  Each node carries its set of palindromic-periodicity factors and
    an extension adds the new ones, which are exactly its pp suffixes.
    """
    if threshold < 1 or length_cap < 1:
        raise DomainError("threshold and length cap must be positive")
    if alphabet is not None and not 1 <= alphabet <= len(DIGITS):
        raise DomainError(f"alphabet size must be in 1..10, got {alphabet}")
    level = [("0", frozenset({"0"}))]
    bar = tqdm(total=length_cap, desc=f"threshold {threshold}", disable=not progress, unit="level")
    try:
        for length in range(1, length_cap + 1):
            if not level:
                return
            yield level
            bar.update(1)
            bar.set_postfix(frontier=len(level))
            logger.debug(f"threshold {threshold}: {len(level)} words of length {length}")
            if length == length_cap:
                return
            tasks = [(w, found, threshold, alphabet) for w, found in level]
            level = [child for children in parallel_map(_extend, tasks, threads) for child in children]
    finally:
        bar.close()


def bfs_longest(
    threshold: int,
    length_cap: int,
    alphabet: Optional[int] = None,
    threads: Optional[int] = None,
    progress: bool = False,
) -> SearchReport:
    """Breadth-first search for the longest words with at most ``threshold`` pp factors.

    ``alphabet=None`` lets the alphabet grow with the word; an integer fixes it.
    """
    sizes = []
    last: List[Tuple[Word, FrozenSet[Word]]] = []
    for level in iter_levels(threshold, length_cap, alphabet, threads, progress):
        sizes.append(len(level))
        last = level
    reached = len(sizes)
    closed = reached < length_cap or not _any_survivor(last, threshold, alphabet)
    if closed:
        logger.info(f"search with threshold {threshold} closed at length {reached}")
    else:
        logger.info(f"search with threshold {threshold} still open at length {length_cap}")
    return SearchReport(
        threshold, reached, tuple(sizes), tuple(sorted(w for w, _ in last)), closed, alphabet
    )


def _any_survivor(level, threshold, alphabet) -> bool:
    return any(_extend((w, found, threshold, alphabet)) for w, found in level)


def periodic_pp_set(x: Word, cap_multiplier: int = 8) -> FrozenSet[Word]:
    """Distinct nonempty palindromic-periodicity factors of ``x`` repeated forever."""
    if not x:
        raise WordError("undefined on empty word")
    if cap_multiplier < 2:
        raise DomainError("cap multiplier must be at least 2")
    limit = cap_multiplier * len(x)
    found = set()
    for length in range(1, limit + 1):
        unrolled = x * (ceil(length / len(x)) + 2)
        at_length = {
            f for f in (unrolled[i : i + length] for i in range(len(x))) if is_pal_periodicity(f) is not None
        }
        found.update(at_length)
        if length == limit and at_length:
            raise UnboundedInventoryError(
                f"unbounded: ({x})^omega has palindromic periodicities of length {limit}", limit
            )
    return frozenset(found)


@dataclass(frozen=True)
class PatternFamily:
    """Words ``x y^i z`` with ``x``, ``y``, ``z`` drawn from the three sets, ``i >= 0``."""

    prefixes: FrozenSet[Word]
    blocks: FrozenSet[Word]
    suffixes: FrozenSet[Word]
    label: str = ""

    def matches(self, w: Word) -> bool:
        n = len(w)
        prefix_lengths = sorted({len(x) for x in self.prefixes})
        suffix_lengths = sorted({len(z) for z in self.suffixes})
        block_lengths = sorted({len(y) for y in self.blocks})
        for a in prefix_lengths:
            if a > n or w[:a] not in self.prefixes:
                continue
            for c in suffix_lengths:
                if a + c > n or w[n - c :] not in self.suffixes:
                    continue
                middle = w[a : n - c]
                if not middle:
                    return True
                for b in block_lengths:
                    if len(middle) % b == 0 and middle[:b] in self.blocks and middle == middle[:b] * (len(middle) // b):
                        return True
        return False


def _words_up_to(length: int, alphabet: str = "01") -> FrozenSet[Word]:
    return frozenset("".join(t) for n in range(length + 1) for t in product(alphabet, repeat=n))


def _conjugacy_closure(blocks: Iterable[Word], with_complements: bool = False) -> FrozenSet[Word]:
    flip = str.maketrans("01", "10")
    closed = set()
    for y in blocks:
        variants = [y, y.translate(flip)] if with_complements else [y]
        for v in variants:
            closed.update(conjugates(v))
    return frozenset(closed)


TERNARY_FAMILIES = (
    PatternFamily(frozenset({"0"}), frozenset({"012"}), frozenset({"", "0", "01"}), "0(012)^i{e,0,01}"),
    PatternFamily(
        frozenset({""}),
        frozenset({"012"}),
        frozenset({"", "0", "2", "3", "00", "01", "03", "011", "013"}),
        "(012)^i{e,0,2,3,00,01,03,011,013}",
    ),
    PatternFamily(frozenset({""}), frozenset({"0123"}), frozenset({"", "0", "01", "012"}), "(0123)^i{e,0,01,012}"),
    PatternFamily(frozenset({"0"}), frozenset({"123"}), frozenset({"", "1", "12"}), "0(123)^i{e,1,12}"),
)

BINARY_BLOCKS = (
    "001011", "001101", "0001011", "0001101", "0010111", "0011101", "00001011",
    "00001101", "00010111", "00011101", "00101011", "00101111", "00110101", "00111101",
)

BINARY_FAMILIES = (
    PatternFamily(
        _words_up_to(5),
        _conjugacy_closure(BINARY_BLOCKS, with_complements=True),
        _words_up_to(5),
        "x y^i z, |x|,|z| <= 5, y conjugate to a block",
    ),
)


@dataclass(frozen=True)
class FormsReport:
    threshold: int
    lengths: Tuple[int, ...]
    checked: int
    violations: Tuple[Word, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {
            "threshold": self.threshold,
            "lengths": list(self.lengths),
            "checked": self.checked,
            "violations": list(self.violations),
        }


def verify_structural_forms(
    threshold: int,
    lengths: Sequence[int],
    forms: Sequence[PatternFamily],
    alphabet: Optional[int] = None,
    threads: Optional[int] = None,
    progress: bool = False,
) -> FormsReport:
    """Every canonical word in ``lengths`` with at most ``threshold`` pp factors fits a family."""
    wanted = set(lengths)
    if not wanted:
        return FormsReport(threshold, (), 0)
    checked = 0
    violations = []
    for level in iter_levels(threshold, max(wanted), alphabet, threads, progress):
        length = len(level[0][0])
        if length not in wanted:
            continue
        for w, _ in level:
            checked += 1
            if not any(family.matches(w) for family in forms):
                violations.append(w)
    if violations:
        logger.warning(f"{len(violations)} words with at most {threshold} pp factors fit no family")
    return FormsReport(threshold, tuple(sorted(wanted)), checked, tuple(sorted(violations)))


def _palindromes(length: int) -> List[Word]:
    half = (length + 1) // 2
    found = []
    for bits in product("01", repeat=half):
        left = "".join(bits)
        found.append(left + left[: length // 2][::-1])
    return found


def _pp_words_with_period(task: Tuple[int, int]) -> FrozenSet[Word]:
    n, p = task
    found = set()
    palindromes = {m: _palindromes(m) for m in range(p + 1)}
    repeats = n // p + 1
    for m in range(p + 1):
        for left in palindromes[m]:
            for right in palindromes[p - m]:
                found.add(((left + right) * repeats)[:n])
    return frozenset(found)


def count_binary_pp_words(n: int, threads: Optional[int] = None) -> int:
    """Number of binary palindromic periodicities of length ``n`` (both labelings)."""
    if n < 1:
        raise DomainError("length must be positive")
    found = set()
    for words in parallel_map(_pp_words_with_period, [(n, p) for p in range(1, n + 1)], threads):
        found.update(words)
    return len(found)


def count_binary_pp_words_naive(n: int) -> int:
    return sum(1 for bits in product("01", repeat=n) if is_pal_periodicity("".join(bits)) is not None)


A374495 = (
    2, 4, 8, 16, 32, 58, 108, 190, 336, 560, 948, 1574, 2568,
    4116, 6596, 10444, 16320, 25488, 39216, 60690, 92204,
)
