"""
Prefix generators for the infinite words studied here.

A ``SequenceSpec`` is an immutable recipe; ``prefix(spec, n)`` returns the first
``n`` symbols.  Generated prefixes are cached by power-of-two size so that
repeated census passes over the same word do not regenerate it.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Callable, Dict, Mapping, Tuple

from .exceptions import SequenceError
from .words import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Morphism:
    """Letter-to-word substitution."""

    images: Tuple[Tuple[str, Word], ...]

    @classmethod
    def of(cls, images: Mapping[str, Word]) -> "Morphism":
        return cls(tuple(sorted(images.items())))

    @property
    def table(self) -> Dict[str, Word]:
        return dict(self.images)

    def __call__(self, w: Word) -> Word:
        return apply_morphism(self, w)


def apply_morphism(m: Morphism, w: Word) -> Word:
    table = m.table
    try:
        return "".join(table[letter] for letter in w)
    except KeyError as e:
        raise SequenceError(f"morphism has no image for letter {e.args[0]!r}") from e


class SequenceSpec:
    """Base class for infinite-word recipes."""

    name = "sequence"

    def generate(self, length: int) -> Word:
        """Return a prefix of at least ``length`` symbols."""
        raise NotImplementedError


@dataclass(frozen=True)
class FixedPoint(SequenceSpec):
    morphism: Morphism
    seed: str
    name: str = "fixed point"

    def __post_init__(self):
        image = self.morphism.table.get(self.seed, "")
        if not image.startswith(self.seed) or len(image) < 2:
            raise SequenceError(
                f"the image of seed {self.seed!r} must start with it and be longer than one letter"
            )

    def generate(self, length: int) -> Word:
        w = self.seed
        while len(w) < length:
            w = apply_morphism(self.morphism, w)
        return w


@dataclass(frozen=True)
class MorphicImage(SequenceSpec):
    """An outer morphism applied letterwise to another infinite word."""

    outer: Morphism
    inner: SequenceSpec
    name: str = "morphic image"

    def generate(self, length: int) -> Word:
        if any(not image for _, image in self.outer.images):
            raise SequenceError("morphic images need nonempty letter images")
        # every image is nonempty, so length inner symbols are enough
        return apply_morphism(self.outer, prefix(self.inner, length))


@dataclass(frozen=True)
class DirectRule(SequenceSpec):
    """Symbol ``i`` computed directly from the index ``i``."""

    rule: Callable[[int], int]
    name: str = "direct rule"

    def generate(self, length: int) -> Word:
        return "".join(str(self.rule(i)) for i in range(length))


@dataclass(frozen=True)
class Unfolding(SequenceSpec):
    """Limit of ``p_{k+1} = p_k 0 complement(reverse(p_k))`` from ``p_0 = 0``."""

    name: str = "unfolding"

    def generate(self, length: int) -> Word:
        w = "0"
        flip = str.maketrans("01", "10")
        while len(w) < length:
            w = w + "0" + w[::-1].translate(flip)
        return w


@dataclass(frozen=True)
class EventuallyPeriodic(SequenceSpec):
    preperiod: Word
    period: Word
    name: str = "eventually periodic"

    def __post_init__(self):
        if not self.period:
            raise SequenceError("eventually periodic words need a nonempty period")

    def generate(self, length: int) -> Word:
        repeats = max(0, length - len(self.preperiod)) // len(self.period) + 1
        return self.preperiod + self.period * repeats


def _next_power_of_two(n: int) -> int:
    size = 1
    while size < n:
        size *= 2
    return size


@lru_cache(maxsize=64)
def _expanded(spec: SequenceSpec, size: int) -> Word:
    logger.debug(f"generating {size} symbols of {spec.name}")
    return spec.generate(size)


def prefix(spec: SequenceSpec, length: int) -> Word:
    if length < 0:
        raise SequenceError(f"prefix length must be nonnegative, got {length}")
    if not isinstance(spec, SequenceSpec):
        raise SequenceError(f"not a sequence spec: {spec!r}")
    if length == 0:
        return ""
    w = _expanded(spec, _next_power_of_two(length))
    if len(w) < length:
        raise SequenceError(f"{spec.name} produced only {len(w)} of {length} symbols")
    return w[:length]


def factor(spec: SequenceSpec, i: int, n: int) -> Word:
    if i < 0 or n < 0:
        raise SequenceError("factor position and length must be nonnegative")
    if n == 0:
        return ""
    return prefix(spec, i + n)[i:]


def rudin_shapiro_symbol(i: int) -> int:
    """Parity of the number of (overlapping) ``11`` blocks in binary ``i``."""
    return bin(i & (i >> 1)).count("1") % 2


def thue_morse_symbol(i: int) -> int:
    return bin(i).count("1") % 2


def paperfolding_symbol(i: int) -> int:
    """Write ``i + 1 = 2^k (2m + 1)``; the symbol is ``m mod 2``."""
    n = i + 1
    while n % 2 == 0:
        n //= 2
    return (n >> 1) & 1


FIBONACCI = Morphism.of({"0": "01", "1": "0"})
TAU = Morphism.of({"0": "0", "1": "12"})
PHI = Morphism.of({"0": "0", "1": "01101"})

_BUILTINS: Dict[str, SequenceSpec] = {
    "thue_morse": FixedPoint(Morphism.of({"0": "01", "1": "10"}), "0", "thue_morse"),
    "period_doubling": FixedPoint(Morphism.of({"1": "10", "0": "11"}), "1", "period_doubling"),
    "rudin_shapiro": DirectRule(rudin_shapiro_symbol, "rudin_shapiro"),
    "paperfolding": Unfolding("paperfolding"),
    "fibonacci": FixedPoint(FIBONACCI, "0", "fibonacci"),
    "tribonacci": FixedPoint(Morphism.of({"0": "01", "1": "02", "2": "0"}), "0", "tribonacci"),
}
_BUILTINS["tau_f"] = MorphicImage(TAU, _BUILTINS["fibonacci"], "tau_f")
_BUILTINS["phi_f"] = MorphicImage(PHI, _BUILTINS["fibonacci"], "phi_f")

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> SequenceSpec:
    try:
        return _BUILTINS[name]
    except KeyError:
        raise SequenceError(
            f"unknown sequence {name!r}; valid names: {', '.join(BUILTIN_NAMES)}"
        ) from None


def has_kth_power(w: Word, k: int) -> bool:
    """Does some factor of ``w`` have length at least ``k`` times one of its periods?"""
    if k < 2:
        raise SequenceError("power exponent must be at least 2")
    n = len(w)
    for p in range(1, n // k + 1):
        needed = (k - 1) * p
        matches = (a == b for a, b in zip(w, w[p:]))
        for equal, run in groupby(matches):
            if equal and sum(1 for _ in run) >= needed:
                return True
    return False


def check_no_kth_power(spec: SequenceSpec, k: int, prefix_len: int) -> bool:
    if prefix_len < 1:
        raise SequenceError("prefix length must be positive")
    return not has_kth_power(prefix(spec, prefix_len), k)
