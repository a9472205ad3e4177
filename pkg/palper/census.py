"""
Counting palindromic-periodicity factors of infinite words.

Counts are taken over a finite prefix that is doubled until the requested
statistics stop changing, and compared with closed-form formulas.
"""

import csv
import io
import json
import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, FrozenSet, List, Optional, Tuple, Union

from .exceptions import DomainError, SequenceError, StabilizationError, UnboundedInventoryError
from .sequences import SequenceSpec, builtin, prefix
from .words import Word, is_pal_periodicity
from .workers import parallel_map

logger = logging.getLogger(__name__)

CENSUS_FIELDS = ("n", "factors", "pp", "formula", "match")


@dataclass(frozen=True)
class CensusRow:
    n: int
    factors: int
    pp: int
    formula: Optional[int] = None
    match: Optional[bool] = None

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class StabilizationPolicy:
    initial: int = 4096
    growth: int = 2
    cap: int = 2 ** 22

    def __post_init__(self):
        if self.initial < 1 or self.growth < 2 or self.cap < self.initial:
            raise DomainError(
                f"invalid stabilization policy: initial={self.initial}, growth={self.growth}, cap={self.cap}"
            )

    @classmethod
    def from_settings(cls, settings) -> "StabilizationPolicy":
        return cls(settings['initial_prefix'], settings['growth_factor'], settings['prefix_cap'])

    def start_for(self, n_max: int) -> int:
        return max(self.initial, n_max + 1)


def _resolve(spec: Union[str, SequenceSpec]) -> SequenceSpec:
    return builtin(spec) if isinstance(spec, str) else spec


@lru_cache(maxsize=1 << 17)
def _is_pp(w: Word) -> bool:
    return is_pal_periodicity(w) is not None


def distinct_factors(w: Word, n: int) -> set:
    return {w[i : i + n] for i in range(len(w) - n + 1)}


def _stabilize(spec: SequenceSpec, policy: StabilizationPolicy, measure: Callable, n_max: int, what: str):
    """Evaluate ``measure`` on growing prefixes until one growth step leaves it unchanged."""
    length = policy.start_for(n_max)
    if length > policy.cap:
        raise StabilizationError(f"prefix cap {policy.cap} is below the required length {length}", policy.cap)
    previous = measure(prefix(spec, length))
    while True:
        following = length * policy.growth
        if following > policy.cap:
            raise StabilizationError(
                f"{what} of {spec.name} did not stabilize before prefix cap {policy.cap}", policy.cap
            )
        current = measure(prefix(spec, following))
        if current == previous:
            logger.info(f"{what} of {spec.name} stable at prefix length {length}")
            return current
        logger.debug(f"{what} of {spec.name} changed between {length} and {following}")
        previous, length = current, following


def _count_row(task: Tuple[Word, int]) -> Tuple[int, int]:
    w, n = task
    factors = distinct_factors(w, n)
    return len(factors), sum(1 for f in factors if _is_pp(f))


def pp_census(
    spec: Union[str, SequenceSpec],
    n_lo: int,
    n_hi: int,
    policy: Optional[StabilizationPolicy] = None,
    threads: Optional[int] = None,
) -> List[CensusRow]:
    """Distinct length-n factors and how many are palindromic periodicities, n_lo..n_hi."""
    if not 1 <= n_lo <= n_hi:
        raise DomainError(f"census range must satisfy 1 <= n_lo <= n_hi, got {n_lo}..{n_hi}")
    spec = _resolve(spec)
    policy = policy or StabilizationPolicy()

    def measure(w: Word):
        counts = parallel_map(_count_row, [(w, n) for n in range(n_lo, n_hi + 1)], threads)
        return tuple(CensusRow(n, f, pp) for n, (f, pp) in zip(range(n_lo, n_hi + 1), counts))

    return list(_stabilize(spec, policy, measure, n_hi, "census"))


def _pp_factors_up_to(w: Word, probe_length: int) -> FrozenSet[Word]:
    found = set()
    for n in range(1, probe_length + 1):
        found.update(f for f in distinct_factors(w, n) if _is_pp(f))
    return frozenset(found)


def pp_inventory(
    spec: Union[str, SequenceSpec],
    policy: Optional[StabilizationPolicy] = None,
    probe_length: int = 64,
) -> FrozenSet[Word]:
    """Every distinct nonempty palindromic-periodicity factor, when there are finitely many."""
    if probe_length < 1:
        raise DomainError("probe length must be positive")
    spec = _resolve(spec)
    policy = policy or StabilizationPolicy()
    inventory = _stabilize(
        spec, policy, lambda w: _pp_factors_up_to(w, probe_length), probe_length, "inventory"
    )
    if any(len(f) == probe_length for f in inventory):
        raise UnboundedInventoryError(
            f"inventory may be infinite: {spec.name} has palindromic periodicities of the "
            f"probed length {probe_length}",
            probe_length,
        )
    return inventory


@dataclass(frozen=True)
class MaxLengthReport:
    name: str
    length: int
    witnesses: Tuple[Word, ...]


def rs_pf_max_length(
    spec: Union[str, SequenceSpec],
    policy: Optional[StabilizationPolicy] = None,
    probe_length: int = 64,
) -> MaxLengthReport:
    """Longest palindromic-periodicity factor length and all factors of that length."""
    spec = _resolve(spec)
    inventory = pp_inventory(spec, policy, probe_length)
    longest = max(len(f) for f in inventory)
    return MaxLengthReport(spec.name, longest, tuple(sorted(f for f in inventory if len(f) == longest)))


def _split_power(n: int) -> Tuple[int, int]:
    """``n = x + r`` with ``x`` the largest power of two not above ``n``."""
    x = 1 << (n.bit_length() - 1)
    return x, n - x


def f_pd(n: int) -> int:
    if n < 0:
        raise DomainError("formula defined for n >= 0")
    if n < 2:
        return (0, 2)[n]
    x, r = _split_power(n)
    if 4 * r < x:
        return 3 * x // 2
    if 2 * r < x:
        return 2 * x
    if 4 * r < 3 * x:
        return 3 * x - r
    return (7 * x - 2 * r) // 2


def f_tm(n: int) -> int:
    if n < 3:
        raise DomainError("formula defined for n >= 3")
    x, r = _split_power(n)
    k = x.bit_length() - 1
    if k % 2 == 0:
        if 4 * r < x:
            return 2 * x + 2 - 2 * r
        if 2 * r <= x:
            return 3 * x + 2 - 2 * r
        if 4 * r < 3 * x:
            return 4 * x + 4 - 4 * r
        return 5 * x + 4 - 4 * r
    if 8 * r < x:
        return 3 * x // 2 + 2 - 2 * r
    if 2 * r < x:
        return 2 * x + 2 - 2 * r
    if 2 * r == x:
        return 4 * x - 2
    return 6 * x + 4 - 4 * r


@lru_cache(maxsize=None)
def _tribonacci(convention: str, i: int) -> int:
    seeds = (0, 1, 2) if convention == "literal" else (0, 1, 2, 4)
    if i < 0:
        return 0
    if i < len(seeds):
        return seeds[i]
    return _tribonacci(convention, i - 1) + _tribonacci(convention, i - 2) + _tribonacci(convention, i - 3)


@dataclass(frozen=True)
class TribonacciNumbers:
    """``T_k`` under the literal (0,1,2,3,6,...) or standard (0,1,2,4,7,...) seeds."""

    convention: str = "standard"

    def __post_init__(self):
        if self.convention not in ("standard", "literal"):
            raise DomainError(f"unknown Tribonacci convention {self.convention!r}")

    def __getitem__(self, i: int) -> int:
        return _tribonacci(self.convention, i)

    def index_for(self, n: int) -> int:
        """Largest ``k`` with ``T_k <= n``."""
        k = 0
        while self[k + 1] <= n:
            k += 1
        return k


def f_tr_case(n: int, T: Optional[TribonacciNumbers] = None) -> int:
    if n < 0:
        raise DomainError("formula defined for n >= 0")
    T = T or TribonacciNumbers()
    k = T.index_for(n)
    if 2 * n <= T[k + 1] - T[k - 1] - 1:
        return 1
    if n < T[k] + T[k - 1]:
        return 2
    return 3


def f_tr(n: int, T: Optional[TribonacciNumbers] = None) -> int:
    T = T or TribonacciNumbers()
    k = T.index_for(n)
    case = f_tr_case(n, T)
    if case == 1:
        return 2 * n + 1
    if case == 2:
        return 2 * T[k + 1] + 2 * T[k - 1] - (2 * n + 1)
    return T[k + 1] + T[k - 1]


def formula_for(name: str, convention: str = "standard") -> Tuple[Callable[[int], int], int]:
    """Closed form for a builtin word and the least n it covers."""
    if name == "period_doubling":
        return f_pd, 0
    if name == "thue_morse":
        return f_tm, 3
    if name == "tribonacci":
        numbers = TribonacciNumbers(convention)
        return (lambda n: f_tr(n, numbers)), 0
    raise SequenceError(f"no closed form for {name!r}; available: period_doubling, thue_morse, tribonacci")


def compare_formula(
    name: str,
    n_lo: int,
    n_hi: int,
    policy: Optional[StabilizationPolicy] = None,
    convention: str = "standard",
    threads: Optional[int] = None,
) -> List[CensusRow]:
    """Census rows with the closed-form value and agreement filled in."""
    formula, start = formula_for(name, convention)
    rows = []
    for row in pp_census(name, n_lo, n_hi, policy, threads):
        if row.n < start:
            rows.append(row)
            continue
        value = formula(row.n)
        if value != row.pp:
            logger.warning(f"{name}: formula gives {value} at n={row.n}, census counts {row.pp}")
        rows.append(CensusRow(row.n, row.factors, row.pp, value, value == row.pp))
    return rows


# rational lower approximation of the real zero of X^3 + 2X^2 + 4X - 8
TRIBONACCI_ALPHA = Fraction("1.087378025384")


@dataclass(frozen=True)
class Bound:
    label: str
    kind: str
    start: int
    value: Callable[[int], Fraction]
    strict: bool = False

    def holds(self, n: int, pp: int) -> bool:
        v = self.value(n)
        if self.kind == "upper":
            return pp < v if self.strict else pp <= v
        return pp > v if self.strict else pp >= v


BOUNDS = {
    "period_doubling": (
        Bound("5n/3", "upper", 2, lambda n: Fraction(5 * n, 3)),
        Bound("(6n+6)/5", "lower", 3, lambda n: Fraction(6 * n + 6, 5)),
    ),
    "thue_morse": (
        Bound("(8n-6)/3", "upper", 6, lambda n: Fraction(8 * n - 6, 3)),
        Bound("(n+17)/2", "lower", 12, lambda n: Fraction(n + 17, 2)),
    ),
    "tribonacci": (
        Bound("2n+1", "upper", 1, lambda n: Fraction(2 * n + 1)),
        Bound("alpha*n", "lower", 1, lambda n: TRIBONACCI_ALPHA * n, strict=True),
    ),
}


@dataclass(frozen=True)
class BoundCheck:
    bound: str
    n: int
    pp: int
    value: Fraction
    holds: Optional[bool]
    tight: bool

    def to_dict(self):
        return {
            "bound": self.bound,
            "n": self.n,
            "pp": self.pp,
            "value": str(self.value),
            "holds": self.holds,
            "tight": self.tight,
        }


@dataclass(frozen=True)
class BoundsReport:
    name: str
    checks: Tuple[BoundCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.holds is not False for check in self.checks)

    def failures(self) -> List[BoundCheck]:
        return [check for check in self.checks if check.holds is False]

    def tight_at(self, label: str) -> List[int]:
        return [c.n for c in self.checks if c.bound == label and c.tight]


def verify_bounds(
    name: str,
    n_lo: int,
    n_hi: int,
    policy: Optional[StabilizationPolicy] = None,
    threads: Optional[int] = None,
) -> BoundsReport:
    """Check each inequality on its stated domain; record equality everywhere."""
    try:
        bounds = BOUNDS[name]
    except KeyError:
        raise SequenceError(f"no bounds for {name!r}; available: {', '.join(BOUNDS)}") from None
    rows = pp_census(name, n_lo, n_hi, policy, threads)
    checks = []
    for bound in bounds:
        for row in rows:
            value = bound.value(row.n)
            holds = bound.holds(row.n, row.pp) if row.n >= bound.start else None
            checks.append(BoundCheck(bound.label, row.n, row.pp, value, holds, row.pp == value))
    report = BoundsReport(name, tuple(checks))
    for failure in report.failures():
        logger.warning(f"{name}: bound {failure.bound} fails at n={failure.n} (pp={failure.pp})")
    return report


def rows_to_json(rows: List[CensusRow]) -> str:
    return json.dumps([row.to_dict() for row in rows], indent=2)


def rows_to_csv(rows: List[CensusRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CENSUS_FIELDS)
    for row in rows:
        writer.writerow(["" if getattr(row, f) is None else getattr(row, f) for f in CENSUS_FIELDS])
    return buffer.getvalue()
