"""
Exhaustive property suites behind ``palper verify-paper``.

Each suite returns a ``SuiteResult``; failures hold the offending words or a
short description.  Ranges come from the selected tier.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from .bwt import bwt, is_perfectly_clustered, necklaces
from .census import (
    StabilizationPolicy,
    TribonacciNumbers,
    compare_formula,
    f_pd,
    f_tr,
    f_tr_case,
    pp_census,
    pp_inventory,
    rs_pf_max_length,
    verify_bounds,
)
from .classes import (
    is_closed,
    is_finite_sturmian,
    is_rich,
    is_standard_sturmian,
    is_trapezoidal,
    iter_language,
)
from .search import (
    A374495,
    BINARY_FAMILIES,
    TERNARY_FAMILIES,
    bfs_longest,
    count_binary_pp_words,
    periodic_pp_set,
    verify_structural_forms,
)
from .sequences import builtin, check_no_kth_power, factor, prefix
from .words import (
    conjugates,
    fractional_root,
    has_symmetric_root,
    is_conjugate_of_reverse,
    is_pal_periodicity,
    is_primitive,
    is_symmetric,
    naive_pal_periodicity,
    symmetric_rotations,
    symmetric_word_periods,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tier:
    name: str
    sturmian_max: int = 18
    trapezoidal_max: int = 18
    hierarchy_max: int = 12
    rich_max: int = 12
    symmetric_binary_max: int = 12
    symmetric_ternary_max: int = 8
    bwt_binary_max: int = 12
    bwt_ternary_max: int = 8
    bwt_rotation_max: int = 8
    oracle_binary_max: int = 12
    oracle_ternary_max: int = 7
    census_max: int = 64
    tribonacci_prefix_max: int = 2000
    binary_searches: bool = False


QUICK = Tier("quick")
FULL = Tier(
    "full",
    hierarchy_max=16,
    rich_max=16,
    symmetric_binary_max=14,
    symmetric_ternary_max=14,
    bwt_binary_max=14,
    bwt_ternary_max=14,
    bwt_rotation_max=12,
    oracle_binary_max=16,
    oracle_ternary_max=10,
    binary_searches=True,
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, description: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(description)

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:20],
            "notes": self.notes,
        }


def _all_words(max_length: int, alphabet: str):
    for n in range(1, max_length + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)


def definitional_examples(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("definitions")
    witness = is_pal_periodicity("121344312134")
    result.expect(witness is not None and (witness.p, witness.s) == ("121", "3443"), "121344312134 witness")
    result.expect(is_pal_periodicity("010110") is not None, "010110 is a palindromic periodicity")
    result.expect(is_pal_periodicity("010110010110") is None, "010110010110 is not")
    result.expect(is_pal_periodicity("0100110") is not None, "0100110 is a palindromic periodicity")
    result.expect(fractional_root("0100110") == "010011", "root of 0100110")
    result.expect(is_symmetric("010011") is None, "010011 is not symmetric")
    result.expect(fractional_root("0120120") == "012", "root of entente")
    result.expect(bwt("0120") == "2001", "BWT of 0120")
    return result


def symmetric_words(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    """Symmetric iff conjugate of reverse; symmetric iff powers are; the half-length consequence."""
    result = SuiteResult("symmetric-words")
    # every word is a rotation of exactly one necklace
    for k, limit in ((2, tier.symmetric_binary_max), (3, tier.symmetric_ternary_max)):
        for n in range(1, limit + 1):
            for w in necklaces(n, k):
                symmetric = set(symmetric_rotations(w))
                for i in range(n):
                    c = w[i:] + w[:i]
                    result.expect((i in symmetric) == is_conjugate_of_reverse(c), f"conjugate-of-reverse {c}")
    for alphabet in ("01", "012"):
        for w in _all_words(8, alphabet):
            symmetric = is_symmetric(w) is not None
            for k in (2, 3):
                result.expect((is_symmetric(w * k) is not None) == symmetric, f"power {k} of {w}")
    for w in _all_words(min(tier.symmetric_binary_max + 2, 16), "01"):
        if is_pal_periodicity(w) is not None and not has_symmetric_root(w):
            result.expect(2 * min(symmetric_word_periods(w)) > len(w), f"half-length period {w}")
    return result


def sturmian_factors(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("sturmian-factors")
    for w in iter_language(is_finite_sturmian, tier.sturmian_max):
        result.expect(is_pal_periodicity(w) is not None, w)
    return result


def trapezoidal_roots(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("trapezoidal-roots")
    for w in iter_language(is_trapezoidal, tier.trapezoidal_max):
        result.expect(has_symmetric_root(w), w)
    w = "010001000100010010010010010"
    root = fractional_root(w)
    result.expect(is_trapezoidal(w) and not is_finite_sturmian(w), "worked example is trapezoidal, not Sturmian")
    result.expect(len(root) == 24 and w == root + "010", "worked example root")
    result.expect(is_symmetric(root) is not None, "worked example root is symmetric")
    return result


def hierarchy(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    """Sturmian, trapezoidal, symmetric root and palindromic periodicity, nested and strict."""
    result = SuiteResult("hierarchy")
    levels = (
        ("sturmian", is_finite_sturmian),
        ("trapezoidal", is_trapezoidal),
        ("symmetric-root", has_symmetric_root),
        ("pp", lambda w: is_pal_periodicity(w) is not None),
    )
    witnesses: Dict[str, str] = {}
    for w in _all_words(tier.hierarchy_max, "01"):
        member = [test(w) for _, test in levels]
        for (inner, _), (outer, _), a, b in zip(levels, levels[1:], member, member[1:]):
            result.expect(not a or b, f"{w} is {inner} but not {outer}")
            if b and not a:
                witnesses.setdefault(f"{outer} not {inner}", w)
    for gap, w in witnesses.items():
        result.notes.append(f"first {gap}: {w}")
    result.expect(len(witnesses) == 3, "every inclusion is strict")
    result.expect(is_trapezoidal("0011") and not is_finite_sturmian("0011"), "0011 trapezoidal, not Sturmian")
    result.expect(is_pal_periodicity("0100110") is not None and not has_symmetric_root("0100110"),
                  "0100110 pp with non-symmetric root")
    result.expect(is_rich("001011") and is_pal_periodicity("001011") is None, "001011 rich, not pp")
    result.expect(not is_rich("001001101011") and is_pal_periodicity("001001101011") is not None,
                  "001001101011 pp, not rich")
    return result


def rich_words(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("rich-closed")
    for w in iter_language(is_rich, tier.rich_max):
        if is_closed(w):
            result.expect(is_pal_periodicity(w) is not None, f"rich and closed {w}")
    for w in iter_language(is_trapezoidal, tier.rich_max):
        result.expect(is_rich(w), f"trapezoidal not rich {w}")
    return result


def bwt_clustering(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("bwt-clustering")
    for k, limit in ((2, tier.bwt_binary_max), (3, tier.bwt_ternary_max)):
        for n in range(1, limit + 1):
            for w in necklaces(n, k):
                if not is_perfectly_clustered(w, k):
                    continue
                symmetric = set(symmetric_rotations(w))
                for i, c in enumerate(conjugates(w)):
                    result.expect(i in symmetric, f"clustered not symmetric {c}")
                    result.expect(is_pal_periodicity(c) is not None, f"clustered not pp {c}")
    for n in range(1, tier.bwt_rotation_max + 1):
        for w in necklaces(n, 3):
            transform = bwt(w)
            for c in set(conjugates(w)):
                result.expect(bwt(c) == transform, f"conjugacy invariance {c}")
    for n in range(2, min(tier.bwt_binary_max, 12) + 1):
        for w in necklaces(n, 2):
            if is_primitive(w):
                standard = any(is_standard_sturmian(c) for c in conjugates(w))
                result.expect(is_perfectly_clustered(w, 2) == standard, f"clustered vs standard {w}")
    return result


def period_doubling(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("period-doubling")
    result.expect(f_pd(0) == 0, "no nonempty factors of length 0")
    for row in compare_formula("period_doubling", 1, tier.census_max, policy):
        result.expect(bool(row.match), f"f_pd({row.n})={row.formula}, census {row.pp}")
    report = verify_bounds("period_doubling", 2, min(tier.census_max, 64), policy)
    result.expect(report.passed, "period-doubling bounds")
    expected_upper = [n for n in (3, 6, 12, 24, 48) if n <= tier.census_max]
    expected_lower = [n for n in (4, 9, 19, 39) if n <= tier.census_max]
    result.expect(report.tight_at("5n/3") == expected_upper, f"5n/3 tight at {report.tight_at('5n/3')}")
    result.expect(
        [n for n in report.tight_at("(6n+6)/5") if n >= 3] == expected_lower,
        f"(6n+6)/5 tight at {report.tight_at('(6n+6)/5')}",
    )
    pd = builtin("period_doubling")
    result.expect(factor(pd, 12, 9) == "101110111", "pd[12..20]")
    result.expect(9 in symmetric_word_periods(factor(pd, 12, 9)), "pd[12..20] has symmetric period 9")
    result.expect(is_pal_periodicity(factor(pd, 7, 9)) is None, "pd[7..15] is not pp")
    result.expect(factor(pd, 12, 9) == factor(pd, 8, 9), "pd[12..20] occurs at 8")
    return result


def thue_morse(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("thue-morse")
    for row in compare_formula("thue_morse", 3, tier.census_max, policy):
        result.expect(bool(row.match), f"f_tm({row.n})={row.formula}, census {row.pp}")
    report = verify_bounds("thue_morse", 3, tier.census_max, policy)
    result.expect(report.passed, "Thue-Morse bounds")
    if tier.census_max >= 31:
        result.expect(31 in report.tight_at("(n+17)/2"), "lower bound tight at 31")
    upper = {n for n in (3, 12, 48) if n <= tier.census_max}
    result.expect(upper <= set(report.tight_at("(8n-6)/3")), f"upper bound tight at {sorted(upper)}")
    return result


def finite_inventories(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("finite-inventories")
    expected = {
        "rudin_shapiro": (24, "011110110111100010000100", 334),
        "paperfolding": (21, "011000110111001001110", 255),
    }
    for name, (length, witness, total) in expected.items():
        report = rs_pf_max_length(name, policy)
        result.expect(report.length == length, f"{name} longest pp factor {report.length}")
        result.expect(witness in report.witnesses, f"{name} witness {witness}")
        result.expect(len(pp_inventory(name, policy)) == total, f"{name} inventory size")
    return result


def tribonacci(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("tribonacci")
    tr = builtin("tribonacci")
    word = prefix(tr, tier.tribonacci_prefix_max)
    for n in range(1, tier.tribonacci_prefix_max + 1):
        result.expect(is_pal_periodicity(word[:n]) is not None, f"prefix of length {n}")
    result.expect(is_pal_periodicity("102") is None, "102 is not pp")
    report = verify_bounds("tribonacci", 1, 50, policy)
    result.expect(all(c.holds for c in report.checks if c.bound == "2n+1"), "pp <= 2n+1")
    standard = TribonacciNumbers("standard")
    rows = pp_census(tr, 1, 50, policy)
    by_n = {row.n: row.pp for row in rows}
    result.expect(by_n[2] == 5 == f_tr(2, standard), "n=2 matches")
    result.expect(by_n[3] == 5 == f_tr(3, standard), "n=3 matches")
    for row in rows:
        if f_tr_case(row.n, standard) == 1:
            result.expect(row.pp == 2 * row.n + 1, f"first case at n={row.n}")
    for convention in ("standard", "literal"):
        numbers = TribonacciNumbers(convention)
        disagreements = [row.n for row in rows if f_tr(row.n, numbers) != row.pp]
        result.notes.append(f"{convention} convention disagrees at n in {disagreements}")
    lower = [c.n for c in report.checks if c.bound == "alpha*n" and not c.holds]
    result.notes.append(f"pp > alpha*n fails at n in {lower}")
    return result


def few_pp_ternary(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("few-pp-ternary")
    report = bfs_longest(5, 10)
    result.expect(report.closed and report.length_reached == 5, "threshold 5 closes at length 5")
    result.expect(report.extremal_words == ("00000",), f"extremal {report.extremal_words}")
    result.expect(periodic_pp_set("012") == frozenset({"0", "1", "2", "01", "12", "20"}), "(012)^omega")
    tau = pp_inventory("tau_f", policy)
    result.expect(tau == frozenset({"0", "1", "2", "01", "12", "20", "00", "001", "200"}), "tau(f) inventory")
    result.expect(check_no_kth_power(builtin("tau_f"), 4, 5000), "tau(f) has no 4th power")
    forms = verify_structural_forms(8, range(9, 15), TERNARY_FAMILIES)
    result.expect(forms.passed, f"ternary forms violated by {forms.violations[:5]}")
    return result


PERIODIC_001011 = frozenset(
    "0 1 00 01 10 11 001 010 011 100 101 110 0010 0101 0110 1001 1011 1100 00101 01011 "
    "01100 10010 10110 11001 010110 011001 100101 0110010 1011001 10010110".split()
)


def few_pp_binary(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("few-pp-binary")
    result.expect(periodic_pp_set("001011") == PERIODIC_001011, "(001011)^omega")
    phi = pp_inventory("phi_f", policy)
    result.expect(len(phi) == 44 and max(map(len, phi)) == 9, "phi(f) inventory")
    result.expect(check_no_kth_power(builtin("phi_f"), 4, 5000), "phi(f) has no 4th power")
    if tier.binary_searches:
        # the families describe words longer than the threshold
        forms = verify_structural_forms(43, range(44, 81), BINARY_FAMILIES, alphabet=2)
        result.expect(forms.passed and forms.checked > 0, f"binary forms violated by {forms.violations[:5]}")
        report = bfs_longest(29, 40, alphabet=2)
        result.expect(report.closed and report.length_reached == 29, "threshold 29 closes at length 29")
        result.expect(report.renamings(2) == ("0" * 29, "1" * 29), "extremal 0^29 and 1^29")
    return result


def a374495(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("a374495")
    for n, expected in enumerate(A374495, start=1):
        count = count_binary_pp_words(n)
        result.expect(count == expected, f"n={n}: {count} != {expected}")
        result.expect(count >= 2 ** ((n + 1) // 2), f"n={n} below 2^ceil(n/2)")
    return result


def oracle_equivalence(tier: Tier, policy: StabilizationPolicy) -> SuiteResult:
    result = SuiteResult("oracle-equivalence")
    for alphabet, limit in (("01", tier.oracle_binary_max), ("012", tier.oracle_ternary_max)):
        for w in _all_words(limit, alphabet):
            result.expect(is_pal_periodicity(w) == naive_pal_periodicity(w), w)
    for name in ("period_doubling", "thue_morse"):
        rows = pp_census(name, 1, 12, policy)
        word = prefix(builtin(name), policy.initial)
        for row in rows:
            factors = {word[i : i + row.n] for i in range(len(word) - row.n + 1)}
            recount = sum(1 for f in factors if naive_pal_periodicity(f) is not None)
            result.expect(recount == row.pp, f"{name} recount at n={row.n}")
    return result


SUITES: Tuple[Tuple[str, Callable[[Tier, StabilizationPolicy], SuiteResult]], ...] = (
    ("definitions", definitional_examples),
    ("symmetric-words", symmetric_words),
    ("sturmian-factors", sturmian_factors),
    ("trapezoidal-roots", trapezoidal_roots),
    ("hierarchy", hierarchy),
    ("rich-closed", rich_words),
    ("bwt-clustering", bwt_clustering),
    ("period-doubling", period_doubling),
    ("thue-morse", thue_morse),
    ("finite-inventories", finite_inventories),
    ("tribonacci", tribonacci),
    ("few-pp-ternary", few_pp_ternary),
    ("few-pp-binary", few_pp_binary),
    ("a374495", a374495),
    ("oracle-equivalence", oracle_equivalence),
)

SUITE_NAMES = tuple(name for name, _ in SUITES)


def run_suites(
    tier: Tier,
    policy: Optional[StabilizationPolicy] = None,
    only: Optional[List[str]] = None,
) -> List[SuiteResult]:
    policy = policy or StabilizationPolicy()
    results = []
    for name, suite in SUITES:
        if only and name not in only:
            continue
        logger.info(f"running suite {name} ({tier.name} tier)")
        outcome = suite(tier, policy)
        if outcome.passed:
            logger.info(f"suite {name}: {outcome.checked} checks passed")
        else:
            logger.warning(f"suite {name}: {len(outcome.failures)} of {outcome.checked} checks failed")
        results.append(outcome)
    return results
