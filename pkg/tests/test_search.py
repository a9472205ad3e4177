"""
Test the searches for words with few palindromic periodicities.

This test verifies that:
1. Canonical forms and palindromic-periodicity factor counts are correct
2. Breadth-first search closes at the known lengths and reports renamings
3. Periodic inventories are exact or reported as unbounded
4. Structural families recognise the words they describe
5. Binary palindromic periodicities are counted exactly
"""

from itertools import product

import pytest

from palper.exceptions import DomainError, UnboundedInventoryError, WordError
from palper.search import (
    A374495,
    BINARY_BLOCKS,
    BINARY_FAMILIES,
    TERNARY_FAMILIES,
    bfs_longest,
    canonical_form,
    count_binary_pp_words,
    count_binary_pp_words_naive,
    periodic_pp_set,
    pp_factor_count,
    pp_factor_set,
    pp_suffixes,
    verify_structural_forms,
)

PERIODIC_001011 = {
    "0", "1", "00", "01", "10", "11", "001", "010", "011", "100", "101", "110",
    "0010", "0101", "0110", "1001", "1011", "1100", "00101", "01011", "01100",
    "10010", "10110", "11001", "010110", "011001", "100101", "0110010", "1011001",
    "10010110",
}


def test_canonical_form():
    """Test renaming by first occurrence."""
    assert canonical_form("2101") == "0121"
    assert canonical_form("0012") == "0012"
    assert canonical_form("111") == "000"
    for w in ("2101", "5538", "0"):
        assert canonical_form(canonical_form(w)) == canonical_form(w), "Idempotent"


def test_pp_factor_counts():
    """Test counts of distinct nonempty palindromic-periodicity factors."""
    assert pp_factor_count("00000") == 5
    assert pp_factor_count("012") == 5
    assert pp_factor_count("") == 0
    assert pp_factor_set("012") == frozenset({"0", "1", "2", "01", "12"})
    assert pp_suffixes("0120") == ["20", "0"]


def test_counts_are_monotone_and_rename_invariant():
    """Test that extending a word never lowers its count and renaming keeps it."""
    for n in range(1, 7):
        for letters in product("012", repeat=n):
            w = "".join(letters)
            count = pp_factor_count(w)
            assert count == pp_factor_count(canonical_form(w))
            for a in "012":
                assert pp_factor_count(w + a) >= count, f"Count dropped extending {w}"


def test_bfs_threshold_five():
    """Test that at most five palindromic periodicities allow length 5 at most."""
    report = bfs_longest(5, 10)
    assert report.closed
    assert report.length_reached == 5
    assert report.extremal_words == ("00000",)
    assert report.frontier_sizes[0] == 1

    print("✅ Threshold 5 search closes at 00000")


def test_bfs_fixed_alphabets():
    """Test unary and binary searches and renamings."""
    unary = bfs_longest(1, 10, alphabet=1)
    assert unary.closed and unary.length_reached == 1
    assert unary.extremal_words == ("0",)

    binary = bfs_longest(3, 3, alphabet=2)
    assert binary.closed, "000 has no extension with at most 3"
    assert binary.renamings() == ("000", "111")
    assert binary.to_dict()["extremal_words"] == ["000"]


def test_bfs_open_search():
    """Test that a search stopped by its cap reports an open frontier."""
    report = bfs_longest(5, 3)
    assert not report.closed
    assert report.length_reached == 3


def test_bfs_argument_checks():
    """Test threshold, cap and alphabet validation."""
    with pytest.raises(DomainError):
        bfs_longest(0, 5)
    with pytest.raises(DomainError):
        bfs_longest(3, 5, alphabet=11)


def test_periodic_inventories():
    """Test the inventories of (012) and (001011) repeated forever."""
    assert periodic_pp_set("012") == frozenset({"0", "1", "2", "01", "12", "20"})
    assert periodic_pp_set("001011") == frozenset(PERIODIC_001011)
    assert len(PERIODIC_001011) == 30

    with pytest.raises(UnboundedInventoryError, match="unbounded"):
        periodic_pp_set("01")
    with pytest.raises(WordError):
        periodic_pp_set("")


def test_pattern_families():
    """Test membership in the ternary and binary families."""
    first = TERNARY_FAMILIES[0]
    assert first.matches("0012012")
    assert first.matches("001"), "i = 0 is allowed"
    assert not first.matches("0000000")
    assert TERNARY_FAMILIES[2].matches("01230123012")

    binary = BINARY_FAMILIES[0]
    assert len(BINARY_BLOCKS) == 14
    assert binary.matches("0" + "001011" * 3 + "1")
    assert binary.matches("11" + "110100" * 2), "Complements of blocks are included"


def test_ternary_structural_forms():
    """Test that long words with at most 8 periodicities fit the four families."""
    report = verify_structural_forms(8, range(9, 12), TERNARY_FAMILIES)
    assert report.passed, f"Violations: {report.violations[:5]}"
    assert report.checked > 0
    assert report.lengths == (9, 10, 11)


def test_binary_structural_forms():
    """Test that binary words longer than 43 with at most 43 periodicities fit the block family."""
    report = verify_structural_forms(43, range(44, 51), BINARY_FAMILIES, alphabet=2)
    assert report.passed, f"Violations: {report.violations[:5]}"
    assert report.checked > 0

    at_threshold = verify_structural_forms(43, [43], BINARY_FAMILIES, alphabet=2)
    assert "0" * 43 in at_threshold.violations, "The families only describe longer words"


def test_binary_search_at_threshold_29():
    """Test that binary words with at most 29 periodicities stop at the constant words of length 29."""
    report = bfs_longest(29, 40, alphabet=2)
    assert report.closed
    assert report.length_reached == 29
    assert report.renamings(2) == ("0" * 29, "1" * 29)


def test_structural_forms_report_violations():
    """Test that survivors fitting no family are reported verbatim."""
    report = verify_structural_forms(8, [9], ())
    assert not report.passed
    assert report.checked == len(report.violations)


def test_binary_pp_word_counts():
    """Test the published counts and the constructive count against enumeration."""
    assert len(A374495) == 21
    for n in range(1, 13):
        count = count_binary_pp_words(n)
        assert count == A374495[n - 1], f"n={n}: {count}"
        assert count >= 2 ** ((n + 1) // 2)
    for n in range(1, 11):
        assert count_binary_pp_words(n) == count_binary_pp_words_naive(n)
    with pytest.raises(DomainError):
        count_binary_pp_words(0)


@pytest.mark.slow
def test_binary_pp_word_counts_to_21():
    """Test all 21 published counts."""
    assert [count_binary_pp_words(n) for n in range(1, 22)] == list(A374495)


@pytest.mark.slow
def test_binary_structural_forms_to_80():
    """Test the binary block family on lengths 44 to 80."""
    report = verify_structural_forms(43, range(44, 81), BINARY_FAMILIES, alphabet=2)
    assert report.passed, f"Violations: {report.violations[:5]}"


@pytest.mark.slow
def test_ternary_structural_forms_to_14():
    """Test the ternary families on lengths 9 to 14."""
    assert verify_structural_forms(8, range(9, 15), TERNARY_FAMILIES).passed
