"""
Test factor censuses, closed forms and bounds.

This test verifies that:
1. Census rows count distinct factors and palindromic periodicities
2. Prefix stabilization stops at the cap with a clear error
3. The closed forms match the census for period-doubling and Thue-Morse
4. Finite inventories are exact and infinite ones are reported
5. Bounds are checked on their domains with equality recorded everywhere
"""

import json

import pytest

from palper.census import (
    TRIBONACCI_ALPHA,
    CensusRow,
    StabilizationPolicy,
    TribonacciNumbers,
    compare_formula,
    f_pd,
    f_tm,
    f_tr,
    f_tr_case,
    formula_for,
    pp_census,
    pp_inventory,
    rows_to_csv,
    rows_to_json,
    rs_pf_max_length,
    verify_bounds,
)
from palper.exceptions import DomainError, SequenceError, StabilizationError, UnboundedInventoryError
from palper.words import naive_pal_periodicity
from palper.sequences import builtin, prefix

SMALL = StabilizationPolicy(initial=512, growth=2, cap=1 << 15)


def test_period_doubling_census_small():
    """Test the first census rows of period-doubling by hand."""
    rows = pp_census("period_doubling", 1, 4, SMALL)
    assert [(r.n, r.factors, r.pp) for r in rows[:3]] == [(1, 2, 2), (2, 3, 3), (3, 5, 5)]
    assert rows[3].pp == f_pd(4)


def test_census_matches_naive_recount():
    """Test the census against a recount with the naive oracle."""
    for name in ("period_doubling", "thue_morse"):
        rows = pp_census(name, 1, 10, SMALL)
        word = prefix(builtin(name), SMALL.initial)
        for row in rows:
            factors = {word[i : i + row.n] for i in range(len(word) - row.n + 1)}
            recount = sum(1 for f in factors if naive_pal_periodicity(f) is not None)
            assert recount == row.pp, f"{name} n={row.n}: census {row.pp}, recount {recount}"


def test_policy_validation_and_cap():
    """Test policy validation and the stabilization cap."""
    with pytest.raises(DomainError):
        StabilizationPolicy(initial=0)
    with pytest.raises(DomainError):
        StabilizationPolicy(initial=64, growth=1)
    with pytest.raises(DomainError):
        StabilizationPolicy(initial=64, cap=32)

    with pytest.raises(StabilizationError) as excinfo:
        pp_census("thue_morse", 1, 4, StabilizationPolicy(initial=64, growth=2, cap=64))
    assert excinfo.value.cap == 64
    assert "64" in str(excinfo.value)

    with pytest.raises(DomainError):
        pp_census("thue_morse", 0, 4, SMALL)


def test_census_unchanged_by_longer_initial_prefix():
    """Test that doubling the initial prefix leaves every census row unchanged."""
    base = StabilizationPolicy(initial=512, growth=2, cap=1 << 16)
    doubled = StabilizationPolicy(initial=1024, growth=2, cap=1 << 16)
    for name in ("period_doubling", "thue_morse", "tribonacci", "rudin_shapiro", "paperfolding"):
        assert pp_census(name, 1, 16, base) == pp_census(name, 1, 16, doubled), name


def test_census_unchanged_by_worker_count():
    """Test that a census spread over two worker processes matches the serial one."""
    serial = pp_census("thue_morse", 1, 20, SMALL, threads=1)
    assert pp_census("thue_morse", 1, 20, SMALL, threads=2) == serial


def test_period_doubling_formula_values():
    """Test f_pd on small n."""
    assert [f_pd(n) for n in range(5)] == [0, 2, 3, 5, 6]
    with pytest.raises(DomainError):
        f_pd(-1)


def test_thue_morse_formula_values():
    """Test f_tm at hand-checked points and its domain."""
    assert f_tm(3) == 6
    assert f_tm(4) == 10
    assert f_tm(12) == 30
    assert f_tm(31) == 24
    assert f_tm(48) == 126
    with pytest.raises(DomainError):
        f_tm(2)


def test_formulas_match_census():
    """Test f_pd for 1..32 and f_tm for 3..32 against the census."""
    for name, lo in (("period_doubling", 1), ("thue_morse", 3)):
        rows = compare_formula(name, lo, 32, SMALL)
        mismatches = [(r.n, r.formula, r.pp) for r in rows if not r.match]
        assert not mismatches, f"{name} formula mismatches: {mismatches}"

    print("✅ Closed forms agree with the census")


def test_tribonacci_numbers_and_cases():
    """Test both Tribonacci conventions and the case selector."""
    standard = TribonacciNumbers("standard")
    literal = TribonacciNumbers("literal")
    assert [standard[i] for i in range(6)] == [0, 1, 2, 4, 7, 13]
    assert [literal[i] for i in range(6)] == [0, 1, 2, 3, 6, 11]
    assert standard.index_for(5) == 3
    with pytest.raises(DomainError):
        TribonacciNumbers("other")

    assert f_tr(2, standard) == 5
    assert f_tr(3, standard) == 5
    assert f_tr(1, standard) == 2
    assert f_tr_case(2, standard) in (1, 2, 3)

    rows = pp_census("tribonacci", 1, 3, SMALL)
    assert [r.pp for r in rows] == [3, 5, 5], "n=1 counts 0, 1, 2"


def test_formula_for_unknown_name():
    """Test that only three words have closed forms."""
    assert formula_for("thue_morse")[1] == 3
    with pytest.raises(SequenceError):
        formula_for("fibonacci")


def test_period_doubling_bounds():
    """Test 5n/3 and (6n+6)/5 with their equality points."""
    report = verify_bounds("period_doubling", 2, 48, SMALL)
    assert report.passed, f"Failures: {report.failures()}"
    assert report.tight_at("5n/3") == [3, 6, 12, 24, 48]
    assert report.tight_at("(6n+6)/5") == [4, 9, 19, 39]


def test_thue_morse_bounds():
    """Test (n+17)/2 and (8n-6)/3 with their equality points."""
    report = verify_bounds("thue_morse", 3, 48, SMALL)
    assert report.passed, f"Failures: {report.failures()}"
    assert 31 in report.tight_at("(n+17)/2")
    assert {3, 12, 48} <= set(report.tight_at("(8n-6)/3"))
    outside = [c for c in report.checks if c.bound == "(n+17)/2" and c.n < 12]
    assert all(c.holds is None for c in outside), "Lower bound is only checked from n=12"


def test_tribonacci_upper_bound():
    """Test pp <= 2n+1 and that the alpha lower bound is only reported."""
    report = verify_bounds("tribonacci", 1, 30, SMALL)
    upper = [c for c in report.checks if c.bound == "2n+1"]
    assert all(c.holds for c in upper)
    assert 1 < TRIBONACCI_ALPHA < 2


def test_finite_inventories():
    """Test the exact inventories of tau(f) and phi(f)."""
    tau = pp_inventory("tau_f", SMALL)
    assert tau == frozenset({"0", "1", "2", "01", "12", "20", "00", "001", "200"})
    phi = pp_inventory("phi_f", SMALL)
    assert len(phi) == 44
    assert max(len(w) for w in phi) == 9


def test_rudin_shapiro_and_paperfolding_maxima():
    """Test the longest palindromic-periodicity factors and total counts."""
    rs = rs_pf_max_length("rudin_shapiro")
    assert rs.length == 24
    assert "011110110111100010000100" in rs.witnesses
    pf = rs_pf_max_length("paperfolding")
    assert pf.length == 21
    assert "011000110111001001110" in pf.witnesses
    assert len(pp_inventory("rudin_shapiro")) == 334
    assert len(pp_inventory("paperfolding")) == 255


def test_infinite_inventory_is_reported():
    """Test that Thue-Morse, with palindromic prefixes of every length 4^k, is rejected."""
    with pytest.raises(UnboundedInventoryError) as excinfo:
        pp_inventory("thue_morse", SMALL, probe_length=16)
    assert excinfo.value.cap == 16
    assert "infinite" in str(excinfo.value)


def test_row_serialization():
    """Test JSON and CSV forms of census rows."""
    rows = [CensusRow(1, 2, 2, 2, True), CensusRow(2, 3, 3)]
    data = json.loads(rows_to_json(rows))
    assert data[0] == {"n": 1, "factors": 2, "pp": 2, "formula": 2, "match": True}
    assert data[1]["formula"] is None
    csv_text = rows_to_csv(rows)
    assert csv_text.splitlines()[0] == "n,factors,pp,formula,match"
    assert csv_text.splitlines()[2] == "2,3,3,,"


@pytest.mark.slow
def test_formulas_match_census_to_64():
    """Test the closed forms up to n=64."""
    assert all(r.match for r in compare_formula("period_doubling", 1, 64))
    assert all(r.match for r in compare_formula("thue_morse", 3, 64))
