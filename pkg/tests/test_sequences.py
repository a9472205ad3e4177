"""
Test the infinite-word generators.

This test verifies that:
1. Morphisms apply letterwise and reject missing images
2. Every builtin word produces its known prefix
3. Direct index rules agree with the recurrences they shortcut
4. Factor extraction and power detection work on generated prefixes
"""

import random

import pytest

from palper.exceptions import SequenceError
from palper.sequences import (
    BUILTIN_NAMES,
    DirectRule,
    EventuallyPeriodic,
    FixedPoint,
    Morphism,
    MorphicImage,
    Unfolding,
    apply_morphism,
    builtin,
    check_no_kth_power,
    factor,
    has_kth_power,
    paperfolding_symbol,
    prefix,
    rudin_shapiro_symbol,
    thue_morse_symbol,
)

TRIBONACCI = Morphism.of({"0": "01", "1": "02", "2": "0"})


def test_apply_morphism():
    """Test letterwise substitution."""
    assert apply_morphism(TRIBONACCI, "0102") == "0102010"
    assert apply_morphism(Morphism.of({"0": "01", "1": "10"}), "0") == "01"
    identity = Morphism.of({"0": "0", "1": "1"})
    assert identity("0110") == "0110", "Morphisms are callable"

    with pytest.raises(SequenceError, match="no image"):
        apply_morphism(identity, "012")


def test_builtin_prefixes():
    """Test the first symbols of each builtin word."""
    expected = {
        "thue_morse": "0110100110010110",
        "tribonacci": "0102010010201",
        "period_doubling": "1011101010111011",
        "paperfolding": "001001100011011",
        "rudin_shapiro": "00010010",
        "fibonacci": "01001010",
        "tau_f": "01200120",
    }
    for name, start in expected.items():
        got = prefix(builtin(name), len(start))
        assert got == start, f"{name}: expected {start}, got {got}"

    assert set(expected) <= set(BUILTIN_NAMES)
    assert "phi_f" in BUILTIN_NAMES


def test_unknown_builtin_lists_valid_names():
    """Test that an unknown name reports the valid ones."""
    with pytest.raises(SequenceError) as excinfo:
        builtin("fibonaci")
    assert "thue_morse" in str(excinfo.value)


def test_index_rules_match_recurrences():
    """Test paperfolding and Thue-Morse index rules against the generators."""
    pf = prefix(Unfolding(), 255)
    assert "".join(str(paperfolding_symbol(i)) for i in range(255)) == pf
    tm = prefix(builtin("thue_morse"), 256)
    assert "".join(str(thue_morse_symbol(i)) for i in range(256)) == tm


def test_index_rules_to_two_to_the_14():
    """Test the direct rules against recurrences and generators on 2^14 symbols."""
    size = 2 ** 14
    tm = [0] * size
    rs = [0] * size
    for i in range(1, size):
        tm[i] = tm[i // 2] if i % 2 == 0 else 1 - tm[i // 2]
    for i in range(1, size):
        if i % 2 == 0:
            rs[i] = rs[i // 2]
        elif i % 4 == 1:
            rs[i] = rs[i // 4]
        else:
            rs[i] = 1 - rs[i // 2]
    assert [thue_morse_symbol(i) for i in range(size)] == tm
    assert [rudin_shapiro_symbol(i) for i in range(size)] == rs
    assert prefix(builtin("thue_morse"), size) == "".join(map(str, tm))

    four_letter = FixedPoint(Morphism.of({"0": "01", "1": "02", "2": "31", "3": "32"}), "0")
    coding = Morphism.of({"0": "0", "1": "0", "2": "1", "3": "1"})
    assert prefix(builtin("rudin_shapiro"), size) == prefix(MorphicImage(coding, four_letter), size)

    pf = prefix(builtin("paperfolding"), size)
    assert "".join(str(paperfolding_symbol(i)) for i in range(size)) == pf


def test_prefixes_are_stable():
    """Test that shorter prefixes are prefixes of longer ones for every builtin word."""
    rng = random.Random(20240917)
    for name in BUILTIN_NAMES:
        spec = builtin(name)
        lengths = sorted(rng.sample(range(1, 6000), 6))
        longest = prefix(spec, lengths[-1])
        for length in lengths:
            assert prefix(spec, length) == longest[:length], f"{name} at {length}"
            assert spec.generate(length)[:length] == longest[:length], f"{name} regenerated at {length}"


def test_period_doubling_runs():
    """Test that period-doubling avoids 00 and 1111 on 2^14 symbols."""
    pd = prefix(builtin("period_doubling"), 2 ** 14)
    assert "00" not in pd
    assert "1111" not in pd
    assert "111" in pd


def test_fixed_point_seed_validation():
    """Test that a seed whose image does not start with it is rejected."""
    with pytest.raises(SequenceError):
        FixedPoint(Morphism.of({"0": "1", "1": "0"}), "0")
    with pytest.raises(SequenceError):
        FixedPoint(Morphism.of({"0": "0", "1": "10"}), "0")


def test_other_recipes():
    """Test morphic images, direct rules and eventually periodic words."""
    image = MorphicImage(Morphism.of({"0": "0", "1": "12"}), builtin("fibonacci"))
    assert prefix(image, 8) == "01200120"

    parity = DirectRule(lambda i: i % 2)
    assert prefix(parity, 5) == "01010"

    ep = EventuallyPeriodic("2", "01")
    assert prefix(ep, 7) == "2010101"
    with pytest.raises(SequenceError):
        EventuallyPeriodic("0", "")


def test_prefix_and_factor():
    """Test prefixes of any length and factor extraction."""
    pd = builtin("period_doubling")
    assert prefix(pd, 0) == ""
    assert factor(pd, 12, 9) == "101110111"
    assert factor(pd, 8, 9) == "101110111"
    assert factor(pd, 7, 9) == "010111011"
    assert factor(pd, 3, 0) == ""
    assert len(prefix(pd, 5000)) == 5000

    with pytest.raises(SequenceError):
        prefix(pd, -1)
    with pytest.raises(SequenceError):
        factor(pd, -1, 3)


def test_power_detection():
    """Test kth power detection in finite words."""
    assert has_kth_power("0000", 4)
    assert not has_kth_power("000", 4)
    assert has_kth_power("010101", 3)
    assert has_kth_power(prefix(builtin("thue_morse"), 64), 2), "Thue-Morse contains squares"
    assert check_no_kth_power(builtin("thue_morse"), 3, 1024), "Thue-Morse has no cubes"
    assert check_no_kth_power(builtin("tau_f"), 4, 2000)
    assert check_no_kth_power(builtin("phi_f"), 4, 2000)

    with pytest.raises(SequenceError):
        has_kth_power("01", 1)
