"""
Test performance of the word primitives and the plugin.

This test suite verifies:
1. The linear-time primitives stay fast on long words
2. Pages with many palper blocks render in reasonable time
3. Prefix generation reuses cached expansions
"""

import time

from palper.plugin import PalperPlugin
from palper.sequences import builtin, prefix
from palper.words import is_pal_periodicity, naive_pal_periodicity, periods


def test_long_word_primitives_performance():
    """Test periods and the palindromic-periodicity check on a prefix of length 2^17."""
    word = prefix(builtin("thue_morse"), 2 ** 17)

    start_time = time.time()
    found = periods(word)
    witness = is_pal_periodicity(word)
    processing_time = time.time() - start_time

    assert found[-1] == len(word)
    assert witness is not None, "Thue-Morse prefixes of length 2^k are palindromic periodicities"
    assert processing_time < 10.0, f"Primitives should take less than 10 seconds, took {processing_time:.2f}s"

    print(f"✅ Primitives on {len(word)} letters: {processing_time:.3f}s")


def test_oracle_beats_naive_check():
    """Test that the precomputed check is faster than the direct one on a long word."""
    word = prefix(builtin("fibonacci"), 3000) + "2"

    start_time = time.time()
    fast = is_pal_periodicity(word)
    fast_time = time.time() - start_time

    start_time = time.time()
    slow = naive_pal_periodicity(word)
    slow_time = time.time() - start_time

    assert fast == slow
    assert fast_time <= slow_time + 0.5


def test_many_blocks_performance():
    """Test a page with many small palper blocks."""
    plugin = PalperPlugin()
    plugin.load_config({})
    mock_file = type('MockFile', (), {'src_path': 'test.md'})()
    mock_page = type('MockPage', (), {'file': mock_file})()

    num_blocks = 50
    blocks = []
    for i in range(num_blocks):
        directive = f"bwt: {bin(i + 1)[2:]}" if i % 2 else f"generate: period_doubling 32 {i}"
        blocks.append(f'''
<div class="admonition palper">
    <p class="admonition-title">Block {i+1}</p>
    <p>{directive}</p>
</div>
''')

    start_time = time.time()
    result = plugin.on_page_content('\n'.join(blocks), mock_page, {}, None)
    processing_time = time.time() - start_time

    assert result.count('class="palper-report') == num_blocks
    assert processing_time < 5.0, f"Processing {num_blocks} blocks should take less than 5 seconds, took {processing_time:.2f}s"


def test_prefix_cache_reuse():
    """Test that prefixes sharing a power-of-two size are served from the cache."""
    spec = builtin("paperfolding")
    prefix(spec, 100_000)

    start_time = time.time()
    for length in range(65_537, 100_000, 1000):
        prefix(spec, length)
    processing_time = time.time() - start_time

    assert processing_time < 1.0
