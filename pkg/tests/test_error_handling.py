"""
Test error handling and edge cases of palper.

This test suite verifies:
1. Malformed palper blocks become error notes instead of failing the build
2. Directive arguments are validated
3. The exception hierarchy lets callers catch by concern
"""

import logging

import pytest

from palper.exceptions import (
    CapExceededError,
    DomainError,
    PalperError,
    SequenceError,
    StabilizationError,
    UnboundedInventoryError,
    WordError,
)
from palper.plugin import PalperPlugin
from palper.sequences import builtin
from palper.words import as_word, periods


@pytest.fixture
def plugin():
    plugin = PalperPlugin()
    plugin.load_config({'max_length': 100})
    return plugin


@pytest.fixture
def mock_page():
    mock_file = type('MockFile', (), {'src_path': 'test.md'})()
    return type('MockPage', (), {'file': mock_file})()


def test_malformed_palper_blocks(plugin, mock_page):
    """Test handling of malformed palper admonitions."""
    malformed_cases = {
        # no directive
        '<div class="admonition palper"><p class="admonition-title">Palper</p></div>': "expected a directive",
        # unknown directive
        '<div class="admonition palper"><p>plot: thue_morse</p></div>': "unknown directive",
        # wrong predicate
        '<div class="admonition palper"><p>check: shiny 0110</p></div>': "usage: check",
        # not a word
        '<div class="admonition palper"><p>check: is-pp 01x</p></div>': "palper:",
        # unknown sequence
        '<div class="admonition palper"><p>generate: collatz 8</p></div>': "usage: generate",
        # non-numeric range
        '<div class="admonition palper"><p>census: thue_morse a-b</p></div>': "palper:",
        # above max_length
        '<div class="admonition palper"><p>census: thue_morse 1-500</p></div>': "max_length 100",
        '<div class="admonition palper"><p>generate: thue_morse 90 20</p></div>': "max_length 100",
    }

    for i, (malformed_html, expected) in enumerate(malformed_cases.items()):
        result = plugin.on_page_content(malformed_html, mock_page, {}, None)

        assert isinstance(result, str), f"Case {i+1}: Should return string even with malformed input"
        assert 'class="palper-error"' in result, f"Case {i+1}: Should render an error note"
        assert expected in result, f"Case {i+1}: expected {expected!r} in {result!r}"


def test_error_messages_are_escaped(plugin, mock_page):
    """Test that user text echoed in errors is HTML-escaped."""
    html = '<div class="admonition palper"><p>bwt: &lt;script&gt;</p></div>'
    result = plugin.on_page_content(html, mock_page, {}, None)
    assert '<script>' not in result
    assert 'palper-error' in result


def test_unclosed_block_left_unchanged(plugin, mock_page, caplog):
    """Test that an unclosed admonition is reported and not rewritten."""
    html = '<div class="admonition palper"><p>bwt: 0120</p>'
    with caplog.at_level(logging.WARNING, logger="palper.plugin"):
        result = plugin.on_page_content(html, mock_page, {}, None)
    assert result == html
    assert "Unclosed palper block" in caplog.text


def test_errors_are_logged_with_page(plugin, mock_page, caplog):
    """Test that a failed block logs a warning naming the page."""
    with caplog.at_level(logging.WARNING, logger="palper.plugin"):
        plugin.on_page_content('<div class="admonition palper"><p>bwt:</p></div>', mock_page, {}, None)
    assert "test.md" in caplog.text


def test_one_bad_block_does_not_hide_others(plugin, mock_page):
    """Test that valid blocks still render next to a broken one."""
    html = (
        '<div class="admonition palper"><p>bwt: 0120</p></div>\n'
        '<div class="admonition palper"><p>bwt: 0x</p></div>'
    )
    result = plugin.on_page_content(html, mock_page, {}, None)
    assert '<code>2001</code>' in result
    assert result.count('palper-error') == 1


def test_exception_hierarchy():
    """Test that errors can be caught by concern."""
    for cls in (WordError, SequenceError, DomainError, CapExceededError):
        assert issubclass(cls, PalperError)
    for cls in (WordError, SequenceError, DomainError):
        assert issubclass(cls, ValueError)
    assert issubclass(StabilizationError, CapExceededError)
    assert issubclass(UnboundedInventoryError, CapExceededError)

    error = StabilizationError("still changing", cap=1024)
    assert error.cap == 1024
    assert str(error) == "still changing"


def test_library_errors():
    """Test the errors raised for bad words and unknown sequences."""
    with pytest.raises(WordError):
        as_word("01a")
    with pytest.raises(WordError):
        periods("")
    with pytest.raises(SequenceError):
        builtin("collatz")
