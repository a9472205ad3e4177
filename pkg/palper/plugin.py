"""
MkDocs plugin that renders palper reports inside documentation pages.

A page holds a block such as::

    !!! palper "Period-doubling"
        census: period_doubling 1-16

and the built page shows the computed table in its place.
"""

import html as html_lib
import logging
import re

import markdown
from mkdocs.config import config_options
from mkdocs.exceptions import ConfigurationError
from mkdocs.plugins import BasePlugin

from .bwt import bwt
from .census import StabilizationPolicy, compare_formula, pp_census, pp_inventory
from .cli import CHECKS, check_word, format_rows
from .config import SETTINGS_SCHEMA, range_issues
from .exceptions import PalperError
from .sequences import BUILTIN_NAMES, builtin, factor
from .words import as_word
from .workers import resolve_threads

logger = logging.getLogger(__name__)

DIRECTIVES = ("check", "census", "generate", "inventory", "bwt")
FORMULA_NAMES = ("period_doubling", "thue_morse", "tribonacci")


class PalperPlugin(BasePlugin):
    """
    MkDocs plugin replacing ``palper`` admonitions with computed reports.
    """

    config_scheme = SETTINGS_SCHEMA + (
        ('report_class', config_options.Type(str, default='palper-report')),
        ('error_class', config_options.Type(str, default='palper-error')),
        ('enable_css', config_options.Type(bool, default=True)),
        ('max_length', config_options.Type(int, default=4096)),
    )

    def __init__(self):
        super().__init__()
        self.page_reports = {}  # pages that received at least one report

    def _validate_config(self):
        """Validate plugin configuration and log issues."""
        issues = range_issues(self.config)
        if self.config.get('max_length', 0) < 1:
            issues.append("max_length must be at least 1")
        for issue in issues:
            logger.error(f"Configuration error: {issue}")
        return issues

    def on_config(self, config):
        if self.config.get('debug', False):
            logger.setLevel(logging.DEBUG)
            logger.debug("PalperPlugin debug mode enabled")
        issues = self._validate_config()
        if issues:
            raise ConfigurationError("palper plugin: " + "; ".join(issues))
        self.config['threads'] = resolve_threads(self.config.get('threads'))
        return config

    @property
    def policy(self):
        return StabilizationPolicy.from_settings(self.config)

    def on_page_content(self, html, page, config, files, **kwargs):
        """Replace every ``palper`` admonition on the page with its report."""
        blocks = self._extract_blocks(html)
        logger.debug(f"Found {len(blocks)} palper block(s) on page {page.file.src_path}")
        for full_match, content in blocks:
            html = html.replace(full_match, self._render_block(content, page), 1)
        self.page_reports[page.file.src_path] = bool(blocks)
        return html

    def _extract_blocks(self, html):
        """Admonition divs with class ``palper``, matching nested divs to find the end."""
        results = []
        for start_match in re.finditer(r'<div class="admonition palper[^"]*"[^>]*>', html):
            start_pos = start_match.end()
            depth, pos = 1, start_pos
            while depth > 0:
                next_div = re.search(r'<(/?)div[^>]*>', html[pos:])
                if not next_div:
                    break
                depth += -1 if next_div.group(1) else 1
                pos += next_div.end()
            if depth == 0:
                content = html[start_pos:pos - len('</div>')]
                results.append((html[start_match.start():pos], content))
            else:
                logger.warning("Unclosed palper block left unchanged")
        return results

    def _parse_directive(self, content):
        content = re.sub(r'<p class="admonition-title"[^>]*>.*?</p>', '', content, flags=re.DOTALL)
        text = html_lib.unescape(re.sub(r'<[^>]+>', ' ', content)).strip()
        match = re.match(r'(\w+)\s*:\s*(.*)', text, re.DOTALL)
        if not match:
            raise PalperError("expected a directive such as 'check: is-pp 0110'")
        name, args = match.group(1).lower(), match.group(2).split()
        if name not in DIRECTIVES:
            raise PalperError(f"unknown directive {name!r}; use one of {', '.join(DIRECTIVES)}")
        return name, args

    def _render_block(self, content, page):
        try:
            name, args = self._parse_directive(content)
            body = getattr(self, f"_render_{name}")(args)
        except (PalperError, ValueError) as e:
            logger.warning(f"palper block on {page.file.src_path}: {e}")
            return f'<div class="{self.config["error_class"]}">palper: {html_lib.escape(str(e))}</div>'
        return f'<div class="{self.config["report_class"]} palper-{name}">\n{body}\n</div>'

    def _builtin_name(self, args, usage):
        if not args or args[0] not in BUILTIN_NAMES:
            raise PalperError(f"{usage}; words: {', '.join(BUILTIN_NAMES)}")
        return args[0]

    def _render_check(self, args):
        if len(args) != 2 or args[0] not in CHECKS:
            raise PalperError(f"usage: check: PREDICATE WORD with PREDICATE in {', '.join(CHECKS)}")
        predicate, word = args[0], as_word(args[1])
        text, _, _ = check_word(predicate, word)
        return f'<p><code>{word}</code> {predicate}: <strong>{html_lib.escape(text)}</strong></p>'

    def _render_census(self, args):
        name = self._builtin_name(args, "usage: census: NAME LO-HI")
        if len(args) != 2:
            raise PalperError("usage: census: NAME LO-HI")
        lo, _, hi = args[1].partition("-")
        n_lo, n_hi = int(lo), int(hi or lo)
        if n_hi > self.config['max_length']:
            raise PalperError(f"census range ends above max_length {self.config['max_length']}")
        if name in FORMULA_NAMES:
            rows = compare_formula(
                name, n_lo, n_hi, self.policy, self.config['tribonacci_convention'], self.config['threads']
            )
        else:
            rows = pp_census(name, n_lo, n_hi, self.policy, self.config['threads'])
        return markdown.markdown(self._rows_to_markdown(rows), extensions=['tables'])

    def _rows_to_markdown(self, rows):
        lines = format_rows(rows).splitlines()
        cells = [line.split() for line in lines]
        header = "| " + " | ".join(cells[0]) + " |"
        rule = "|" + "|".join("---:" for _ in cells[0]) + "|"
        body = ["| " + " | ".join(row) + " |" for row in cells[1:]]
        return "\n".join([header, rule] + body)

    def _render_generate(self, args):
        name = self._builtin_name(args, "usage: generate: NAME LENGTH [START]")
        if len(args) not in (2, 3):
            raise PalperError("usage: generate: NAME LENGTH [START]")
        length = int(args[1])
        start = int(args[2]) if len(args) == 3 else 0
        if start + length > self.config['max_length']:
            raise PalperError(f"factor ends above max_length {self.config['max_length']}")
        return f'<pre><code>{factor(builtin(name), start, length)}</code></pre>'

    def _render_inventory(self, args):
        name = self._builtin_name(args, "usage: inventory: NAME")
        found = sorted(pp_inventory(name, self.policy, self.config['probe_length']), key=lambda w: (len(w), w))
        items = "".join(f"<li><code>{w}</code></li>" for w in found)
        return f'<p>{len(found)} palindromic periodicities</p>\n<ul>{items}</ul>'

    def _render_bwt(self, args):
        if len(args) != 1:
            raise PalperError("usage: bwt: WORD")
        word = as_word(args[0])
        return f'<p>BWT(<code>{word}</code>) = <code>{bwt(word)}</code></p>'

    def on_post_page(self, output, page, config, **kwargs):
        """Add CSS to pages that received a report."""
        if not self.page_reports.get(page.file.src_path, False):
            return output
        if self.config.get('enable_css', True):
            css = self._generate_css()
            if '</head>' in output:
                output = output.replace('</head>', css + '\n</head>', 1)
            else:
                output = css + '\n' + output
        return output

    def _generate_css(self):
        report_class = self.config.get('report_class', 'palper-report')
        error_class = self.config.get('error_class', 'palper-error')
        return f"""
<style>
.{report_class} {{
    margin: 20px 0;
    padding: 12px 16px;
    background-color: var(--md-code-bg-color, #f5f5f5);
    border: 1px solid var(--md-default-fg-color--lighter, #e1e4e8);
    border-radius: 8px;
    overflow-x: auto;
}}

.{report_class} table {{
    font-variant-numeric: tabular-nums;
}}

.{error_class} {{
    margin: 20px 0;
    padding: 12px 16px;
    border-left: 4px solid #d73a49;
    background-color: rgba(215, 58, 73, 0.08);
}}
</style>"""
