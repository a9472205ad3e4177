"""
Command line entry point: ``palper <command> ...``.

``run(argv)`` does the work and returns a ``CommandOutcome``; ``main()`` prints
it and exits with its code.  Exit codes: 0 success, 1 a check answered no or a
suite failed, 2 usage, word or configuration error, 3 a resource cap was hit.
"""

import argparse
import io
import json
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
from typing import List, Optional, Sequence

from mkdocs.exceptions import ConfigurationError

from . import __version__
from .bwt import bwt, is_perfectly_clustered
from .census import (
    BOUNDS,
    StabilizationPolicy,
    compare_formula,
    pp_census,
    pp_inventory,
    rows_to_csv,
    rows_to_json,
    rs_pf_max_length,
    verify_bounds,
)
from .classes import (
    is_central,
    is_closed,
    is_finite_sturmian,
    is_rich,
    is_standard_sturmian,
    is_trapezoidal,
    pathological_pair,
)
from .config import load_settings
from .exceptions import CapExceededError, PalperError
from .search import (
    BINARY_FAMILIES,
    TERNARY_FAMILIES,
    bfs_longest,
    count_binary_pp_words,
    count_binary_pp_words_naive,
    periodic_pp_set,
    verify_structural_forms,
)
from .sequences import BUILTIN_NAMES, builtin, factor
from .suites import FULL, QUICK, SUITE_NAMES, run_suites
from .words import (
    as_word,
    fractional_root,
    is_pal_periodicity,
    is_palindrome,
    is_primitive,
    is_symmetric,
    periods,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    text: str
    json: Optional[str] = None

    def render(self) -> str:
        return self.json if self.json is not None else self.text


class UsageError(Exception):
    def __init__(self, message, exit_code=EXIT_USAGE):
        super().__init__(message)
        self.exit_code = exit_code


class PalperArgumentParser(argparse.ArgumentParser):
    """Raise instead of exiting so ``run`` can turn parse problems into outcomes."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}".rstrip())

    def exit(self, status=0, message=None):
        raise UsageError(message or "", status)


def _length(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _length_range(text: str) -> range:
    lo, sep, hi = text.partition("-")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or N-M, got {text!r}") from None
    if start < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"empty or invalid length range {text!r}")
    return range(start, stop + 1)


CHECKS = (
    "is-pp", "root", "periods", "symmetric", "palindrome", "primitive",
    "sturmian", "trapezoidal", "rich", "closed", "central", "standard",
)


def _global_options(parser, default):
    """Options accepted before and after the command; subcommands only override what they see."""
    parser.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    parser.add_argument("--config", default=default(None), help="settings file (default: ./palper.yml)")
    parser.add_argument("--threads", type=int, default=default(None), help="worker processes")
    parser.add_argument("--debug", action="store_true", default=default(False), help="debug logging")
    parser.add_argument("--progress", action="store_true", default=default(False), help="progress bars")
    return parser


def build_parser() -> PalperArgumentParser:
    common = _global_options(argparse.ArgumentParser(add_help=False), lambda value: argparse.SUPPRESS)
    parser = PalperArgumentParser(prog="palper", description="Palindromic periodicities of words.")
    _global_options(parser, lambda value: value)
    parser.add_argument("--version", action="version", version=f"palper {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=PalperArgumentParser)

    p = sub.add_parser("check", parents=[common], help="word predicates")
    p.add_argument("predicate", choices=CHECKS)
    p.add_argument("words", nargs="*", help="words over 0-9")
    p.add_argument("--file", help="read words from a file, one per line")

    p = sub.add_parser("bwt", parents=[common], help="Burrows-Wheeler transform")
    p.add_argument("word")
    p.add_argument("--clustered", type=int, metavar="K", help="test perfect clustering over K letters")

    p = sub.add_parser("generate", parents=[common], help="prefix or factor of a builtin word")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.add_argument("length", type=_length)
    p.add_argument("--start", type=_length, default=0)

    p = sub.add_parser("census", parents=[common], help="palindromic periodicities among length-n factors")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.add_argument("n_lo", type=_length)
    p.add_argument("n_hi", type=_length)
    p.add_argument("--formula", action="store_true", help="compare with the closed form")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--convention", choices=("standard", "literal"), help="Tribonacci numbers")

    p = sub.add_parser("inventory", parents=[common], help="every palindromic-periodicity factor")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.add_argument("--probe-length", type=int)

    p = sub.add_parser("max-length", parents=[common], help="longest palindromic-periodicity factors")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.add_argument("--probe-length", type=int)

    p = sub.add_parser("bounds", parents=[common], help="check the proven inequalities")
    p.add_argument("name", choices=tuple(BOUNDS))
    p.add_argument("n_lo", type=_length)
    p.add_argument("n_hi", type=_length)

    p = sub.add_parser("periodic", parents=[common], help="palindromic periodicities of x repeated forever")
    p.add_argument("word")
    p.add_argument("--cap-multiplier", type=int)

    p = sub.add_parser("search", parents=[common], help="longest words with few palindromic periodicities")
    p.add_argument("threshold", type=int)
    p.add_argument("--cap", type=int, default=40, help="length cap")
    p.add_argument("--alphabet", type=int, help="fixed alphabet size (default: growing)")

    p = sub.add_parser("forms", parents=[common], help="structural forms of words with few periodicities")
    p.add_argument("alphabet", choices=("ternary", "binary"))
    p.add_argument("--lengths", type=_length_range, help="N or N-M (default: threshold + 1 up to 14 or 80)")
    p.add_argument("--threshold", type=int)

    p = sub.add_parser("count-a374495", parents=[common], help="binary palindromic periodicities by length")
    p.add_argument("n_max", type=_length)
    p.add_argument("--naive", action="store_true", help="enumerate all 2^n words")

    p = sub.add_parser("verify-paper", parents=[common], help="run the exhaustive property suites")
    tier = p.add_mutually_exclusive_group()
    tier.add_argument("--quick", dest="tier", action="store_const", const="quick")
    tier.add_argument("--full", dest="tier", action="store_const", const="full")
    p.add_argument("--suite", action="append", choices=SUITE_NAMES, help="run only this suite")
    p.set_defaults(tier="quick")
    return parser


def _yes_no(flag: bool, extra: str = "") -> str:
    return f"yes {extra}".rstrip() if flag else "no"


def check_word(predicate: str, w: str):
    """Answer text, success flag and JSON value for one word."""
    if predicate == "is-pp":
        witness = is_pal_periodicity(w)
        data = None if witness is None else {"p": witness.p, "s": witness.s}
        return _yes_no(witness is not None, str(witness) if witness else ""), witness is not None, data
    if predicate == "root":
        root = fractional_root(w)
        return root, True, root
    if predicate == "periods":
        found = periods(w)
        return " ".join(map(str, found)), True, found
    if predicate == "symmetric":
        m = is_symmetric(w)
        return _yes_no(m is not None, f"m={m}" if m is not None else ""), m is not None, m
    if predicate == "sturmian":
        pair = pathological_pair(w)
        if pair is None:
            return "yes", True, None
        zero, one = pair.pair
        return f"no {zero} {one}", False, [zero, one]
    tests = {
        "palindrome": is_palindrome,
        "primitive": is_primitive,
        "trapezoidal": is_trapezoidal,
        "rich": is_rich,
        "closed": is_closed,
        "central": is_central,
        "standard": is_standard_sturmian,
    }
    answer = tests[predicate](w)
    return _yes_no(answer), answer, answer


def _read_words(args) -> List[str]:
    words = list(args.words)
    if args.file:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                words.extend(line.strip() for line in fh if line.strip())
        except OSError as e:
            raise UsageError(f"cannot read {args.file}: {e}") from e
    if not words:
        raise UsageError("check: no words given")
    return [as_word(w) for w in words]


def _cmd_check(args, settings) -> CommandOutcome:
    lines, results, ok = [], [], True
    words = _read_words(args)
    for w in words:
        text, answer, data = check_word(args.predicate, w)
        ok = ok and bool(answer)
        lines.append(text if len(words) == 1 else f"{w} {text}")
        results.append({"word": w, "answer": bool(answer), "value": data})
    code = EXIT_OK if ok else EXIT_FAILED
    return CommandOutcome(code, "\n".join(lines), json.dumps(results, indent=2) if args.json else None)


def _cmd_bwt(args, settings) -> CommandOutcome:
    w = as_word(args.word)
    if args.clustered is None:
        out = bwt(w)
        return CommandOutcome(EXIT_OK, out, json.dumps({"word": w, "bwt": out}) if args.json else None)
    clustered = is_perfectly_clustered(w, args.clustered)
    payload = {"word": w, "bwt": bwt(w), "clustered": clustered}
    return CommandOutcome(
        EXIT_OK if clustered else EXIT_FAILED, _yes_no(clustered), json.dumps(payload) if args.json else None
    )


def _cmd_generate(args, settings) -> CommandOutcome:
    out = factor(builtin(args.name), args.start, args.length)
    return CommandOutcome(EXIT_OK, out, json.dumps({"name": args.name, "start": args.start, "word": out}) if args.json else None)


def format_rows(rows) -> str:
    """Aligned text table of census rows."""
    with_formula = any(row.formula is not None for row in rows)
    header = ["n", "factors", "pp"] + (["formula", "match"] if with_formula else [])
    table = [header]
    for row in rows:
        cells = [row.n, row.factors, row.pp]
        if with_formula:
            cells += ["-" if row.formula is None else row.formula, "-" if row.match is None else str(row.match).lower()]
        table.append([str(c) for c in cells])
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    return "\n".join("  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in table)


def _cmd_census(args, settings) -> CommandOutcome:
    policy = StabilizationPolicy.from_settings(settings)
    if args.formula:
        convention = args.convention or settings['tribonacci_convention']
        rows = compare_formula(args.name, args.n_lo, args.n_hi, policy, convention, settings['threads'])
    else:
        rows = pp_census(args.name, args.n_lo, args.n_hi, policy, settings['threads'])
    code = EXIT_FAILED if any(row.match is False for row in rows) else EXIT_OK
    fmt = "json" if args.json else args.format
    if fmt == "csv":
        return CommandOutcome(code, rows_to_csv(rows).rstrip("\n"))
    if fmt == "json":
        text = rows_to_json(rows)
        return CommandOutcome(code, text, text)
    return CommandOutcome(code, format_rows(rows))


def _cmd_inventory(args, settings) -> CommandOutcome:
    probe = args.probe_length or settings['probe_length']
    found = sorted(pp_inventory(args.name, StabilizationPolicy.from_settings(settings), probe), key=lambda w: (len(w), w))
    text = f"{len(found)} palindromic periodicities\n" + "\n".join(found)
    payload = json.dumps({"name": args.name, "count": len(found), "words": found}, indent=2)
    return CommandOutcome(EXIT_OK, text, payload if args.json else None)


def _cmd_max_length(args, settings) -> CommandOutcome:
    probe = args.probe_length or settings['probe_length']
    report = rs_pf_max_length(args.name, StabilizationPolicy.from_settings(settings), probe)
    text = f"{report.length}\n" + "\n".join(report.witnesses)
    payload = json.dumps({"name": args.name, "length": report.length, "witnesses": list(report.witnesses)}, indent=2)
    return CommandOutcome(EXIT_OK, text, payload if args.json else None)


def _cmd_bounds(args, settings) -> CommandOutcome:
    report = verify_bounds(args.name, args.n_lo, args.n_hi, StabilizationPolicy.from_settings(settings), settings['threads'])
    lines = []
    for bound in BOUNDS[args.name]:
        tight = report.tight_at(bound.label)
        lines.append(f"{bound.kind} {bound.label}: equality at {', '.join(map(str, tight)) or 'none'}")
    for failure in report.failures():
        lines.append(f"FAIL {failure.bound} at n={failure.n}: pp={failure.pp}, bound {failure.value}")
    lines.append("all bounds hold" if report.passed else f"{len(report.failures())} failures")
    payload = json.dumps({"name": args.name, "passed": report.passed, "checks": [c.to_dict() for c in report.checks]}, indent=2)
    return CommandOutcome(EXIT_OK if report.passed else EXIT_FAILED, "\n".join(lines), payload if args.json else None)


def _cmd_periodic(args, settings) -> CommandOutcome:
    multiplier = args.cap_multiplier or settings['periodic_cap_multiplier']
    found = sorted(periodic_pp_set(as_word(args.word), multiplier), key=lambda w: (len(w), w))
    text = f"{len(found)} palindromic periodicities\n" + "\n".join(found)
    payload = json.dumps({"word": args.word, "count": len(found), "words": found}, indent=2)
    return CommandOutcome(EXIT_OK, text, payload if args.json else None)


def _cmd_search(args, settings) -> CommandOutcome:
    report = bfs_longest(args.threshold, args.cap, args.alphabet, settings['threads'], settings['progress'])
    state = "closed" if report.closed else "open"
    lines = [
        f"threshold {report.threshold}: {state} at length {report.length_reached}",
        "frontier " + " ".join(map(str, report.frontier_sizes)),
    ]
    words = report.renamings() if report.alphabet else report.extremal_words
    lines.extend(words)
    payload = report.to_dict()
    if report.alphabet:
        payload["renamings"] = list(words)
    code = EXIT_OK if report.closed else EXIT_CAP
    return CommandOutcome(code, "\n".join(lines), json.dumps(payload, indent=2) if args.json else None)


def _cmd_forms(args, settings) -> CommandOutcome:
    # the families describe words longer than the threshold
    if args.alphabet == "ternary":
        forms, alphabet, threshold, longest = TERNARY_FAMILIES, None, 8, 14
    else:
        forms, alphabet, threshold, longest = BINARY_FAMILIES, 2, 43, 80
    threshold = args.threshold or threshold
    lengths = args.lengths or range(threshold + 1, max(longest, threshold + 1) + 1)
    report = verify_structural_forms(threshold, lengths, forms, alphabet, settings['threads'], settings['progress'])
    lines = [f"{report.checked} words checked, {len(report.violations)} fit no form"]
    lines.extend(report.violations)
    code = EXIT_OK if report.passed else EXIT_FAILED
    return CommandOutcome(code, "\n".join(lines), json.dumps(report.to_dict(), indent=2) if args.json else None)


def _cmd_count(args, settings) -> CommandOutcome:
    counts = []
    for n in range(1, args.n_max + 1):
        value = count_binary_pp_words_naive(n) if args.naive else count_binary_pp_words(n, settings['threads'])
        logger.debug(f"n={n}: {value}")
        counts.append((n, value))
    text = "\n".join(["n,count"] + [f"{n},{value}" for n, value in counts])
    payload = json.dumps([{"n": n, "count": value} for n, value in counts], indent=2)
    return CommandOutcome(EXIT_OK, text, payload if args.json else None)


def _cmd_verify(args, settings) -> CommandOutcome:
    tier = {"quick": QUICK, "full": FULL}[args.tier]
    results = run_suites(tier, StabilizationPolicy.from_settings(settings), args.suite)
    lines = []
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        lines.append(f"{status} {result.name}: {result.checked} checks")
        lines.extend(f"  failed: {failure}" for failure in result.failures[:10])
        lines.extend(f"  note: {note}" for note in result.notes)
    passed = all(result.passed for result in results)
    lines.append(f"{tier.name} tier: {'all suites passed' if passed else 'failures found'}")
    payload = json.dumps({"tier": tier.name, "suites": [r.to_dict() for r in results]}, indent=2)
    return CommandOutcome(EXIT_OK if passed else EXIT_FAILED, "\n".join(lines), payload if args.json else None)


COMMANDS = {
    "check": _cmd_check,
    "bwt": _cmd_bwt,
    "generate": _cmd_generate,
    "census": _cmd_census,
    "inventory": _cmd_inventory,
    "max-length": _cmd_max_length,
    "bounds": _cmd_bounds,
    "periodic": _cmd_periodic,
    "search": _cmd_search,
    "forms": _cmd_forms,
    "count-a374495": _cmd_count,
    "verify-paper": _cmd_verify,
}


def _parse(argv: Sequence[str]):
    buffer = io.StringIO()
    with redirect_stdout(buffer), redirect_stderr(buffer):
        try:
            return build_parser().parse_args(list(argv)), None
        except UsageError as e:
            # --help and --version print and then exit through the parser
            text = (buffer.getvalue() + str(e)).strip()
            return None, CommandOutcome(e.exit_code, text)


def run(argv: Sequence[str]) -> CommandOutcome:
    args, early = _parse(argv)
    if early is not None:
        return early
    if args.debug:
        logging.getLogger("palper").setLevel(logging.DEBUG)
    try:
        settings = load_settings(
            args.config,
            {
                'threads': args.threads,
                'debug': args.debug or None,
                'progress': args.progress or None,
                'tribonacci_convention': getattr(args, 'convention', None),
            },
        )
        if settings['debug']:
            logging.getLogger("palper").setLevel(logging.DEBUG)
        return COMMANDS[args.command](args, settings)
    except UsageError as e:
        return CommandOutcome(e.exit_code, str(e))
    except CapExceededError as e:
        logger.error(f"{e} (cap {e.cap})")
        return CommandOutcome(EXIT_CAP, f"error: {e}")
    except (PalperError, ConfigurationError) as e:
        return CommandOutcome(EXIT_USAGE, f"error: {e}")


def main(argv: Optional[Sequence[str]] = None) -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s - %(name)s: %(message)s", stream=sys.stderr)
    outcome = run(sys.argv[1:] if argv is None else argv)
    text = outcome.render()
    if text:
        stream = sys.stdout if outcome.exit_code in (EXIT_OK, EXIT_FAILED) else sys.stderr
        print(text, file=stream)
    sys.exit(outcome.exit_code)


if __name__ == "__main__":
    main()
