#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# cli/commands.py - Argument parsing and verb handlers
#

import argparse
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from cli.logger import RichLogger
from core.catalog import (
    ENTRIES,
    entry,
    four_quadrant_bound_check,
    gk_family,
    mu_lower_bound_certificate,
    nu_table,
    ordering_check,
    three_quadrant_bound_check,
    verify,
)
from core.config import APP_DESC, APP_NAME, APP_VERSION, EXIT_FAILURE, EXIT_OK, MAX_LEN_LIMIT, VALID_FORMATS
from core.enumeration import (
    CountSequence,
    class_counts,
    indecomposable_counts,
    interior_indecomposable_counts,
    to_csv,
    to_json_lines,
)
from core.errors import InvalidSpecError, NoPositiveRootError
from core.genfun import (
    IntPolynomial,
    RationalGF,
    box_closure_gf,
    cartier_foata,
    eventually_constant_gf,
    growth_rate,
    largest_real_root,
    series,
    smallest_positive_solution_of_g_eq_1,
)
from core.gridded import (
    GriddedPermutation,
    all_griddings,
    box_decompose,
    box_sum,
    build_pin_permutation,
    commute,
    contains,
    is_box_indecomposable,
    pin_path,
    render_svg,
)
from core.pinwords import (
    PinWord,
    basic_to_memory,
    finite_pin_word,
    format_pin_word,
    memory_to_basic,
    parse_basic,
    parse_pin_spec,
    parse_pin_tokens,
    symmetry_transform,
    SYMMETRIES,
)
from core.settings import Settings
from core.translation_utils import _
from core.words import (
    ExplicitPrefix,
    WordSpec,
    classify_periodicity,
    factors,
    format_word,
    parse_word_spec,
    recurrent_factors,
    windows,
)

PIN_PREFIXES = ("phi(", "pin:", "basic:")
VERBS = (
    ("validate", _("Check a pin word against the direction-alternation automaton")),
    ("convert", _("Convert between memory and basic encodings, optionally under a symmetry")),
    ("perm", _("Build, decompose and compare gridded permutations")),
    ("plot", _("Draw a pin permutation as SVG")),
    ("factors", _("List the factors of a word")),
    ("complexity", _("Factor or recurrent complexity of a word")),
    ("count", _("Brute-force class counts of a pin word")),
    ("indec", _("Box-indecomposable counts of a pin word")),
    ("gf", _("Rational generating functions, closures and series")),
    ("growth", _("Growth rate of a generating function or a polynomial's largest real root")),
    ("root", _("Largest real root, or the smallest solution of g = 1")),
    ("catalog", _("Named classes: list, show, verify and certificates")),
    ("table", _("Tables of the nu family and the g_k family")),
)


@dataclass
class CommandContext:
    logger: RichLogger
    settings: Settings
    fmt: str
    tol: Fraction
    max_len: int
    prefix_budget: int

    def emit(self, text: str):
        self.logger.emit(text)

    def emit_json(self, payload):
        self.logger.emit(json.dumps(payload))

    def emit_value(self, key: str, value, text: Optional[str] = None):
        """A single result: {key: value} as JSON, otherwise text or the value itself"""
        if self.fmt == "json":
            self.emit_json({key: value})
        else:
            self.emit(text if text is not None else str(value))

    def require_format(self, *allowed: str):
        if self.fmt not in allowed:
            raise InvalidSpecError(_("Format {0} is not available here; choose from {1}").format(
                self.fmt, ", ".join(allowed)))


class ColoredHelpAction(argparse.Action):
    def __init__(self, option_strings, dest=argparse.SUPPRESS, default=argparse.SUPPRESS, help=None):
        super().__init__(option_strings=option_strings, dest=dest, default=default, nargs=0, help=help)

    def __call__(self, parser, namespace, values, option_string=None):
        from rich.box import ROUNDED
        from rich.console import Console
        from rich.panel import Panel
        from rich.table import Table
        from rich.text import Text

        console = Console()

        header = Text()
        header.append(f"{APP_NAME} ", style="bold cyan")
        header.append(f"v{APP_VERSION}\n", style="bold white")
        header.append(f"{APP_DESC}", style="white")
        console.print(Panel(header, border_style="cyan", box=ROUNDED, padding=(0, 1), width=70))
        console.print()

        console.print("[bold yellow]USAGE:[/]")
        console.print("  [cyan]pin-class[/] [dim]VERB \\[ARGS] \\[OPTIONS][/]\n")

        console.print("[bold yellow]VERBS:[/]")
        table = Table(show_header=False, box=None, padding=(0, 2))
        table.add_column(style="green bold", no_wrap=True)
        table.add_column(style="white")
        for verb, description in VERBS:
            table.add_row(verb, description)
        console.print(table)
        console.print()

        console.print("[bold yellow]OPTIONS:[/]")
        options = Table(show_header=False, box=None, padding=(0, 2))
        options.add_column(style="green bold", no_wrap=True)
        options.add_column(style="white")
        options.add_row("--max-len N", _("Longest pattern length enumerated"))
        options.add_row("--tol T", _("Root tolerance, e.g. 1e-6"))
        options.add_row("--prefix-budget N", _("Maximum pin letters read during enumeration"))
        options.add_row("--format F", _("Output format: {0}").format(", ".join(VALID_FORMATS)))
        options.add_row("-V, --version", _("Print application version"))
        console.print(options)
        console.print()

        console.print("[bold yellow]EXAMPLES:[/]")
        examples = [
            ("pin-class perm pin:lit:ru,ur,ru,ur,lu,ul,ru", _("Build a pin permutation")),
            ('pin-class growth --poly "z^3-2z^2-1" --tol 1e-6', _("Growth constant kappa")),
            ("pin-class count phi(per:;01) --max-len 6", _("Brute-force class counts")),
            ("pin-class catalog verify all", _("Check every named class")),
        ]
        for cmd, desc in examples:
            console.print(f"  [cyan]{cmd}[/]")
            console.print(f"    [dim]{desc}[/]\n")

        parser.exit()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pin-class",
        description=f"{APP_NAME} v{APP_VERSION} - {APP_DESC}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        add_help=False,
    )
    parser.add_argument("-h", "--help", action=ColoredHelpAction, help=_("Show this help message and exit"))
    parser.add_argument("-V", "--version", action="store_true", help=_("Print application version"))

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-len", type=int, help=_("Longest pattern length enumerated"))
    common.add_argument("--allow-long", action="store_true", help=_("Lift the cap of {0} on --max-len").format(MAX_LEN_LIMIT))
    common.add_argument("--tol", help=_("Root tolerance"))
    common.add_argument("--prefix-budget", type=int, help=_("Maximum pin letters read during enumeration"))
    common.add_argument("--format", choices=VALID_FORMATS, help=_("Output format"))
    common.add_argument("--log", action="store_true", help=_("Append diagnostics to the log file"))
    common.add_argument("-n", "--nocolor", action="store_true", help=_("Suppress color printing"))

    verbs = parser.add_subparsers(dest="verb")
    help_of = dict(VERBS)

    def verb(name):
        return verbs.add_parser(name, parents=[common], help=help_of[name])

    p = verb("validate")
    p.add_argument("word")
    p.set_defaults(handler=cmd_validate)

    p = verb("convert")
    p.add_argument("word")
    p.add_argument("--to", choices=["memory", "basic"])
    p.add_argument("--symmetry", choices=list(SYMMETRIES))
    p.set_defaults(handler=cmd_convert)

    p = verb("perm")
    p.add_argument("word", help=_("Pin word or gridded permutation such as 132|x=1,y=1"))
    p.add_argument("--length", type=int, help=_("Letters to read from an infinite word"))
    action = p.add_mutually_exclusive_group()
    action.add_argument("--decompose", action="store_true")
    action.add_argument("--indecomposable", action="store_true")
    action.add_argument("--contains", metavar="PATTERN")
    action.add_argument("--box-sum", metavar="OUTER")
    action.add_argument("--commute", metavar="OTHER")
    action.add_argument("--griddings", action="store_true")
    p.set_defaults(handler=cmd_perm)

    p = verb("plot")
    p.add_argument("word")
    p.add_argument("--length", type=int)
    p.add_argument("-o", "--output", help=_("Write the SVG to this file"))
    p.set_defaults(handler=cmd_plot)

    p = verb("factors")
    p.add_argument("word")
    p.add_argument("n", type=int)
    p.add_argument("--recurrent", action="store_true")
    p.set_defaults(handler=cmd_factors)

    p = verb("complexity")
    p.add_argument("word")
    p.add_argument("--recurrent", action="store_true")
    p.add_argument("--periodicity", action="store_true")
    p.set_defaults(handler=cmd_complexity)

    p = verb("count")
    p.add_argument("word")
    p.add_argument("--prefix-length", type=int)
    p.set_defaults(handler=cmd_count)

    p = verb("indec")
    p.add_argument("word")
    p.add_argument("--method", choices=["brute", "formula", "both"], default="brute")
    p.add_argument("--interior", action="store_true")
    p.add_argument("--prefix-length", type=int)
    p.set_defaults(handler=cmd_indec)

    p = verb("gf")
    p.add_argument("gf", nargs="?")
    p.add_argument("--series", type=int, metavar="N")
    p.add_argument("--closure", action="store_true", help=_("Treat the argument as indecomposables and close it"))
    p.add_argument("--cartier", nargs=5, metavar=("G_A", "G1", "G2", "G3", "G4"))
    p.add_argument("--from-counts", metavar="C1,C2,...", help=_("Sequence constant from its last term on"))
    p.set_defaults(handler=cmd_gf)

    p = verb("growth")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--poly")
    source.add_argument("--gf")
    p.set_defaults(handler=cmd_growth)

    p = verb("root")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--poly")
    source.add_argument("--g")
    p.set_defaults(handler=cmd_root)

    p = verb("catalog")
    p.add_argument("action", choices=["list", "show", "verify", "certificate", "gk", "bounds", "order"])
    p.add_argument("target", nargs="?")
    p.set_defaults(handler=cmd_catalog)

    p = verb("table")
    p.add_argument("name", choices=["section4", "nu", "gk"], help=_("section4 and nu name the same table"))
    p.add_argument("--k-max", type=int, default=8)
    p.set_defaults(handler=cmd_table)

    return parser


def make_context(args: argparse.Namespace, settings: Settings, logger: RichLogger) -> CommandContext:
    max_len = args.max_len if args.max_len is not None else settings.get("max_len")
    if max_len > MAX_LEN_LIMIT and not args.allow_long:
        raise InvalidSpecError(_("--max-len above {0} needs --allow-long").format(MAX_LEN_LIMIT))
    try:
        tol = Fraction(args.tol if args.tol is not None else settings.get("tolerance"))
    except (ValueError, ZeroDivisionError):
        raise InvalidSpecError(_("Invalid tolerance {0}").format(args.tol))
    if tol <= 0:
        raise InvalidSpecError(_("Tolerance must be positive"))
    budget = args.prefix_budget if args.prefix_budget is not None else settings.get("prefix_budget")
    fmt = args.format or settings.get("output_format")
    return CommandContext(logger, settings, fmt, tol, max_len, budget)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _parse_word(text: str) -> WordSpec:
    if text.startswith(PIN_PREFIXES):
        return parse_pin_spec(text)
    return parse_word_spec(text)


def _parse_pin_word(text: str, length: Optional[int]) -> PinWord:
    return finite_pin_word(parse_pin_spec(text), length)


def _parse_perm(text: str, length: Optional[int]) -> GriddedPermutation:
    if "|" in text:
        return GriddedPermutation.parse(text)
    return build_pin_permutation(_parse_pin_word(text, length))


def _digits(tol: Fraction) -> int:
    digits = 0
    while Fraction(1, 10**digits) > tol:
        digits += 1
    return digits


def _value_line(ctx: CommandContext, value: float, label: str) -> None:
    if ctx.fmt == "json":
        ctx.emit_json({label: value, "tol": float(ctx.tol)})
    else:
        ctx.require_format("text", "json")
        ctx.emit(f"{value:.{_digits(ctx.tol)}f}")


def _emit_sequence(ctx: CommandContext, sequence: CountSequence):
    if ctx.fmt == "json":
        ctx.logger.console.out(to_json_lines(sequence), end="")
    elif ctx.fmt == "csv":
        rows = [(n, c, sequence.provenance.value) for n, c in enumerate(sequence.values, start=1)]
        ctx.logger.console.out(to_csv(["length", "count", "provenance"], rows), end="")
    else:
        ctx.require_format("text")
        for n, count in enumerate(sequence.values, start=1):
            ctx.emit(f"{n} {count}")


def _emit_bool(ctx: CommandContext, label: str, value: bool):
    if ctx.fmt == "json":
        ctx.emit_json({label: value})
    else:
        ctx.emit("true" if value else "false")


def _window_set(spec: WordSpec, n: int, recurrent: bool, ctx: CommandContext) -> set:
    if isinstance(spec, ExplicitPrefix):
        ctx.logger.log("yellow", _("Literal prefix: factors of the prefix only"))
        return windows(spec.word, n)
    return recurrent_factors(spec, n) if recurrent else factors(spec, n)


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------

def cmd_validate(args, ctx: CommandContext) -> int:
    spec = parse_pin_spec(args.word)
    if ctx.fmt == "json":
        payload = {"accepted": True, "word": str(spec)}
        if isinstance(spec, ExplicitPrefix):
            payload["length"] = len(spec.word)
        ctx.emit_json(payload)
    else:
        ctx.emit(_("accepted"))
    return EXIT_OK


def cmd_convert(args, ctx: CommandContext) -> int:
    text = args.word.strip()
    from_basic = text.startswith("basic:")
    if from_basic:
        word = basic_to_memory(parse_basic(text))
    else:
        body = text[len("pin:lit:"):] if text.startswith("pin:lit:") else text
        word = PinWord(parse_pin_tokens(body))
    if args.symmetry:
        word = symmetry_transform(word, args.symmetry)
    if args.to:
        target = args.to
    elif args.symmetry:
        target = "basic" if from_basic else "memory"
    else:
        target = "memory" if from_basic else "basic"
    result = str(memory_to_basic(word)) if target == "basic" else format_pin_word(word)
    ctx.emit_value(target, result)
    return EXIT_OK


def cmd_perm(args, ctx: CommandContext) -> int:
    perm = _parse_perm(args.word, args.length)
    if args.decompose:
        parts = [str(p) for p in box_decompose(perm)]
        if ctx.fmt == "json":
            ctx.emit_json({"factors": parts})
        else:
            for part in parts:
                ctx.emit(part)
    elif args.indecomposable:
        _emit_bool(ctx, "indecomposable", is_box_indecomposable(perm))
    elif args.contains:
        _emit_bool(ctx, "contains", contains(perm, _parse_perm(args.contains, args.length)))
    elif args.commute:
        _emit_bool(ctx, "commute", commute(perm, _parse_perm(args.commute, args.length)))
    elif args.box_sum:
        result = str(box_sum(perm, _parse_perm(args.box_sum, args.length)))
        ctx.emit_value("perm", result)
    elif args.griddings:
        griddings = sorted((str(g) for g in all_griddings(perm.values)))
        if ctx.fmt == "json":
            ctx.emit_json({"count": len(griddings), "griddings": griddings})
        else:
            for g in griddings:
                ctx.emit(g)
    else:
        ctx.emit_value("perm", str(perm))
    return EXIT_OK


def cmd_plot(args, ctx: CommandContext) -> int:
    if "|" in args.word:
        svg = render_svg(GriddedPermutation.parse(args.word))
    else:
        word = _parse_pin_word(args.word, args.length)
        svg = render_svg(build_pin_permutation(word), pin_path(word))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(svg)
        ctx.logger.log("green", _("SVG written to {0}").format(args.output))
    else:
        ctx.logger.console.out(svg, end="")
    return EXIT_OK


def cmd_factors(args, ctx: CommandContext) -> int:
    spec = _parse_word(args.word)
    found = sorted(format_word(w) for w in _window_set(spec, args.n, args.recurrent, ctx))
    if ctx.fmt == "json":
        ctx.emit_json({"n": args.n, "count": len(found), "factors": found})
    else:
        for w in found:
            ctx.emit(w)
    return EXIT_OK


def cmd_complexity(args, ctx: CommandContext) -> int:
    spec = _parse_word(args.word)
    if args.periodicity:
        kind = str(classify_periodicity(spec))
        ctx.emit_value("periodicity", kind)
        return EXIT_OK
    rows = [(n, len(_window_set(spec, n, args.recurrent, ctx))) for n in range(1, ctx.max_len + 1)]
    label = "recurrent_complexity" if args.recurrent else "complexity"
    if ctx.fmt == "json":
        for n, c in rows:
            ctx.emit_json({"n": n, label: c})
    elif ctx.fmt == "csv":
        ctx.logger.console.out(to_csv(["n", label], rows), end="")
    else:
        for n, c in rows:
            ctx.emit(f"{n} {c}")
    return EXIT_OK


def cmd_count(args, ctx: CommandContext) -> int:
    spec = parse_pin_spec(args.word)
    _emit_sequence(ctx, class_counts(spec, ctx.max_len, args.prefix_length, ctx.prefix_budget, ctx.logger))
    return EXIT_OK


def cmd_indec(args, ctx: CommandContext) -> int:
    spec = parse_pin_spec(args.word)
    if args.interior:
        sequence = interior_indecomposable_counts(spec, ctx.max_len)
    else:
        sequence = indecomposable_counts(
            spec, ctx.max_len, args.method, args.prefix_length, ctx.prefix_budget, ctx.logger
        )
    _emit_sequence(ctx, sequence)
    return EXIT_OK


def cmd_gf(args, ctx: CommandContext) -> int:
    if args.cartier:
        gf = cartier_foata(*(RationalGF.parse(g) for g in args.cartier))
    elif args.from_counts:
        try:
            terms = [int(t) for t in args.from_counts.split(",")]
        except ValueError:
            raise InvalidSpecError(_("Counts must be comma-separated integers"))
        gf = eventually_constant_gf(terms)
    elif args.gf:
        gf = RationalGF.parse(args.gf)
    else:
        raise InvalidSpecError(_("Give a generating function, --cartier or --from-counts"))
    if args.closure:
        gf = box_closure_gf(gf)

    if args.series is not None:
        coefficients = series(gf, args.series)
        if ctx.fmt == "json":
            ctx.emit_json({"gf": str(gf), "series": [str(c) for c in coefficients]})
        else:
            ctx.emit(",".join(str(c) for c in coefficients))
    else:
        ctx.emit_value("gf", str(gf))
    return EXIT_OK


def cmd_growth(args, ctx: CommandContext) -> int:
    if args.poly:
        _value_line(ctx, largest_real_root(IntPolynomial.parse(args.poly), ctx.tol), "growth")
        return EXIT_OK
    try:
        value = growth_rate(RationalGF.parse(args.gf), ctx.tol)
    except NoPositiveRootError:
        ctx.emit_value("growth", None, _("subexponential"))
        return EXIT_OK
    _value_line(ctx, value, "growth")
    return EXIT_OK


def cmd_root(args, ctx: CommandContext) -> int:
    if args.poly:
        _value_line(ctx, largest_real_root(IntPolynomial.parse(args.poly), ctx.tol), "root")
    else:
        _value_line(ctx, smallest_positive_solution_of_g_eq_1(RationalGF.parse(args.g), ctx.tol), "root")
    return EXIT_OK


def _catalog_target(args) -> str:
    if not args.target:
        raise InvalidSpecError(_("catalog {0} needs a target").format(args.action))
    return args.target


def cmd_catalog(args, ctx: CommandContext) -> int:
    if args.action == "list":
        for item in ENTRIES.values():
            if ctx.fmt == "json":
                ctx.emit_json({
                    "name": item.name, "expected": item.expected, "polynomial": str(item.polynomial),
                    "certification": item.certification.value, "word": item.word,
                })
            else:
                ctx.emit(f"{item.name} {item.expected} {item.certification.value} {item.title}")
        return EXIT_OK

    if args.action == "show":
        item = entry(_catalog_target(args))
        fields = [
            ("name", item.name),
            ("title", item.title),
            ("word", item.word or ""),
            ("indec_gf", str(item.indec_gf) if item.indec_gf else ""),
            ("class_gf", str(item.class_gf) if item.class_gf else ""),
            ("polynomial", str(item.polynomial)),
            ("expected", item.expected),
            ("certification", item.certification.value),
        ]
        if item.note:
            fields.append(("note", item.note))
        if ctx.fmt == "json":
            ctx.emit_json(dict(fields))
        else:
            for key, value in fields:
                ctx.emit(f"{key}: {value}")
        return EXIT_OK

    if args.action == "verify":
        target = _catalog_target(args)
        names = list(ENTRIES) if target == "all" else [entry(target).name]
        verify_len = ctx.max_len if args.max_len is not None else ctx.settings.get("verify_max_len")
        reports = [verify(name, verify_len, ctx.prefix_budget, ctx.tol, ctx.logger) for name in names]
        for report in reports:
            if ctx.fmt == "json":
                ctx.emit_json(report.as_dict())
            else:
                verdict = "PASS" if report.passed else "FAIL"
                ctx.emit(f"{report.name} {report.expected} {report.computed:.9f} {report.delta:.1e} "
                         f"{report.certification.value} {verdict}")
        if ctx.fmt == "text":
            passed = sum(1 for r in reports if r.passed)
            ctx.logger.display_summary(_("Catalog verification"), [
                (_("Entries"), str(len(reports))),
                (_("Passed"), str(passed)),
                (_("Failed"), str(len(reports) - passed)),
            ])
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE

    if args.action == "certificate":
        try:
            k = int(_catalog_target(args))
        except ValueError:
            raise InvalidSpecError(_("k must be an integer"))
        report = mu_lower_bound_certificate(k)
        checks = {label: ok for label, ok in report.checks}
        if ctx.fmt == "json":
            ctx.emit_json({"k": k, "g": str(report.g), "root": report.root, "bound": report.bound,
                           "checks": checks, "passed": report.passed})
        else:
            ctx.emit(f"k={k} root={report.root:.12f} bound={report.bound:.6f} "
                     + " ".join(f"{label}={'ok' if ok else 'FAIL'}" for label, ok in report.checks))
        return EXIT_OK if report.passed else EXIT_FAILURE

    if args.action == "gk":
        try:
            k_max = int(args.target or 8)
        except ValueError:
            raise InvalidSpecError(_("k_max must be an integer"))
        family = gk_family(k_max)
        _emit_gk(ctx, family)
        return EXIT_OK if family.increasing and family.below_mu else EXIT_FAILURE

    if args.action == "bounds":
        checks = three_quadrant_bound_check() + four_quadrant_bound_check()
        for check in checks:
            if ctx.fmt == "json":
                ctx.emit_json({"label": check.label, "denominator": check.denominator.ascending(),
                               "expected": check.expected, "computed": check.computed, "passed": check.passed})
            else:
                ctx.emit(f"{check.label} {check.expected} {check.computed:.6f} {'PASS' if check.passed else 'FAIL'}")
        return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILURE

    values, holds = ordering_check()
    if ctx.fmt == "json":
        ctx.emit_json({"values": dict(values), "holds": holds})
    else:
        for name, value in values:
            ctx.emit(f"{name} {value:.9f}")
        ctx.emit(_("ordering holds") if holds else _("ordering FAILS"))
    return EXIT_OK if holds else EXIT_FAILURE


def _emit_gk(ctx: CommandContext, family):
    rows = [(k, f"{z:.15f}", f"{1 / z:.9f}") for k, z in family.rows]
    if ctx.fmt == "json":
        for k, z, g in rows:
            ctx.emit_json({"k": k, "root": z, "growth": g})
    elif ctx.fmt == "csv":
        ctx.logger.console.out(to_csv(["k", "root", "growth"], rows), end="")
    else:
        for k, z, g in rows:
            ctx.emit(f"{k} {z} {g}")


def cmd_table(args, ctx: CommandContext) -> int:
    if args.name == "gk":
        _emit_gk(ctx, gk_family(args.k_max))
        return EXIT_OK
    rows = [(row.ell, ",".join(str(c) for c in row.sequence), f"{row.growth:.5f}", row.expected) for row in nu_table()]
    if ctx.fmt == "csv":
        ctx.logger.console.out(to_csv(["ell", "sequence", "growth", "expected"], rows), end="")
    elif ctx.fmt == "json":
        for ell, sequence, growth, expected in rows:
            ctx.emit_json({"ell": ell, "sequence": sequence, "growth": growth, "expected": expected})
    else:
        ctx.require_format("text")
        for ell, sequence, growth, expected in rows:
            ctx.emit(f"{ell} {sequence} {growth} {expected}")
    return EXIT_OK
