#!/usr/bin/env python3
"""
hyperforge CLI - exact checks for Lie algebroids and epsilon-hypersymplectic triples

Usage:
    hyperforge validate fixtures/r4_basis.json
    hyperforge classify fixtures/r4_basis.json --triple omega1,omega2,omega3 [--json]
    hyperforge enumerate fixtures/r4_basis.json [--json] [--output PATH]
    hyperforge selftest fixtures/r4_basis.json --triple omega4,omega5,omega6
    hyperforge search [--budget N] [--seed S] [--json]

Exit codes: 0 success, 1 mathematical failure, 2 input error.
HYPERFORGE_THREADS caps the worker pool used by enumerate (0 = serial).
"""

import argparse
import sys
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.text import Text

from .algebra.algebroid import Form, Mu, build_mu, check_jacobi, differential
from .algebra.conventions import current_constants, fingerprint, verify_calibration
from .algebra.document import InputDocument, load_document
from .algebra.hyperstruct import ClassificationReport, StructClass, build_triple, classify
from .algebra.search import search_positive_product
from .algebra.superalgebra import big_bracket
from .common.colors import HYPERFORGE_COLORS
from .common.config import (
    DEFAULT_FIXTURE,
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_SEARCH_SEED,
    TOOL_NAME,
    TOOL_VERSION,
)
from .common.errors import (
    ExpressionSyntaxError,
    HyperforgeError,
    InputDocumentError,
    JacobiError,
    PreconditionError,
)
from .common.reports import ReportGenerator
from .common.utils import (
    CheckResult,
    console,
    create_checks_table,
    err_console,
    failed_names,
    format_epsilon,
    make_progress,
    parallel_map,
)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2

COMMANDS = {
    "validate": "Check Jacobi, closedness and nondegeneracy of an input document",
    "classify": "Classify one ordered triple of declared forms",
    "enumerate": "Classify every triple of pairwise-distinct declared forms",
    "selftest": "Calibration probes plus the full identity suite for one triple",
    "search": "Look for a triple on T R^4 with e1e2e3 = +1",
}


def show_help():
    """Show detailed help information"""
    help_text = Text()
    help_text.append(f"{TOOL_NAME} {TOOL_VERSION}", style=f"bold {HYPERFORGE_COLORS['highlight2']}")
    help_text.append("\n\n")
    help_text.append("Exact big-bracket calculus for Lie algebroids and\n", style=f"{HYPERFORGE_COLORS['highlight3']}")
    help_text.append("epsilon-hypersymplectic structures\n", style=f"{HYPERFORGE_COLORS['highlight3']}")
    help_text.append("\n")

    help_text.append("Commands:", style=f"bold {HYPERFORGE_COLORS['highlight1']}")
    help_text.append("\n")
    for name, description in COMMANDS.items():
        help_text.append(f"  {name:<10} - {description}\n", style=f"{HYPERFORGE_COLORS['highlight3']}")

    help_text.append("\n")
    help_text.append("Common Usage Patterns:", style=f"bold {HYPERFORGE_COLORS['highlight1']}")
    help_text.append("\n")
    help_text.append("  # Golden classification of the six forms on R^4\n", style=f"{HYPERFORGE_COLORS['highlight4']}")
    help_text.append(f"  hyperforge enumerate {DEFAULT_FIXTURE.name} --json\n", style=f"{HYPERFORGE_COLORS['highlight4']}")
    help_text.append("\n")
    help_text.append("  # One ordered triple\n", style=f"{HYPERFORGE_COLORS['highlight4']}")
    help_text.append(f"  hyperforge classify {DEFAULT_FIXTURE.name} --triple omega1,omega2,omega4\n",
                     style=f"{HYPERFORGE_COLORS['highlight4']}")
    help_text.append("\n")
    help_text.append("  # Calibration gate and identity suite\n", style=f"{HYPERFORGE_COLORS['highlight4']}")
    help_text.append(f"  hyperforge selftest {DEFAULT_FIXTURE.name} --triple omega1,omega2,omega3\n",
                     style=f"{HYPERFORGE_COLORS['highlight4']}")

    panel = Panel.fit(
        help_text,
        border_style=f"{HYPERFORGE_COLORS['highlight4']}",
        title=f"{TOOL_NAME} Help",
        padding=(1, 2),
    )

    console.print(panel)


class Output:
    """Routes status lines: stdout normally, stderr under --json, nowhere under --quiet"""

    def __init__(self, args: argparse.Namespace):
        self.json = getattr(args, "json", False)
        self.quiet = getattr(args, "quiet", False)
        self.console: Console = err_console if self.json else console

    def status(self, message: str, color: str = "highlight3"):
        if not self.quiet:
            self.console.print(f"[{HYPERFORGE_COLORS[color]}]{escape(message)}[/]")

    def ok(self, message: str):
        self.status(f"✅ {message}", "highlight4")

    def fail(self, message: str):
        # failures are shown even under --quiet
        err_console.print(f"[{HYPERFORGE_COLORS['alert']}]❌ {escape(message)}[/]")

    def warn(self, message: str):
        self.status(f"⚠️  {message}", "warning")

    def show(self, renderable):
        if renderable is not None and not self.quiet:
            self.console.print(renderable)


def report_generator() -> ReportGenerator:
    conventions = {"constants": current_constants(), "fingerprint": fingerprint()}
    return ReportGenerator(conventions, classes=[c.value for c in StructClass])


def emit(args: argparse.Namespace, out: Output, generator: ReportGenerator, document: Dict):
    """Print the document (JSON or rich) and save it when --output is given"""
    if out.json:
        print(generator.to_json(document))
    elif not out.quiet:
        generator.print_document(document, out.console)
    if getattr(args, "output", None):
        generator.save(document, args.output, target=out.console if not out.quiet else Console(quiet=True))


def form_problem(mu, W) -> Optional[str]:
    """Why a declared form cannot enter a triple, or None"""
    if differential(mu, Form.from_matrix(mu.gens, W)).is_zero:
        if W.determinant().is_zero:
            return "degenerate (det = 0)"
        return None
    return "not closed (d omega != 0)"


def show_classification(out: Output, report: ClassificationReport):
    style = {
        StructClass.HYPERSYMPLECTIC: "highlight4",
        StructClass.PARA_HYPERSYMPLECTIC: "highlight2",
        StructClass.POSITIVE_PRODUCT: "accent",
        StructClass.NOT_EPSILON: "highlight3",
    }[report.struct_class]
    eps = report.epsilon.eps if report.epsilon else None
    out.status(f"🔍 ({', '.join(report.triple)}): {report.struct_class.value}  ε = {format_epsilon(eps)}", style)
    if report.canonical_epsilon and report.canonical_epsilon != eps:
        out.status(f"   canonical ε = {format_epsilon(report.canonical_epsilon)}")
    out.show(create_checks_table([c for c in report.suite if not c.passed], "Failed identities"))
    out.show(create_checks_table(report.positive_suite, "Positive-product identities"))
    if report.hyperkahler is not None:
        out.show(create_checks_table(report.hyperkahler.checks, "Hyperkähler correspondence"))
    if report.suite:
        passed = sum(1 for c in report.suite if c.passed)
        out.status(f"📊 identity suite {passed}/{len(report.suite)}, "
                   f"induced pairs {sum(1 for p in report.induced if p.passed)}/{len(report.induced)}")


# Commands


def cmd_validate(args: argparse.Namespace, out: Output) -> int:
    doc = load_document(args.file)
    mu = build_mu(doc.to_spec())
    out.status(f"🔍 Validating {doc.source} (base dim {doc.dim}, rank {doc.rank}, {len(doc.forms)} forms)", "highlight2")

    jacobi = check_jacobi(mu)
    checks = [CheckResult(
        "{mu, mu} = 0",
        jacobi,
        "" if jacobi else f"{{mu, mu}} = {big_bracket(mu.elem, mu.elem).render()}",
    )]
    for name, W in doc.form_matrices().items():
        closed = differential(mu, Form.from_matrix(mu.gens, W)).is_zero
        checks.append(CheckResult(f"{name} closed", closed))
        checks.append(CheckResult(f"{name} nondegenerate", not W.determinant().is_zero))

    generator = report_generator()
    passed = all(c.passed for c in checks)
    document = generator.build_document(
        doc.to_dict(), [], extra={"checks": [c.to_dict() for c in checks], "passed": passed}
    )
    out.show(create_checks_table(checks, "Validation"))
    emit(args, out, generator, document)

    if passed:
        out.ok("All validation checks passed")
        return EXIT_OK
    out.fail(f"Validation failed: {', '.join(failed_names(checks))}")
    return EXIT_MATH


def integrable_mu(doc: InputDocument) -> Mu:
    """build_mu gated on {mu, mu} = 0"""
    mu = build_mu(doc.to_spec())
    if not check_jacobi(mu):
        raise JacobiError(doc.source)
    return mu


def _triple_for(doc: InputDocument, names: Sequence[str]):
    mu = integrable_mu(doc)
    return build_triple(mu, *[doc.form(name) for name in names], names=names)


def cmd_classify(args: argparse.Namespace, out: Output) -> int:
    doc = load_document(args.file)
    names = doc.resolve_triple(args.triple)
    if len(set(names)) < 3:
        out.warn(f"triple ({', '.join(names)}) repeats a form")
    report = classify(_triple_for(doc, names))
    show_classification(out, report)

    generator = report_generator()
    emit(args, out, generator, generator.build_document(doc.to_dict(), [report.to_dict()]))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, out: Output) -> int:
    doc = load_document(args.file)
    if len(doc.forms) < 3:
        raise InputDocumentError(f"enumerate needs at least 3 forms, {doc.source} declares {len(doc.forms)}")
    mu = integrable_mu(doc)

    usable: List[str] = []
    excluded = []
    for name, W in doc.form_matrices().items():
        problem = form_problem(mu, W)
        if problem:
            out.warn(f"{name} excluded: {problem}")
            excluded.append({"form": name, "reason": problem})
        else:
            usable.append(name)

    triples = list(combinations(usable, 3))
    out.status(f"🔥 Classifying {len(triples)} triples from {len(usable)} forms", "highlight2")

    def run(names):
        return classify(build_triple(mu, *[doc.form(n) for n in names], names=names))

    if out.quiet or not triples:
        reports = parallel_map(run, triples)
    else:
        with make_progress(out.console) as progress:
            task = progress.add_task("Classifying", total=len(triples))
            reports = parallel_map(run, triples, on_done=lambda done: progress.update(task, completed=done))

    generator = report_generator()
    document = generator.build_document(doc.to_dict(), [r.to_dict() for r in reports], excluded)
    emit(args, out, generator, document)
    out.ok(f"Classified {len(reports)} triples")
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace, out: Output) -> int:
    calibration = verify_calibration()
    out.show(create_checks_table(calibration, "Calibration probes"))

    doc = load_document(args.file)
    names = doc.resolve_triple(args.triple)
    report = classify(_triple_for(doc, names))
    show_classification(out, report)

    generator = report_generator()
    document = generator.build_document(
        doc.to_dict(), [report.to_dict()], extra={"calibration": [c.to_dict() for c in calibration]}
    )
    emit(args, out, generator, document)

    if report.epsilon is None:
        raise PreconditionError(f"({', '.join(names)}) has no epsilon-signature")
    failures = failed_names(calibration) + report.failures()
    if failures:
        out.fail(f"{len(failures)} check(s) failed: {', '.join(failures)}")
        return EXIT_MATH
    out.ok("Calibration and identity suite passed")
    return EXIT_OK


def cmd_search(args: argparse.Namespace, out: Output) -> int:
    out.status(f"🔍 Searching (budget {args.budget}, seed {args.seed})", "highlight2")
    result = search_positive_product(args.budget, args.seed)
    generator = report_generator()
    reports = []
    if result.found:
        report = classify(result.triple())
        show_classification(out, report)
        reports.append(report.to_dict())
    document = generator.build_document(
        {"file": None, "forms": list(result.names)}, reports, extra={"search": result.to_dict()}
    )
    emit(args, out, generator, document)

    if result.found:
        out.ok(f"Found ({', '.join(result.names)}) in the {result.phase} phase after {result.examined} candidates")
        return EXIT_OK
    out.fail(f"No positive-product triple within {result.examined} candidates")
    return EXIT_MATH


HANDLERS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "selftest": cmd_selftest,
    "search": cmd_search,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Exact big-bracket checks for Lie algebroids and epsilon-hypersymplectic triples",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Validate the six-form fixture
  hyperforge validate fixtures/r4_basis.json

  # Classify an ordered triple
  hyperforge classify fixtures/r4_basis.json --triple omega1,omega2,omega3 --json

  # Classify every triple and keep the report
  hyperforge enumerate fixtures/r4_basis.json --output reports/r4.json

  # Positive-product search
  hyperforge search --budget 500 --seed 7
        """,
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="Emit the report document as JSON on stdout")
    shared.add_argument("--quiet", "-q", action="store_true", help="Suppress status lines")
    shared.add_argument("--output", "-o", metavar="PATH", help="Also write the report document to PATH")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    for name, description in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[shared], help=description, description=description)
        if name != "search":
            sub.add_argument(
                "file",
                nargs="?",
                default=str(DEFAULT_FIXTURE),
                help=f"Input document (default: {DEFAULT_FIXTURE.name})",
            )
        if name in ("classify", "selftest"):
            sub.add_argument("--triple", "-t", required=True, metavar="A,B,C",
                             help="Comma-separated ordered triple of form names")
        if name == "search":
            sub.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET,
                             help=f"Candidates to examine (default: {DEFAULT_SEARCH_BUDGET})")
            sub.add_argument("--seed", type=int, default=DEFAULT_SEARCH_SEED,
                             help=f"Seed of the randomized phase (default: {DEFAULT_SEARCH_SEED})")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point; returns the exit code"""
    argv = list(sys.argv[1:] if argv is None else argv)

    # If no arguments, show help
    if not argv:
        show_help()
        return EXIT_OK

    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        show_help()
        return EXIT_OK

    out = Output(args)
    try:
        return HANDLERS[args.command](args, out)
    except ExpressionSyntaxError as e:
        out.fail(str(e))
        if e.text:
            err_console.print(e.pointer(), markup=False, highlight=False)
        return EXIT_INPUT
    except HyperforgeError as e:
        out.fail(str(e))
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
