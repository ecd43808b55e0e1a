"""
Report consolidation and presentation

Builds the ReportDocument (tool, conventions, input, per-triple reports,
summary counts and excluded forms), writes it as JSON and renders rich
summaries of it. Documents carry no timestamps, so identical inputs give
byte-identical output.
"""

import json
from collections import OrderedDict
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from .colors import CLASS_STYLES, HYPERFORGE_COLORS
from .config import REPORTS_DIR, TOOL_NAME, TOOL_VERSION
from .utils import console, format_epsilon

ReportDocument = Dict[str, Any]


class ReportGenerator:
    """Assembles, saves and renders ReportDocuments"""

    def __init__(self, conventions: Mapping[str, Any], classes: Sequence[str] = (),
                 reports_dir: Optional[Path] = None):
        self.conventions = dict(conventions)
        self.classes = list(classes)
        self.reports_dir = reports_dir or REPORTS_DIR

    def summarize(self, reports: Iterable[Mapping[str, Any]]) -> "OrderedDict[str, int]":
        """Count of reports per class, every known class listed"""
        summary = OrderedDict((name, 0) for name in self.classes)
        for report in reports:
            summary[report["class"]] = summary.get(report["class"], 0) + 1
        return summary

    def build_document(
        self,
        input_info: Mapping[str, Any],
        reports: List[Mapping[str, Any]],
        excluded: Sequence[Mapping[str, Any]] = (),
        extra: Optional[Mapping[str, Any]] = None,
    ) -> ReportDocument:
        document = OrderedDict()
        document["tool"] = {"name": TOOL_NAME, "version": TOOL_VERSION}
        document["conventions"] = self.conventions
        document["input"] = dict(input_info)
        document["reports"] = list(reports)
        document["summary"] = self.summarize(reports)
        document["excluded"] = list(excluded)
        if extra:
            document.update(extra)
        return document

    @staticmethod
    def to_json(document: ReportDocument) -> str:
        return json.dumps(document, indent=2)

    def save(self, document: ReportDocument, output_file: Optional[Path] = None, target: Console = None) -> Path:
        """Write the document as JSON; defaults to <reports_dir>/<input file>.report.json"""
        if output_file is None:
            stem = Path(str(document.get("input", {}).get("file") or "hyperforge")).stem
            output_file = self.reports_dir / f"{stem}.report.json"
        output_file = Path(output_file)
        output_file.parent.mkdir(parents=True, exist_ok=True)

        with open(output_file, "w", encoding="utf-8") as f:
            f.write(self.to_json(document))
            f.write("\n")

        (target or console).print(f"[{HYPERFORGE_COLORS['highlight4']}]📋 Report saved: {output_file}[/]")
        return output_file

    def create_reports_table(self, document: ReportDocument) -> Optional[Table]:
        """One row per classified triple"""
        reports = document.get("reports") or []
        if not reports:
            return None

        table = Table(title="Classified Triples", show_header=True)
        table.add_column("Triple", style=f"{HYPERFORGE_COLORS['highlight2']}")
        table.add_column("Class")
        table.add_column("ε", justify="center")
        table.add_column("Identities", justify="right", style=f"{HYPERFORGE_COLORS['highlight1']}")
        table.add_column("Induced", justify="right", style=f"{HYPERFORGE_COLORS['highlight1']}")

        for report in reports:
            style = CLASS_STYLES.get(report["class"], HYPERFORGE_COLORS["highlight3"])
            checks = report["suite"] + report["positive_suite"] + report["compatibility"]
            induced = report["induced"]
            table.add_row(
                ", ".join(report["triple"]),
                f"[{style}]{report['class']}[/]",
                format_epsilon(report["epsilon"]),
                _ratio(sum(1 for c in checks if c["passed"]), len(checks)),
                _ratio(sum(1 for p in induced if p["passed"]), len(induced)),
            )

        return table

    def create_summary_panel(self, document: ReportDocument) -> Panel:
        """Tool, conventions and class counts"""
        summary = document.get("summary") or {}
        excluded = document.get("excluded") or []
        conventions = document.get("conventions") or {}

        summary_text = Text()
        summary_text.append("Input: ", style="bold")
        summary_text.append(f"{document['input'].get('file') or '-'}\n", style=f"bold {HYPERFORGE_COLORS['highlight2']}")

        summary_text.append("Conventions: ", style="bold")
        summary_text.append(f"{str(conventions.get('fingerprint', '-'))[:16]}\n", style=f"{HYPERFORGE_COLORS['highlight3']}")

        summary_text.append("Triples: ", style="bold")
        summary_text.append(f"{len(document.get('reports') or [])}\n", style=f"{HYPERFORGE_COLORS['highlight3']}")

        for name, count in summary.items():
            summary_text.append(f"{name}: ", style="bold")
            summary_text.append(f"{count}\n", style=CLASS_STYLES.get(name, HYPERFORGE_COLORS["highlight3"]))

        summary_text.append("Excluded forms: ", style="bold")
        summary_text.append(
            f"{len(excluded)}",
            style=f"{HYPERFORGE_COLORS['alert'] if excluded else HYPERFORGE_COLORS['highlight4']}",
        )

        return Panel(
            summary_text,
            title=f"{TOOL_NAME} {TOOL_VERSION}",
            border_style=HYPERFORGE_COLORS["highlight4"],
        )

    def print_document(self, document: ReportDocument, target: Console = None):
        out = target or console
        out.print(self.create_summary_panel(document))
        table = self.create_reports_table(document)
        if table is not None:
            out.print(table)
        for entry in document.get("excluded") or []:
            out.print(f"[{HYPERFORGE_COLORS['warning']}]⚠️  {entry['form']} excluded: {entry['reason']}[/]")


def _ratio(passed: int, total: int) -> str:
    if total == 0:
        return "-"
    return f"{passed}/{total}"
