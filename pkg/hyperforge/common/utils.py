"""
Shared utility functions for hyperforge
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, asdict
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

from rich.console import Console
from rich.markup import escape
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from .colors import HYPERFORGE_COLORS
from .config import thread_limit

console = Console()
err_console = Console(stderr=True)

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class CheckResult:
    """Outcome of one identity or predicate check"""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


def failed_names(results: Iterable[CheckResult]) -> List[str]:
    return [result.name for result in results if not result.passed]


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    threads: Optional[int] = None,
    on_done: Optional[Callable[[int], None]] = None,
) -> List[R]:
    """
    Apply func to every item, optionally on a thread pool

    Results come back in input order whatever the scheduling. threads=None
    reads HYPERFORGE_THREADS; 0 (or a single item) runs inline.
    """
    if threads is None:
        threads = thread_limit()
    items = list(items)
    if threads == 0 or len(items) <= 1:
        results = []
        for item in items:
            results.append(func(item))
            if on_done:
                on_done(len(results))
        return results

    ordered: List[Optional[R]] = [None] * len(items)
    done = 0
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        futures = {pool.submit(func, item): index for index, item in enumerate(items)}
        for future in as_completed(futures):
            ordered[futures[future]] = future.result()
            done += 1
            if on_done:
                on_done(done)
    return ordered


def make_progress(target: Console = None) -> Progress:
    """Spinner + bar + M/N progress display"""
    return Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        console=target or err_console,
        transient=True,
    )


def create_checks_table(results: List[CheckResult], title: str) -> Optional[Table]:
    """Pass/fail table for a list of checks"""
    if not results:
        return None

    table = Table(title=title, show_header=True)
    table.add_column("Check", style=f"{HYPERFORGE_COLORS['highlight2']}")
    table.add_column("Result", justify="center")
    table.add_column("Detail", style=f"{HYPERFORGE_COLORS['highlight3']}")

    for result in results:
        status = (
            f"[{HYPERFORGE_COLORS['highlight4']}]✅ pass[/]"
            if result.passed
            else f"[{HYPERFORGE_COLORS['alert']}]❌ fail[/]"
        )
        table.add_row(escape(result.name), status, escape(result.detail))

    return table


def format_epsilon(epsilon: Optional[Sequence[int]]) -> str:
    if epsilon is None:
        return "-"
    return "(" + ", ".join(f"{value:+d}" for value in epsilon) + ")"
