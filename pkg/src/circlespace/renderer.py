"""Module description: terminal, JSON and CSV output for circlespace."""

from collections.abc import Sequence

from rich.console import Console
from rich.table import Table
from rich.text import Text

from .reporter import VerificationReport
from .spectrum import SPECTRUM_COLUMNS, SpectrumLine

# soft_wrap keeps long JSON lines and CSV rows intact on narrow terminals.
console = Console(soft_wrap=True)


def format_value(value) -> str:
    """17 significant digits for reals, plain text otherwise."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def format_csv(columns: Sequence[str], rows: list[dict]) -> str:
    lines = [",".join(columns)]
    lines += [",".join(format_value(row[c]) for c in columns) for row in rows]
    return "\n".join(lines) + "\n"


def print_csv(columns: Sequence[str], rows: list[dict]):
    console.out(format_csv(columns, rows), end="", highlight=False)


def print_json(data):
    console.print_json(data=data)


def _table(columns: Sequence[str], rows: list[dict], title: str | None = None) -> Table:
    table = Table(show_header=True, header_style="bold cyan", title=title)
    for column in columns:
        table.add_column(column, justify="right" if column not in ("id", "suite", "chart") else "left")
    for row in rows:
        table.add_row(*(format_value(row[c]) for c in columns))
    return table


def print_spectrum(lines: list[SpectrumLine], fmt: str):
    rows = [line.to_record() for line in lines]
    if fmt == "csv":
        print_csv(SPECTRUM_COLUMNS, rows)
    elif fmt == "json":
        print_json(rows)
    else:
        console.print(_table(SPECTRUM_COLUMNS, rows, title="Coupled interaction energy levels"))


def print_report(report: VerificationReport, fmt: str):
    """
    Print a verification report.
    Passing cases are green, failing ones red; the overall verdict follows the table.
    """
    if fmt == "json":
        print_json(report.to_record())
        return
    if fmt == "csv":
        print_csv(("id", "max_error", "tolerance", "pass"), [c.to_record() for c in report.cases])
        return

    table = Table(show_header=True, header_style="bold cyan", title=f"Suite: {report.suite}")
    table.add_column("Case", style="bold", no_wrap=True)
    table.add_column("Max error", justify="right")
    table.add_column("Tolerance", justify="right")
    table.add_column("Result", style="bold")
    for case in report.cases:
        verdict = Text("PASS", style="bold green") if case.passed else Text("FAIL", style="bold red")
        table.add_row(case.id, f"{case.max_error:.3e}", f"{case.tolerance:.1e}", verdict)
    console.print(table)
    if report.overall:
        console.print("[bold green]✅ All cases passed[/bold green]")
    else:
        console.print(f"[bold red]{len(report.failures)} case(s) failed[/bold red]")


def flatten(record: dict) -> dict:
    """Spread list values over indexed keys: coords -> coords_0 .. coords_3."""
    flat = {}
    for key, value in record.items():
        if isinstance(value, (list, tuple)):
            flat.update({f"{key}_{i}": v for i, v in enumerate(value)})
        else:
            flat[key] = value
    return flat


def print_records(records: list[dict], fmt: str, title: str | None = None):
    """Records such as chart points or charge densities; JSON keeps nesting, CSV and tables flatten it."""
    if fmt == "json":
        print_json(records[0] if len(records) == 1 else records)
        return
    rows = [flatten(r) for r in records]
    columns = list(dict.fromkeys(c for row in rows for c in row))
    rows = [{c: row.get(c, "") for c in columns} for row in rows]
    if fmt == "csv":
        print_csv(columns, rows)
    else:
        console.print(_table(columns, rows, title=title))
