import io
import json
import logging
from typing import Any, Dict, List, Sequence

import pandas as pd

from pythforms.models.report import OutputFormat, SweepReport, TableData
from pythforms.utils.arith import factorize

logger = logging.getLogger(__name__)


def annotate(n: int) -> str:
    """'33(=3·11)' for composites, the bare value for primes and 1."""
    fact = factorize(n)
    if fact.n == 1 or fact.is_prime:
        return str(n)
    return f"{n}(={fact.annotation()})"


def factor_pairs(n: int) -> List[List[int]]:
    """[[prime, exponent], ...] as emitted in json-lines output."""
    return [[p, k] for p, k in factorize(n).factors]


def render_markdown(columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    headers = list(columns)
    frame = pd.DataFrame([list(row) for row in rows], columns=range(len(headers)), dtype=object).astype(str)
    widths = [
        max(len(header), int(frame[i].str.len().max())) if len(frame) else len(header)
        for i, header in enumerate(headers)
    ]
    lines = [
        "| " + " | ".join(header.ljust(w) for header, w in zip(headers, widths)) + " |",
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
    ]
    if len(frame):
        padded = frame.apply(lambda column: column.str.ljust(widths[column.name]))
        lines.extend(("| " + padded.apply(" | ".join, axis=1) + " |").tolist())
    return "\n".join(lines) + "\n"


def render_csv(columns: Sequence[str], records: Sequence[Dict[str, Any]]) -> str:
    frame = pd.DataFrame(list(records), columns=list(columns))
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def render_jsonl(records: Sequence[Dict[str, Any]]) -> str:
    return "".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records)


def render_table(table: TableData, fmt: OutputFormat) -> str:
    """
    Render one table in the requested format.

    Records feed csv (restricted to `table.columns`) and json-lines (every key);
    markdown uses `table.display` when given so cells can carry annotations.
    Titles and notes appear in markdown only; a summary, when present, is the
    first json-lines object.
    """
    if fmt is OutputFormat.CSV:
        return render_csv(table.columns, table.records)
    if fmt is OutputFormat.JSON_LINES:
        lead = [table.summary] if table.summary is not None else []
        return render_jsonl(lead + list(table.records))

    display = table.display
    if display is None:
        display = [[record.get(col, "") for col in table.columns] for record in table.records]
    parts = []
    if table.title:
        parts.append(f"## {table.title}\n\n")
    parts.append(render_markdown(table.headers or table.columns, display))
    if table.notes:
        parts.append("\n" + "".join(f"- {note}\n" for note in table.notes))
    return "".join(parts)


def render_report(report: SweepReport, fmt: OutputFormat) -> str:
    """
    Sweep outcome without timing data, so reruns print identical bytes.

    csv carries the summary row only; markdown and json-lines add one entry per
    counterexample.
    """
    summary = {
        "check": report.check,
        "bound": report.bound,
        "checked": report.checked,
        "counterexamples": len(report.counterexamples),
        "status": report.status,
    }
    columns = list(summary)
    found = [{"value": c.value, "detail": c.detail} for c in report.counterexamples]
    if fmt is OutputFormat.CSV:
        return render_csv(columns, [summary])
    if fmt is OutputFormat.JSON_LINES:
        return render_jsonl([summary] + found)

    text = render_table(TableData(columns=columns, records=[summary], title=f"sweep {report.check}"), fmt)
    if found:
        text += "\n" + render_table(TableData(columns=["value", "detail"], records=found), fmt)
    if report.notes:
        text += "\n" + "".join(f"- {note}\n" for note in report.notes)
    return text
