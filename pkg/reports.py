"""
Tabular views of toolkit results.

Tables are pandas DataFrames so the CLI ``--table`` flags and the MCP
server render them the same way.
"""

from __future__ import annotations

import io
from typing import Optional, Sequence

import pandas as pd

from config import TABLE_MAX_ROWS
from geometry import Point
from order_types import OrderTypeCatalog
from plc import KernelReport, candidate_lines
from protocol import Direction, ProtocolTranscript

DEFAULT_MAX_TOKENS = 10000


def _format_points(points: Sequence[Point]) -> str:
    return " ".join(f"({p})" for p in points)


def candidate_lines_frame(points: Sequence[Point]) -> pd.DataFrame:
    rows = [
        {
            "a": cand.line.a,
            "b": cand.line.b,
            "c": cand.line.c,
            "line": str(cand.line),
            "covered": len(cand.indices),
            "indices": " ".join(str(i) for i in cand.indices),
        }
        for cand in candidate_lines(points)
    ]
    return pd.DataFrame(rows, columns=["a", "b", "c", "line", "covered", "indices"])


def kernel_firings_frame(report: KernelReport) -> pd.DataFrame:
    rows = [
        {"step": step, "line": str(f.line), "covered": f.covered, "k_before": f.k_before, "k_after": f.k_before - 1}
        for step, f in enumerate(report.firings, start=1)
    ]
    return pd.DataFrame(rows, columns=["step", "line", "covered", "k_before", "k_after"])


def catalog_frame(catalog: OrderTypeCatalog) -> pd.DataFrame:
    rows = [
        {
            "otr": entry.otr.to_string(),
            "min_cover": entry.min_cover,
            "collinear_triples": entry.otr.values.count(0),
            "representative": _format_points(entry.representative),
        }
        for entry in catalog.entries
    ]
    return pd.DataFrame(rows, columns=["otr", "min_cover", "collinear_triples", "representative"])


def transcript_frame(transcript: ProtocolTranscript) -> pd.DataFrame:
    rows = [
        {
            "direction": message.direction.value,
            "bits": message.length,
            "counted": message.direction == Direction.ALICE_TO_BOB,
            "label": message.label,
        }
        for message in transcript.messages
    ]
    frame = pd.DataFrame(rows, columns=["direction", "bits", "counted", "label"])
    frame["alice_total"] = frame["bits"].where(frame["counted"], 0).cumsum()
    return frame


def coerce_max_rows(max_rows: Optional[int], default: int = TABLE_MAX_ROWS, upper: int = 1000) -> int:
    """Keep tables bounded for LLM-friendly responses."""
    try:
        value = int(max_rows) if max_rows is not None else default
    except (TypeError, ValueError):
        value = default
    return max(1, min(value, upper))


def dataframe_to_text(df: pd.DataFrame, name: str, max_rows: Optional[int] = TABLE_MAX_ROWS) -> str:
    """Convert a DataFrame to bounded text, preserving total row counts."""
    if df is None or df.empty:
        return f"\n{name}: No data available\n"

    max_rows = coerce_max_rows(max_rows)
    total_rows = len(df)
    shown = df.head(max_rows)

    buffer = io.StringIO()
    shown.to_string(buf=buffer, index=False, max_rows=max_rows, max_cols=None)

    result = f"\n{name}:"
    if total_rows > max_rows:
        result += f" showing first {max_rows} of {total_rows} rows"
    else:
        result += f" {total_rows} rows"
    result += f"\n{buffer.getvalue()}\n"
    return result


def truncate_output(text: str, max_tokens: int = DEFAULT_MAX_TOKENS) -> str:
    """Truncate output to roughly ``max_tokens`` tokens and add a notice if truncated."""
    max_chars = max_tokens * 4
    if len(text) <= max_chars:
        return text
    truncated = text[:max_chars]
    last_break = max(truncated.rfind(" "), truncated.rfind("\n"))
    if last_break > max_chars * 0.9:
        truncated = truncated[:last_break]
    return (
        truncated
        + f"\n\n[OUTPUT TRUNCATED: Response exceeded {max_tokens:,} tokens. "
        "Use a smaller instance or max_rows for complete results.]"
    )
