"""
Line-oriented text formats for instances, order types, catalogs and transcripts.

Grammar shared by every format: ``#`` starts a comment, blank lines are
ignored, rationals are written ``p/q`` or as bare integers.

- plc:   ``n k`` then n lines ``x y``
- lpc:   ``m k`` then m lines ``slope intercept``
- graph: ``n m k`` then m lines ``u v`` (1-indexed vertices)
- otr:   ``otr n`` then the C(n,3)-character string over ``- 0 +``
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from duality import LpcInstance, SlopeLine
from errors import DuplicateLineError, DuplicatePointError, FormatSyntaxError
from geometry import Line, Point, format_rational
from order_types import CatalogEntry, CatalogMode, Otr, OrderTypeCatalog
from plc import KernelReport, PlcInstance
from protocol import GRID_NOTE, ProtocolTranscript
from vc_reduction import Graph, VcInstance

_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_NATURAL = re.compile(r"^\d+$")

KINDS = ("plc", "lpc", "graph", "otr")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Non-blank lines with comments stripped, paired with 1-based line numbers."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def parse_rational(token: str, line_number: int = 0) -> Fraction:
    if not _RATIONAL.match(token):
        raise FormatSyntaxError(f"expected a rational like 3 or -1/2, got {token!r}", line_number)
    try:
        return Fraction(token)
    except ZeroDivisionError as exc:
        raise FormatSyntaxError(f"zero denominator in {token!r}", line_number) from exc


def _parse_natural(token: str, what: str, line_number: int) -> int:
    if not _NATURAL.match(token):
        raise FormatSyntaxError(f"{what} must be a non-negative integer, got {token!r}", line_number)
    return int(token)


def _fields(line: tuple[int, str], count: int, what: str) -> list[str]:
    number, content = line
    parts = content.split()
    if len(parts) != count:
        raise FormatSyntaxError(f"{what} needs {count} fields, got {len(parts)}", number)
    return parts


def _body(lines: list[tuple[int, str]], expected: int, what: str) -> list[tuple[int, str]]:
    body = lines[1:]
    if len(body) != expected:
        last = lines[-1][0] if lines else 0
        raise FormatSyntaxError(f"header announces {expected} {what}, found {len(body)}", last)
    return body


def _header(text: str, names: Sequence[str]) -> tuple[list[tuple[int, str]], list[int]]:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatSyntaxError(f"missing header '{' '.join(names)}'", 0)
    parts = _fields(lines[0], len(names), "header")
    return lines, [_parse_natural(p, name, lines[0][0]) for p, name in zip(parts, names)]


# ---------------------------------------------------------------------------
# Instances
# ---------------------------------------------------------------------------

def parse_plc(text: str) -> PlcInstance:
    lines, (n, k) = _header(text, ("n", "k"))
    points: list[Point] = []
    seen: dict[Point, int] = {}
    for line in _body(lines, n, "points"):
        x, y = _fields(line, 2, "point")
        point = Point(parse_rational(x, line[0]), parse_rational(y, line[0]))
        if point in seen:
            raise DuplicatePointError(f"line {line[0]}: point {point} already given on line {seen[point]}")
        seen[point] = line[0]
        points.append(point)
    return PlcInstance(tuple(points), k)


def emit_plc(inst: PlcInstance) -> str:
    rows = [f"{inst.n} {inst.k}"]
    rows.extend(f"{format_rational(p.x)} {format_rational(p.y)}" for p in inst.points)
    return "\n".join(rows) + "\n"


def parse_lpc(text: str) -> LpcInstance:
    lines, (m, k) = _header(text, ("m", "k"))
    parsed: list[SlopeLine] = []
    seen: dict[SlopeLine, int] = {}
    for line in _body(lines, m, "lines"):
        slope, intercept = _fields(line, 2, "line")
        item = SlopeLine(parse_rational(slope, line[0]), parse_rational(intercept, line[0]))
        if item in seen:
            raise DuplicateLineError(f"line {line[0]}: y = {item.m}*x + {item.c} already given on line {seen[item]}")
        seen[item] = line[0]
        parsed.append(item)
    return LpcInstance(tuple(parsed), k)


def emit_lpc(inst: LpcInstance) -> str:
    rows = [f"{inst.m} {inst.k}"]
    rows.extend(f"{format_rational(line.m)} {format_rational(line.c)}" for line in inst.lines)
    return "\n".join(rows) + "\n"


def parse_graph(text: str) -> VcInstance:
    lines, (n, m, k) = _header(text, ("n", "m", "k"))
    edges: set[tuple[int, int]] = set()
    for line in _body(lines, m, "edges"):
        u, v = (_parse_natural(t, "vertex", line[0]) for t in _fields(line, 2, "edge"))
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatSyntaxError(f"edge {u} {v} outside vertices 1..{n}", line[0])
        if u == v:
            raise FormatSyntaxError(f"loop at vertex {u}", line[0])
        edge = (min(u, v) - 1, max(u, v) - 1)
        if edge in edges:
            raise FormatSyntaxError(f"repeated edge {u} {v}", line[0])
        edges.add(edge)
    return VcInstance(Graph.from_edges(n, edges), k)


def emit_graph(inst: VcInstance) -> str:
    edges = inst.graph.sorted_edges()
    rows = [f"{inst.graph.n} {len(edges)} {inst.k}"]
    rows.extend(f"{u + 1} {v + 1}" for u, v in edges)
    return "\n".join(rows) + "\n"


def parse_otr(text: str) -> Otr:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatSyntaxError("missing header 'otr n'", 0)
    number, content = lines[0]
    parts = content.split()
    if len(parts) != 2 or parts[0] != "otr":
        raise FormatSyntaxError("header must be 'otr <n>'", number)
    n = _parse_natural(parts[1], "n", number)
    expected = math.comb(n, 3)
    body = lines[1:]
    if expected == 0 and not body:
        return Otr(n, ())
    if len(body) != 1:
        raise FormatSyntaxError("expected exactly one order type string", number)
    symbols = body[0][1]
    if len(symbols) != expected:
        raise FormatSyntaxError(f"order type on {n} points needs {expected} symbols, got {len(symbols)}", body[0][0])
    return Otr.from_string(n, symbols)


def emit_otr(key: Otr) -> str:
    return f"otr {key.n}\n{key.to_string()}\n"


InstancePayload = Union[PlcInstance, LpcInstance, VcInstance, Otr]


@dataclass(frozen=True)
class InstanceFile:
    """One parsed file of a known kind."""

    kind: str
    payload: InstancePayload


_PARSERS = {"plc": parse_plc, "lpc": parse_lpc, "graph": parse_graph, "otr": parse_otr}
_EMITTERS = {"plc": emit_plc, "lpc": emit_lpc, "graph": emit_graph, "otr": emit_otr}


def parse_instance(kind: str, text: str) -> InstanceFile:
    if kind not in _PARSERS:
        raise FormatSyntaxError(f"unknown file kind {kind!r}; use one of {', '.join(KINDS)}")
    return InstanceFile(kind, _PARSERS[kind](text))


def emit_instance(file: InstanceFile) -> str:
    if file.kind not in _EMITTERS:
        raise FormatSyntaxError(f"unknown file kind {file.kind!r}; use one of {', '.join(KINDS)}")
    return _EMITTERS[file.kind](file.payload)


# ---------------------------------------------------------------------------
# Solver output
# ---------------------------------------------------------------------------

def format_line(line: Line) -> str:
    """Canonical ``a b c`` with the slope-intercept form as a comment when non-vertical."""
    text = f"{line.a} {line.b} {line.c}"
    if not line.is_vertical:
        text += f"  # {line}"
    return text


def emit_cover(answer: bool, lines: Sequence[Line]) -> str:
    rows = ["yes" if answer else "no"]
    rows.extend(format_line(line) for line in lines)
    return "\n".join(rows) + "\n"


def emit_kernel_report(report: KernelReport) -> str:
    """The reduced instance as a plc file, preceded by the decision and mandatory lines as comments."""
    status = {True: "yes", False: "no", None: "undecided"}[report.decided]
    rows = [f"# decided: {status}"]
    for firing in report.firings:
        rows.append(f"# mandatory: {firing.line.a} {firing.line.b} {firing.line.c}  ({firing.line}; "
                    f"{firing.covered} points at k={firing.k_before})")
    return "\n".join(rows) + "\n" + emit_plc(report.reduced)


# ---------------------------------------------------------------------------
# Catalogs and transcripts
# ---------------------------------------------------------------------------

def emit_catalog(catalog: OrderTypeCatalog) -> str:
    rows = [f"catalog {catalog.n} {catalog.grid} {catalog.mode.value} {len(catalog)}"]
    for entry in catalog.entries:
        coordinates = " ".join(f"{format_rational(p.x)},{format_rational(p.y)}" for p in entry.representative)
        rows.append(f"{entry.otr.to_string()}|{entry.min_cover}|{coordinates}")
    return "\n".join(rows) + "\n"


def parse_catalog(text: str) -> OrderTypeCatalog:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatSyntaxError("missing header 'catalog n g mode count'", 0)
    number, content = lines[0]
    parts = content.split()
    if len(parts) != 5 or parts[0] != "catalog":
        raise FormatSyntaxError("header must be 'catalog <n> <g> <mode> <count>'", number)
    n = _parse_natural(parts[1], "n", number)
    grid = _parse_natural(parts[2], "g", number)
    try:
        mode = CatalogMode(parts[3])
    except ValueError as exc:
        raise FormatSyntaxError(f"unknown catalog mode {parts[3]!r}", number) from exc
    count = _parse_natural(parts[4], "count", number)

    entries = []
    for line_number, content in _body(lines, count, "entries"):
        fields = content.split("|")
        if len(fields) != 3:
            raise FormatSyntaxError("catalog entry must be '<otr>|<min_cover>|<x,y ...>'", line_number)
        symbols, cover, coordinates = fields
        representative = []
        for pair in coordinates.split():
            xy = pair.split(",")
            if len(xy) != 2:
                raise FormatSyntaxError(f"coordinate pair must be 'x,y', got {pair!r}", line_number)
            representative.append(Point(parse_rational(xy[0], line_number), parse_rational(xy[1], line_number)))
        if len(representative) != n:
            raise FormatSyntaxError(f"representative needs {n} points, got {len(representative)}", line_number)
        if len(symbols) != math.comb(n, 3):
            raise FormatSyntaxError(f"order type on {n} points needs {math.comb(n, 3)} symbols", line_number)
        entries.append(CatalogEntry(Otr.from_string(n, symbols), tuple(representative),
                                    _parse_natural(cover.strip(), "min_cover", line_number)))
    if any(a.otr >= b.otr for a, b in zip(entries, entries[1:])):
        raise FormatSyntaxError("catalog entries must be strictly increasing", lines[0][0])
    return OrderTypeCatalog(n, grid, tuple(entries), mode)


def render_transcript(transcript: ProtocolTranscript) -> str:
    """One line per message, then the cost footer."""
    rows = [
        f"# protocol n={transcript.n} k={transcript.k} grid={transcript.grid} "
        f"mode={transcript.mode.value} catalog={transcript.catalog_size}",
        f"# {GRID_NOTE}",
    ]
    if transcript.kernel_decided is not None:
        rows.append("# kernel decided the instance before any communication")
    for message in transcript.messages:
        rows.append(f"{message.direction.value} {message.length} {message.label} [{message.bits}]")
    if transcript.alice_otr is not None:
        rows.append(f"alice_otr {transcript.alice_otr.to_string() or '.'}")
    if transcript.located is not None:
        rows.append(f"located {transcript.located.to_string() or '.'}")
    rows.append(f"alice_cost_bits {transcript.alice_cost_bits}")
    rows.append(f"rounds {transcript.rounds}")
    rows.append(f"answer {'yes' if transcript.answer else 'no'}")
    return "\n".join(rows) + "\n"
