#!/usr/bin/env python3
"""
Point Line Cover MCP Server

An MCP server exposing the toolkit's solvers, kernelization, reductions,
order type machinery and protocol simulation as read-only tools. Every tool
takes instance text in the same formats the CLI reads.
"""

import logging
import os
from typing import Iterable, Mapping, Optional

from fastmcp import FastMCP
from fastmcp.exceptions import ToolError

import commands
from formats import parse_graph, parse_lpc, parse_plc
from generators import GeneratorSpec
from order_types import CatalogMode
from plc import PlcInstance
from reports import DEFAULT_MAX_TOKENS, coerce_max_rows, truncate_output

# Configure logging
def _log_level(environ: Mapping[str, str]) -> int:
    name = environ.get("PLC_TOOLKIT_LOG_LEVEL", "WARNING").upper()
    level = getattr(logging, name, None)
    return level if isinstance(level, int) else logging.WARNING


logging.basicConfig(level=_log_level(os.environ))
logger = logging.getLogger(__name__)

# Initialize the FastMCP server
mcp = FastMCP(
    name="Point Line Cover Toolkit",
    version="0.1.0",
    instructions=(
        "Exact Point Line Cover toolkit. Instances are plain text: plc files are an 'n k' header "
        "followed by 'x y' rows, lpc files 'm k' then 'slope intercept' rows, graph files 'n m k' "
        "then 1-indexed 'u v' rows. Coordinates are integers or p/q rationals."
    ),
)

# Configuration
try:
    MAX_TOKENS = int(os.environ.get("PLC_TOOLKIT_MAX_TOKENS", DEFAULT_MAX_TOKENS))
except ValueError:
    MAX_TOKENS = DEFAULT_MAX_TOKENS


def _require_text(text: str, what: str = "Instance text") -> str:
    if not text or not text.strip():
        raise ToolError(f"{what} must be a non-empty string.")
    return text


def _plc(text: str, what: str = "Instance text") -> PlcInstance:
    return parse_plc(_require_text(text, what))


def _mode(ordered: bool) -> CatalogMode:
    return CatalogMode.ORDERED if ordered else CatalogMode.CANONICAL


def _format_response_parts(response_parts: Iterable[str], max_tokens: Optional[int] = None) -> str:
    """Join response parts and apply shared truncation."""
    return truncate_output("\n".join(response_parts), max_tokens=max_tokens or MAX_TOKENS)


def _answer(status: int) -> str:
    return "Answer: yes" if status == commands.EXIT_OK else "Answer: no"


@mcp.tool(annotations={"readOnlyHint": True})
def solve_instance(instance_text: str, k: Optional[int] = None) -> str:
    """Decide whether the points of a plc instance can be covered by at most k lines and return a witness cover (a b c coefficients plus slope-intercept form)."""
    inst = _plc(instance_text)
    result = commands.solve_command(inst, k)
    response_parts = [
        f"Point Line Cover: n={inst.n}, k={k if k is not None else inst.k}",
        "=" * 80,
        result.text,
    ]
    return _format_response_parts(response_parts)


@mcp.tool(annotations={"readOnlyHint": True})
def kernelize_instance(
    instance_text: str,
    show_set_cover: bool = False,
    show_table: bool = False,
    max_rows: int = 100,
) -> str:
    """Apply the mandatory-line and size reduction rules; returns the mandatory lines, the decision if a rule settled it, and the reduced instance as a plc file. Set show_table to get a table of the mandatory lines, with the parameter before and after each, instead of the kernel file."""
    inst = _plc(instance_text)
    result = commands.kernelize_command(
        inst,
        set_cover=show_set_cover,
        table=show_table,
        max_rows=coerce_max_rows(max_rows),
    )
    response_parts = [
        f"Kernelization: n={inst.n}, k={inst.k}",
        "=" * 80,
        result.text,
    ]
    return _format_response_parts(response_parts)


@mcp.tool(annotations={"readOnlyHint": True})
def dualize_lines(lpc_text: str) -> str:
    """Map a Line Point Cover instance (slope intercept rows) to the equivalent Point Line Cover instance."""
    inst = parse_lpc(_require_text(lpc_text, "Line instance text"))
    return _format_response_parts([commands.dualize_command(inst).text])


@mcp.tool(annotations={"readOnlyHint": True})
def reduce_vertex_cover(graph_text: str, seed: int, target: str = "plc") -> str:
    """Reduce a Vertex Cover graph instance (n m k header, 1-indexed edges) to an equivalent lpc or plc instance with parameter 2k."""
    if target not in ("lpc", "plc"):
        raise ToolError(f"target must be 'lpc' or 'plc', got {target!r}")
    inst = parse_graph(_require_text(graph_text, "Graph text"))
    return _format_response_parts([commands.reduce_vc_command(inst, seed, target).text])


@mcp.tool(annotations={"readOnlyHint": True})
def order_type(instance_text: str) -> str:
    """Return the order type of the points in the given order as a string over -, 0, +."""
    return _format_response_parts([commands.ordertype_command(_plc(instance_text)).text])


@mcp.tool(annotations={"readOnlyHint": True})
def canonical_order_type(instance_text: str) -> str:
    """Return the lexicographically smallest order type over all orderings of the points (at most 8 points)."""
    return _format_response_parts([commands.canon_command(_plc(instance_text)).text])


@mcp.tool(annotations={"readOnlyHint": True})
def check_equivalence(first_text: str, second_text: str) -> str:
    """Test whether two point sets are combinatorially equivalent (same canonical order type)."""
    first = _plc(first_text, "First instance text")
    second = _plc(second_text, "Second instance text")
    result = commands.equiv_command(first, second)
    return f"Equivalent: {result.text.strip()}"


@mcp.tool(annotations={"readOnlyHint": True})
def enumerate_order_types(n: int, grid: int, ordered: bool = False, max_rows: int = 100) -> str:
    """List the order types of n-point subsets of the grid x grid integer grid with their minimum line covers."""
    result = commands.enumerate_command(n, grid, _mode(ordered), table=True, max_rows=coerce_max_rows(max_rows))
    return _format_response_parts([result.text])


@mcp.tool(annotations={"readOnlyHint": True})
def run_oracle_protocol(
    instance_text: str,
    grid: int,
    ordered: bool = False,
    kernelize_first: bool = False,
    show_table: bool = False,
) -> str:
    """Simulate the order type binary search protocol on an on-grid plc instance and return the transcript with Alice's bit cost."""
    inst = _plc(instance_text)
    result = commands.protocol_command(
        inst,
        grid,
        mode=_mode(ordered),
        kernelize_first=kernelize_first,
        table=show_table,
    )
    response_parts = [
        f"Oracle protocol: n={inst.n}, k={inst.k}, grid={grid}",
        "=" * 80,
        result.text,
        _answer(result.status),
    ]
    return _format_response_parts(response_parts)


@mcp.tool(annotations={"readOnlyHint": True})
def generate_instance(
    kind: str,
    n: int = 0,
    k: int = 0,
    g: int = 2,
    seed: int = 0,
    rows: Optional[int] = None,
    cols: Optional[int] = None,
) -> str:
    """Generate a seeded plc instance: 'planted' (n points on k random lines), 'uniform' (n distinct grid points) or 'grid' (full rows x cols lattice)."""
    if kind not in ("planted", "uniform", "grid"):
        raise ToolError(f"kind must be 'planted', 'uniform' or 'grid', got {kind!r}")
    spec = GeneratorSpec(kind=kind, n=n, k=k, g=g, seed=seed, rows=rows, cols=cols)
    return _format_response_parts([commands.generate_command(spec).text])


@mcp.tool(annotations={"readOnlyHint": True})
def candidate_lines_table(instance_text: str, max_rows: int = 100) -> str:
    """Tabulate every line through two or more input points with the indices it covers."""
    inst = _plc(instance_text)
    return _format_response_parts([commands.candidate_lines_command(inst, coerce_max_rows(max_rows)).text])


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def run():
    """Entry point for console script."""
    mcp.run()


if __name__ == "__main__":
    run()
