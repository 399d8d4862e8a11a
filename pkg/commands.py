"""
Command implementations shared by the CLI and the MCP server.

Each command takes parsed values and returns the deterministic text it
prints together with its exit status: 0 for success or "yes", 1 for "no".
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from config import TABLE_MAX_ROWS
from duality import LpcInstance, dualize_lpc
from formats import (
    InstanceFile,
    emit_catalog,
    emit_cover,
    emit_instance,
    emit_kernel_report,
    emit_otr,
    emit_plc,
    parse_catalog,
    render_transcript,
)
from generators import GeneratorSpec, generate
from order_types import CatalogMode, canonical_otr, enumerate_grid_order_types, equivalent, otr
from plc import PlcInstance, kernelize, set_cover_encoding, solve
from protocol import ProtocolConfig, run_protocol
from reports import candidate_lines_frame, catalog_frame, dataframe_to_text, kernel_firings_frame, transcript_frame
from vc_reduction import VcInstance, build_lpc_reduction

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


@dataclass(frozen=True)
class CommandResult:
    text: str
    status: int = EXIT_OK


def solve_command(inst: PlcInstance, k: Optional[int] = None) -> CommandResult:
    if k is not None:
        inst = PlcInstance(inst.points, k)
    cover = solve(inst)
    if cover is None:
        return CommandResult(emit_cover(False, []), EXIT_NO)
    return CommandResult(emit_cover(True, sorted(set(cover))))


def kernelize_command(
    inst: PlcInstance,
    set_cover: bool = False,
    table: bool = False,
    max_rows: int = TABLE_MAX_ROWS,
) -> CommandResult:
    report = kernelize(inst)
    if table:
        title = f"MANDATORY LINES n={inst.n} k={inst.k} (kernel: {report.reduced.n} points, k={report.reduced.k})"
        status = {True: "yes", False: "no", None: "undecided"}[report.decided]
        text = dataframe_to_text(kernel_firings_frame(report), title, max_rows).lstrip("\n") + f"decided: {status}\n"
    else:
        text = emit_kernel_report(report)
    if set_cover:
        encoding = set_cover_encoding(report)
        text = (
            f"# set cover: {len(encoding.sets)} sets over {encoding.universe_size} points, "
            f"k={encoding.k}, {encoding.bits} bits\n" + text
        )
    return CommandResult(text)


def candidate_lines_command(inst: PlcInstance, max_rows: int = TABLE_MAX_ROWS) -> CommandResult:
    title = f"CANDIDATE LINES ({inst.n} points)"
    return CommandResult(dataframe_to_text(candidate_lines_frame(inst.points), title, max_rows).lstrip("\n"))


def dualize_command(inst: LpcInstance) -> CommandResult:
    return CommandResult(emit_plc(dualize_lpc(inst)))


def reduce_vc_command(inst: VcInstance, seed: int, target: str = "plc") -> CommandResult:
    reduction = build_lpc_reduction(inst, seed)
    header = [
        f"# vertex cover reduction: n={inst.graph.n} m={len(inst.graph.edges)} k={inst.k} seed={seed}",
        f"# doubled graph: {reduction.doubled.n} vertices, {len(reduction.doubled.edges)} edges",
    ]
    payload = reduction.instance if target == "lpc" else dualize_lpc(reduction.instance)
    body = emit_instance(InstanceFile(target, payload))
    logger.info(f"Reduced a {inst.graph.n}-vertex graph to {reduction.instance.m} lines with k={reduction.instance.k}")
    return CommandResult("\n".join(header) + "\n" + body)


def ordertype_command(inst: PlcInstance) -> CommandResult:
    return CommandResult(emit_otr(otr(inst.points)))


def canon_command(inst: PlcInstance) -> CommandResult:
    return CommandResult(emit_otr(canonical_otr(inst.points)))


def equiv_command(first: PlcInstance, second: PlcInstance) -> CommandResult:
    same = equivalent(first.points, second.points)
    return CommandResult("true\n" if same else "false\n", EXIT_OK if same else EXIT_NO)


def enumerate_command(
    n: int,
    grid: int,
    mode: CatalogMode = CatalogMode.CANONICAL,
    table: bool = False,
    max_rows: int = TABLE_MAX_ROWS,
) -> CommandResult:
    catalog = enumerate_grid_order_types(n, grid, mode)
    if table:
        title = f"ORDER TYPES n={n} grid={grid} mode={mode.value} ({len(catalog)} entries)"
        return CommandResult(dataframe_to_text(catalog_frame(catalog), title, max_rows).lstrip("\n"))
    return CommandResult(emit_catalog(catalog))


def protocol_command(
    inst: PlcInstance,
    grid: int,
    mode: CatalogMode = CatalogMode.CANONICAL,
    kernelize_first: bool = False,
    catalog_text: Optional[str] = None,
    table: bool = False,
    max_rows: int = TABLE_MAX_ROWS,
) -> CommandResult:
    catalog = parse_catalog(catalog_text) if catalog_text is not None else None
    transcript = run_protocol(inst, ProtocolConfig(grid=grid, mode=mode, kernelize_first=kernelize_first), catalog)
    status = EXIT_OK if transcript.answer else EXIT_NO
    if table:
        title = f"TRANSCRIPT n={transcript.n} k={transcript.k} grid={grid} (Alice sent {transcript.alice_cost_bits} bits)"
        text = dataframe_to_text(transcript_frame(transcript), title, max_rows).lstrip("\n")
        return CommandResult(text + f"answer: {'yes' if transcript.answer else 'no'}\n", status)
    return CommandResult(render_transcript(transcript), status)


def generate_command(spec: GeneratorSpec) -> CommandResult:
    return CommandResult(emit_plc(generate(spec)))
