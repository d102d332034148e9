"""Plain-text rendering of boards, class grids and stage transcripts."""

from __future__ import annotations

from .areas import StageTrace
from .board import BoardGrid
from .labeling import ClassGrid

FOUND_LINE = "A VALID CHAIN WAS FOUND"
NOT_FOUND_LINE = "A VALID CHAIN WAS ***NOT*** FOUND"

STAGE_HEADERS = (
    ("after_cca", "Classes After CCA:"),
    ("after_perimeter", "Classes After CCA and Perimeter Filtering:"),
    ("after_size_filter", "Classes After CCA And Filtering:"),
    ("after_compaction", "Classes After CCA And Filtering -- Corrected:"),
)


def render_board(board: BoardGrid) -> list:
    width = board.config.width
    cells = board.cells
    return ["\t".join(cell or "-" for cell in cells[row:row + width])
            for row in range(0, len(cells), width)]


def render_classes(grid: ClassGrid) -> list:
    width = grid.config.width
    labels = grid.labels
    return ["\t".join(str(label) if label else "-" for label in labels[row:row + width])
            for row in range(0, len(labels), width)]


def verdict_line(found: bool) -> str:
    return FOUND_LINE if found else NOT_FOUND_LINE


def render_transcript(trace: StageTrace) -> str:
    lines = ["Board Position From FEN String:"]
    lines += render_board(trace.board_snapshot)
    for attr, header in STAGE_HEADERS:
        lines += ["", header]
        lines += render_classes(getattr(trace, attr))
    lines += ["", verdict_line(trace.verdict is not None and trace.verdict.found)]
    return "\n".join(lines) + "\n"


def machine_line(verdict, config) -> str:
    if verdict.found:
        first, second = verdict.witness
        w1 = ",".join(first.notation(config))
        w2 = ",".join(second.notation(config))
        ea = str(verdict.ea_class)
    else:
        w1 = w2 = ea = "-"
    state = "found" if verdict.found else "not-found"
    return f"verdict={state} ea_class={ea} witness1={w1} witness2={w2}"
