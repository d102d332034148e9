"""Turning raw empty-square components into enclosed areas.

An enclosed area is a labeled group that survives two filters: perimeter
filtering drops every rim square and every empty square joined to the rim
by horizontal/vertical steps through empties, and size filtering drops
groups smaller than ``min_ea_size``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .board import BoardGrid, DetectorConfig, is_rim, neighbor_indices, orthogonal_neighbors
from .exceptions import InvalidConfig
from .labeling import ClassGrid, compact_labels, label_empty_components


@dataclass(frozen=True)
class EnclosedArea:
    class_id: int
    members: frozenset

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class FilterReport:
    removed_by_perimeter: frozenset
    removed_classes_by_size: frozenset
    surviving_areas: tuple


@dataclass(frozen=True)
class StageTrace:
    """Snapshots of every pipeline stage, in execution order."""

    board_snapshot: BoardGrid
    after_cca: ClassGrid
    after_perimeter: ClassGrid
    after_size_filter: ClassGrid
    after_compaction: ClassGrid
    verdict: Optional[object] = field(default=None)


def perimeter_filter(grid: ClassGrid, board: BoardGrid):
    """Zero rim squares and every empty square 4-connected to a rim empty.

    Returns the filtered grid and the set of indices whose label was zeroed.
    A square touching a rim empty only diagonally is kept.
    """
    config = grid.config
    ortho = orthogonal_neighbors(config)
    width = config.width
    labels = list(grid.labels)
    cells = board.cells
    cleared = set()

    def clear(index):
        if index not in cleared:
            cleared.add(index)
            return True
        return False

    stack = []
    for index in range(config.size):
        if is_rim(index, config) and not cells[index] and clear(index):
            stack.append(index)

    # Walk rays out of each cleared square so long corridors are consumed
    # in one sweep rather than one square per stack entry.
    while stack:
        origin = stack.pop()
        for nxt in ortho[origin]:
            step = nxt - origin
            index = nxt
            while not cells[index] and clear(index):
                stack.append(index)
                if step in (1, -1) and (index % width) in (0, width - 1):
                    break
                ahead = index + step
                if not 0 <= ahead < config.size:
                    break
                index = ahead

    removed = set()
    for index in sorted(cleared):
        if labels[index]:
            labels[index] = 0
            removed.add(index)
    if removed:
        _split_fragments(labels, config)
    return ClassGrid(config, tuple(labels)), frozenset(removed)


def _split_fragments(labels: list, config: DetectorConfig):
    """Give each no-longer-connected piece of a class its own label, in place.

    Clearing squares can cut a class in two. The first piece in scan order
    keeps the old id and later pieces get fresh ids above the current
    maximum, so untouched classes keep the numbers the labeling gave them.
    """
    near = neighbor_indices(config)
    next_id = max(labels, default=0) + 1
    seen_ids = set()
    done = set()
    for index, label in enumerate(labels):
        if not label or index in done:
            continue
        piece = [index]
        done.add(index)
        for square in piece:
            for n in near[square]:
                if labels[n] == label and n not in done:
                    done.add(n)
                    piece.append(n)
        if label in seen_ids:
            for square in piece:
                labels[square] = next_id
            next_id += 1
        seen_ids.add(label)


def eliminate_small_classes(grid: ClassGrid, min_size: int):
    """Zero every class with fewer than ``min_size`` members.

    Returns the filtered grid and the ids of the removed classes.
    """
    area = grid.config.size
    if min_size > area // 2:
        raise InvalidConfig(f"min_size {min_size} exceeds half the board ({area // 2})")
    if min_size <= 1:
        return grid, frozenset()
    counts = {}
    for label in grid.labels:
        if label:
            counts[label] = counts.get(label, 0) + 1
    small = frozenset(label for label, n in counts.items() if n < min_size)
    if not small:
        return grid, small
    labels = tuple(0 if label in small else label for label in grid.labels)
    return ClassGrid(grid.config, labels), small


def areas_from_grid(grid: ClassGrid) -> list:
    return [EnclosedArea(class_id, frozenset(members))
            for class_id, members in sorted(grid.classes().items())]


def detect_enclosed_areas(board: BoardGrid, config: DetectorConfig = None):
    """Run labeling, perimeter filter, size filter and relabeling.

    Returns ``(areas, report, trace)``; an empty area list is a normal result.
    """
    config = config or board.config
    after_cca = label_empty_components(board)
    after_perimeter, removed = perimeter_filter(after_cca, board)
    after_size, small = eliminate_small_classes(after_perimeter, config.min_ea_size)
    final = compact_labels(after_size)
    areas = areas_from_grid(final)
    report = FilterReport(removed, small, tuple(areas))
    trace = StageTrace(board, after_cca, after_perimeter, after_size, final)
    return areas, report, trace
