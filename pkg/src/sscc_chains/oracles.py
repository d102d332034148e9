"""Slow, independent checkers and a reproducible random-position generator.

Nothing here imports the production labeling, filtering or path search;
the only shared code is the board model.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .board import (BoardGrid, DetectorConfig, DEFAULT_CONFIG, EMPTY,
                    PIECE_LETTERS, index_to_square)
from .exceptions import EnumerationOverflow, StartSquareEmpty

DENSITIES = (0.2, 0.35, 0.5, 0.65, 0.8)


def _king(index, width, height):
    row, col = divmod(index, width)
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            if dr or dc:
                r, c = row + dr, col + dc
                if 0 <= r < height and 0 <= c < width:
                    yield r * width + c


def _rook_step(index, width, height):
    row, col = divmod(index, width)
    for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
        r, c = row + dr, col + dc
        if 0 <= r < height and 0 <= c < width:
            yield r * width + c


@dataclass(frozen=True)
class EnclosedGroup:
    class_id: int
    members: frozenset


def oracle_ea_floodfill(board: BoardGrid, min_size: int) -> list:
    """Enclosed areas by definition: breadth-first fills from the rim, then grouping."""
    w, h = board.config.width, board.config.height
    empty = {i for i, cell in enumerate(board.cells) if cell == EMPTY}

    def on_rim(i):
        r, c = divmod(i, w)
        return r in (0, h - 1) or c in (0, w - 1)

    invalid = {i for i in empty if on_rim(i)}
    queue = deque(invalid)
    while queue:
        i = queue.popleft()
        for j in _rook_step(i, w, h):
            if j in empty and j not in invalid:
                invalid.add(j)
                queue.append(j)

    survivors = empty - invalid
    groups = []
    seen = set()
    for i in sorted(survivors):
        if i in seen:
            continue
        group = {i}
        seen.add(i)
        queue = deque([i])
        while queue:
            k = queue.popleft()
            for j in _king(k, w, h):
                if j in survivors and j not in seen:
                    seen.add(j)
                    group.add(j)
                    queue.append(j)
        if len(group) >= min_size:
            groups.append(group)
    groups.sort(key=min)
    return [EnclosedGroup(n, frozenset(g)) for n, g in enumerate(groups, 1)]


def _class_members(board: BoardGrid, grid) -> dict:
    classes = {}
    for i, label in enumerate(grid.labels):
        if label > 0:
            classes.setdefault(label, set()).add(i)
    return classes


def _terminals(board, members, start):
    """Occupied squares (other than start) touching any member."""
    w, h = board.config.width, board.config.height
    out = set()
    for m in members:
        for j in _king(m, w, h):
            if board.cells[j] != EMPTY and j != start:
                out.add(j)
    return out


def build_flow_network(board: BoardGrid, start: int, members) -> nx.DiGraph:
    """Unit vertex capacities by node splitting; source is the unsplit start."""
    w, h = board.config.width, board.config.height
    occupied = [i for i, cell in enumerate(board.cells) if cell != EMPTY]
    g = nx.DiGraph()
    g.add_node("source")
    g.add_node("sink")
    for i in occupied:
        if i != start:
            g.add_edge(("in", i), ("out", i), capacity=1)
    for i in occupied:
        for j in _king(i, w, h):
            if board.cells[j] == EMPTY or j == start:
                continue
            tail = "source" if i == start else ("out", i)
            g.add_edge(tail, ("in", j), capacity=1)
    for t in _terminals(board, members, start):
        g.add_edge(("out", t), "sink", capacity=1)
    return g


def max_disjoint_paths(board: BoardGrid, start: int, members) -> int:
    g = build_flow_network(board, start, members)
    return nx.maximum_flow_value(g, "source", "sink")


def oracle_disjoint_paths(board: BoardGrid, grid, start: int) -> bool:
    """True iff some class admits two start-disjoint occupied paths (max-flow check)."""
    if board.cells[start] == EMPTY:
        raise StartSquareEmpty(f"{index_to_square(start, board.config)} is empty")
    for members in _class_members(board, grid).values():
        if max_disjoint_paths(board, start, members) >= 2:
            return True
    return False


def enumerate_paths(board: BoardGrid, grid, start: int, path_cap: int = 100_000):
    """All simple occupied paths from start's neighbors, cut at each class's first contact.

    Returns a list of ``(class_id, path_tuple)`` records. ``path_cap`` bounds
    the number of path prefixes explored, recorded or not.
    """
    if board.cells[start] == EMPTY:
        raise StartSquareEmpty(f"{index_to_square(start, board.config)} is empty")
    w, h = board.config.width, board.config.height
    labels = grid.labels
    touching = {}
    for i, cell in enumerate(board.cells):
        if cell != EMPTY:
            touching[i] = {labels[j] for j in _king(i, w, h) if labels[j] > 0}

    records = []
    explored = 0

    def walk(path, on_path, reached):
        # recursion depth is bounded by the occupied-square count
        nonlocal explored
        explored += 1
        if explored > path_cap:
            raise EnumerationOverflow(f"more than {path_cap} paths explored")
        tip = path[-1]
        fresh = touching[tip] - reached
        for c in sorted(fresh):
            records.append((c, tuple(path)))
        reached = reached | fresh
        for j in _king(tip, w, h):
            if j != start and j in touching and j not in on_path:
                path.append(j)
                on_path.add(j)
                walk(path, on_path, reached)
                on_path.discard(j)
                path.pop()

    for first in _king(start, w, h):
        if first in touching:
            walk([first], {first}, frozenset())
    return records


def oracle_enumerate_paths(board: BoardGrid, grid, start: int,
                           path_cap: int = 100_000) -> bool:
    """Brute force: any two disjoint enumerated paths to the same class."""
    by_class = {}
    for c, path in enumerate_paths(board, grid, start, path_cap):
        by_class.setdefault(c, []).append(frozenset(path))
    for paths in by_class.values():
        for a, b in combinations(paths, 2):
            if not a & b:
                return True
    return False


def _strictly_inside(polygon, x, y):
    """Even-odd test; points on the boundary count as outside."""
    inside = False
    n = len(polygon)
    for k in range(n):
        x1, y1 = polygon[k]
        x2, y2 = polygon[(k + 1) % n]
        # boundary check: collinear and within the segment's box
        cross = (x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)
        if cross == 0 and min(x1, x2) <= x <= max(x1, x2) and min(y1, y2) <= y <= max(y1, y2):
            return False
        if (y1 > y) != (y2 > y):
            xi = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < xi:
                inside = not inside
    return inside


def oracle_enclosing_cycle(board: BoardGrid, start: int, area,
                           max_occupied: int = 16, cycle_cap: int = 1_000_000) -> bool:
    """Look for a simple king-move cycle of pieces through start enclosing ``area``.

    A probe for disagreements with the two-path criterion, not a gate.
    """
    if board.cells[start] == EMPTY:
        raise StartSquareEmpty(f"{index_to_square(start, board.config)} is empty")
    w, h = board.config.width, board.config.height
    occupied = [i for i, cell in enumerate(board.cells) if cell != EMPTY]
    if len(occupied) > max_occupied:
        raise EnumerationOverflow(
            f"{len(occupied)} occupied squares exceeds the probe limit {max_occupied}")
    members = area.members if hasattr(area, "members") else frozenset(area)
    centers = [(i % w, i // w) for i in members]
    occ = set(occupied)
    count = 0

    stack = [(start, [start])]
    while stack:
        tip, path = stack.pop()
        for j in _king(tip, w, h):
            if j == start and len(path) >= 3:
                count += 1
                if count > cycle_cap:
                    raise EnumerationOverflow(f"more than {cycle_cap} cycles")
                polygon = [(i % w, i // w) for i in path]
                if all(_strictly_inside(polygon, x, y) for x, y in centers):
                    return True
            elif j in occ and j not in path:
                stack.append((j, path + [j]))
    return False


@dataclass(frozen=True)
class PositionSample:
    seed: int
    density: float
    board: BoardGrid


def random_position(seed: int, density: float,
                    config: DetectorConfig = DEFAULT_CONFIG) -> PositionSample:
    """Board whose squares are independently occupied with probability ``density``.

    Uses ``random.Random(seed)`` (Mersenne Twister) and only its ``random()``
    stream, which Python keeps reproducible across versions. Draws repeat
    until at least one square is occupied.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    rng = random.Random(seed)
    while True:
        cells = []
        for _ in range(config.size):
            occupied = rng.random() < density
            piece = PIECE_LETTERS[int(rng.random() * len(PIECE_LETTERS))]
            cells.append(piece if occupied else EMPTY)
        if any(cells):
            break
        if density == 0.0:
            # no draw can ever succeed; place one piece deterministically
            cells[int(rng.random() * config.size)] = "P"
            break
    return PositionSample(seed, density, BoardGrid(config, tuple(cells)))


def piece_distances(board: BoardGrid, members) -> dict:
    """Breadth-first distance, over king moves between pieces, from the pieces touching ``members``."""
    w, h = board.config.width, board.config.height
    occupied = {i for i, cell in enumerate(board.cells) if cell != EMPTY}
    frontier = deque()
    dist = {}
    for m in members:
        for j in _king(m, w, h):
            if j in occupied and j not in dist:
                dist[j] = 0
                frontier.append(j)
    while frontier:
        i = frontier.popleft()
        for j in _king(i, w, h):
            if j in occupied and j not in dist:
                dist[j] = dist[i] + 1
                frontier.append(j)
    return dist


def dense_chain_position(seed: int, density: float = 0.8,
                         config: DetectorConfig = DEFAULT_CONFIG, max_tries: int = 10_000):
    """Crowded board with exactly one enclosed area and the start as far from it as possible.

    Seeds ``seed, seed + 1, ...`` are tried until a board qualifies. Returns
    ``(sample, start_index)``.
    """
    for offset in range(max_tries):
        sample = random_position(seed + offset, density, config)
        groups = oracle_ea_floodfill(sample.board, config.min_ea_size)
        if len(groups) != 1:
            continue
        dist = piece_distances(sample.board, groups[0].members)
        if not dist:
            continue
        far = max(dist.values())
        start = min(i for i, d in dist.items() if d == far)
        return sample, start
    raise RuntimeError(f"no qualifying board in {max_tries} seeds from {seed}")
