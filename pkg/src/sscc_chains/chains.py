"""Chain verdict: two square-disjoint piece paths from the last-moved square to one area.

The search is an iterative depth-first walk over occupied squares. Directions
are tried in ``config.neighbor_order`` at every expansion. The start square's
eight neighbors (the first ring) are reserved, so a path may use a first-ring
square only as its first element. A path is recorded once per enclosed-area
class the moment its newest square touches that class, and each new record is
checked for disjointness against the earlier records of the same class.

Unpruned, that walk enumerates every simple path and is exponential on
crowded boards. Each candidate step is therefore screened by
:func:`_pair_still_possible`, an articulation-point test deciding whether the
extended prefix can still be one half of a disjoint pair. Steps that fail
could never appear in a successful pair, so skipping them changes no verdict.
Once a recorded path is known to have a partner, the search switches to
that partner (``_find_partner``) rather than enumerating further paths from
the same first square.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional

from .areas import StageTrace, detect_enclosed_areas
from .board import BoardGrid, DetectorConfig, index_to_square, king_neighbors
from .exceptions import StartSquareEmpty
from .labeling import ClassGrid


@dataclass(frozen=True)
class PathWitness:
    """Occupied squares leading away from the start (start itself excluded)."""

    squares: tuple
    target_class: int

    def notation(self, config: DetectorConfig) -> list:
        return [index_to_square(i, config) for i in self.squares]


@dataclass(frozen=True)
class ChainVerdict:
    found: bool
    witness: Optional[tuple] = None
    ea_class: Optional[int] = None

    def __post_init__(self):
        if self.found != (self.witness is not None):
            raise ValueError("a found verdict needs a witness pair and vice versa")


NOT_FOUND = ChainVerdict(False)


@dataclass
class SearchState:
    reserved_first_ring: frozenset
    current_path: list = field(default_factory=list)
    visited_on_path: set = field(default_factory=set)
    recorded_paths: list = field(default_factory=list)
    paths_by_class: dict = field(default_factory=dict)
    branch_resume_stack: list = field(default_factory=list)

    def push(self, square: int):
        self.current_path.append(square)
        self.visited_on_path.add(square)

    def pop(self) -> int:
        square = self.current_path.pop()
        self.visited_on_path.discard(square)
        return square

    def record(self, class_id: int) -> Optional[tuple]:
        """Store the current path for ``class_id``; return a disjoint earlier pair if any."""
        path = PathWitness(tuple(self.current_path), class_id)
        earlier = self.paths_by_class.setdefault(class_id, [])
        partner = None
        for ordinal in earlier:
            other = self.recorded_paths[ordinal]
            if self.visited_on_path.isdisjoint(other.squares):
                partner = other
                break
        earlier.append(len(self.recorded_paths))
        self.recorded_paths.append(path)
        return None if partner is None else (partner, path)


def adjacent_classes(grid: ClassGrid, index: int) -> set:
    """Nonzero labels among the king-move neighbors of ``index``."""
    labels = grid.labels
    return {labels[n] for _, n in king_neighbors(grid.config)[index] if labels[n]}


class _Board:
    """Per-query lookup tables shared by every search phase."""

    def __init__(self, board: BoardGrid, grid: ClassGrid, start: int, config: DetectorConfig):
        self.size = config.size
        self.table = king_neighbors(config)
        self.adjacent = [tuple(n for _, n in row) for row in self.table]
        self.start = start
        self.occupied = [bool(c) for c in board.cells]
        labels = grid.labels
        self.open_square = [self.occupied[i] and not labels[i] for i in range(self.size)]
        self.touches = [
            frozenset(labels[n] for n in self.adjacent[i] if labels[n])
            if self.occupied[i] else frozenset()
            for i in range(self.size)
        ]
        self.ring = frozenset(self.adjacent[start]) | {start}
        self.ring_pieces = [n for _, n in self.table[start] if self.open_square[n]]
        self.classes = sorted({c for c in labels if c})


def _pair_still_possible(b: _Board, first: int, tip: int, used: set, classes) -> bool:
    """Can the prefix ending at ``tip`` still pair up, for one of ``classes``?

    Builds the graph of free squares (occupied, off the first ring, unused),
    attaches ``tip`` and a hub ``g`` standing for every other first-ring
    piece, joins both to a root, and joins each square touching the class to
    a sink. The prefix can be completed into a disjoint pair exactly when no
    single vertex separates root from sink.
    """
    others = [f for f in b.ring_pieces if f != first and f not in used]
    if not others:
        return False
    n = b.size
    hub, root, sink = n, n + 1, n + 2
    adjacent = b.adjacent
    ring = b.ring
    open_square = b.open_square

    def free(i):
        return open_square[i] and i not in ring and i not in used

    hub_links = set()
    for f in others:
        hub_links.update(i for i in adjacent[f] if free(i))

    for c in classes:
        hub_hits = any(c in b.touches[f] for f in others)

        def neighbors(x):
            if x == root:
                return (tip, hub)
            if x == sink:
                out = [i for i in range(n) if c in b.touches[i] and (i == tip or free(i))]
                if hub_hits:
                    out.append(hub)
                return out
            if x == hub:
                out = [root, *hub_links]
                if hub_hits:
                    out.append(sink)
                return out
            out = [i for i in adjacent[x] if free(i)]
            if x == tip:
                out.append(root)
            elif x in hub_links:
                out.append(hub)
            if tip in adjacent[x] and x != tip:
                out.append(tip)
            if c in b.touches[x]:
                out.append(sink)
            return out

        if not _has_articulation_between(neighbors, root, sink):
            return True
    return False


def _has_articulation_between(neighbors, root, sink) -> bool:
    """True when ``sink`` is unreachable from ``root`` or a single vertex separates them."""
    disc = {root: 0}
    low = {root: 0}
    parent = {root: None}
    stack = [(root, iter(neighbors(root)))]
    while stack:
        x, it = stack[-1]
        for y in it:
            if y not in disc:
                parent[y] = x
                disc[y] = low[y] = len(disc)
                stack.append((y, iter(neighbors(y))))
                break
            if y != parent[x] and disc[y] < low[x]:
                low[x] = disc[y]
        else:
            stack.pop()
            if stack:
                up = stack[-1][0]
                if low[x] < low[up]:
                    low[up] = low[x]
    if sink not in disc:
        return True
    y = sink
    while parent[y] != root:
        x = parent[y]
        if low[y] >= disc[x]:
            return True
        y = x
    return False


def _reaches(b: _Board, sources, blocked, class_id: int) -> bool:
    """Breadth-first: can any source walk over free pieces to a square touching the class?"""
    seen = set(sources)
    frontier = list(sources)
    while frontier:
        x = frontier.pop()
        if class_id in b.touches[x]:
            return True
        for y in b.adjacent[x]:
            if y not in seen and b.open_square[y] and y not in b.ring and y not in blocked:
                seen.add(y)
                frontier.append(y)
    return False


def _find_partner(b: _Board, state: SearchState, class_id: int, stop=None):
    """Second arm: a path avoiding everything recorded on the first arm.

    Same walk as the first arm, pruned by plain reachability because the
    first arm is now fixed.
    """
    blocked = set(state.current_path)
    saved_path = list(state.current_path)
    for square in saved_path:
        state.visited_on_path.discard(square)
    state.current_path.clear()

    frames = state.branch_resume_stack
    base = len(frames)
    frames.append([b.start, 0])
    result = None
    while len(frames) > base:
        if stop is not None and stop.is_set():
            break
        frame = frames[-1]
        square, ordinal = frame
        row = b.table[square]
        depth = len(frames) - base
        advanced = False
        while ordinal < len(row):
            _, u = row[ordinal]
            ordinal += 1
            if not b.open_square[u] or u in blocked or u in state.visited_on_path:
                continue
            if depth > 1 and u in b.ring:
                continue
            if not _reaches(b, [u], blocked | state.visited_on_path, class_id):
                continue
            frame[1] = ordinal
            state.push(u)
            if class_id in b.touches[u]:
                pair = state.record(class_id)
                if pair is not None:
                    result = pair
                    break
                state.pop()
                continue
            frames.append([u, 0])
            advanced = True
            break
        if result is not None:
            break
        if not advanced:
            frames.pop()
            if len(frames) > base:
                state.pop()
    del frames[base:]
    if result is None:
        for square in list(state.current_path):
            state.visited_on_path.discard(square)
        state.current_path[:] = saved_path
        state.visited_on_path.update(saved_path)
    return result


def _search(b: _Board, state: SearchState, branches, stop=None) -> ChainVerdict:
    """First arm: the pruned depth-first walk from the start square."""
    frames = state.branch_resume_stack
    frames.append([b.start, 0])
    # classes already touched by the prefix, one entry per path square
    touched = [frozenset()]
    while frames:
        if stop is not None and stop.is_set():
            return NOT_FOUND
        frame = frames[-1]
        square, ordinal = frame
        row = b.table[square]
        depth = len(frames)
        advanced = False
        while ordinal < len(row):
            _, u = row[ordinal]
            ordinal += 1
            if not b.open_square[u] or u in state.visited_on_path or u == b.start:
                continue
            if depth == 1 and u not in branches:
                continue
            if depth > 1 and u in b.ring:
                continue
            already = touched[-1]
            open_classes = [c for c in b.classes if c not in already]
            first = state.current_path[0] if state.current_path else u
            used = state.visited_on_path | {u}
            if not open_classes or not _pair_still_possible(b, first, u, used, open_classes):
                continue
            frame[1] = ordinal
            state.push(u)
            for c in sorted(b.touches[u] - already):
                pair = state.record(c)
                if pair is not None:
                    return ChainVerdict(True, pair, c)
            for c in sorted(b.touches[u] - already):
                partner_sources = [f for f in b.ring_pieces if f not in state.visited_on_path]
                if _reaches(b, partner_sources, state.visited_on_path, c):
                    pair = _find_partner(b, state, c, stop)
                    if pair is not None:
                        return ChainVerdict(True, pair, c)
            frames.append([u, 0])
            touched.append(already | b.touches[u])
            advanced = True
            break
        if not advanced:
            frames.pop()
            touched.pop()
            if state.current_path and frames:
                state.pop()
    return NOT_FOUND


def two_disjoint_paths_exist(board: BoardGrid, grid: ClassGrid, start: int,
                             config: DetectorConfig = None) -> ChainVerdict:
    """Decide whether ``start`` has two square-disjoint piece paths to one area.

    Both paths begin on different king-move neighbors of ``start`` and end on
    a square touching the same class of ``grid``. Sequential mode returns the
    same witness for the same input; parallel mode returns the same boolean.
    """
    config = config or board.config
    if not board.cells[start]:
        raise StartSquareEmpty(
            f"last-moved square {index_to_square(start, board.config)} is empty")
    if (config.width, config.height) != (board.config.width, board.config.height):
        raise ValueError("config dimensions differ from the board's")
    b = _Board(board, grid, start, config)
    if len(b.ring_pieces) < 2 or not b.classes:
        return NOT_FOUND
    if config.parallel_branches:
        return _parallel(b)
    state = SearchState(reserved_first_ring=b.ring)
    return _search(b, state, frozenset(b.ring_pieces))


def _parallel(b: _Board) -> ChainVerdict:
    stop = threading.Event()

    def branch(first):
        state = SearchState(reserved_first_ring=b.ring)
        verdict = _search(b, state, frozenset([first]), stop)
        if verdict.found:
            stop.set()
        return verdict

    with ThreadPoolExecutor(max_workers=len(b.ring_pieces)) as pool:
        futures = [pool.submit(branch, f) for f in b.ring_pieces]
        results = [fut.result() for fut in futures]
    for verdict in results:
        if verdict.found:
            return verdict
    return NOT_FOUND


def detect_chain(board: BoardGrid, last_move: int, config: DetectorConfig = None):
    """Full pipeline: enclosed areas first, then the two-path search.

    Returns ``(verdict, trace)``. When no area survives filtering the search
    is skipped.
    """
    config = config or board.config
    if not board.cells[last_move]:
        raise StartSquareEmpty(
            f"last-moved square {index_to_square(last_move, config)} is empty")
    areas, _, trace = detect_enclosed_areas(board, config)
    if not areas:
        verdict = NOT_FOUND
    else:
        verdict = two_disjoint_paths_exist(board, trace.after_compaction, last_move, config)
    return verdict, replace(trace, verdict=verdict)


def verify_witness(board: BoardGrid, grid: ClassGrid, start: int, verdict: ChainVerdict) -> bool:
    """Linear re-check of a found verdict's witness pair."""
    if not verdict.found:
        return True
    first, second = verdict.witness
    if first.target_class != verdict.ea_class or second.target_class != verdict.ea_class:
        return False
    near = king_neighbors(board.config)
    start_ring = {n for _, n in near[start]}
    for path in (first, second):
        squares = path.squares
        if not squares or squares[0] not in start_ring:
            return False
        if len(set(squares)) != len(squares) or start in squares:
            return False
        for i, sq in enumerate(squares):
            if not board.cells[sq]:
                return False
            if i and sq not in {n for _, n in near[squares[i - 1]]}:
                return False
        if verdict.ea_class not in adjacent_classes(grid, squares[-1]):
            return False
    return set(first.squares).isdisjoint(second.squares)
