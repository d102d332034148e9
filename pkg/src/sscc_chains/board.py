"""Board occupancy model, square/index algebra and FEN placement parsing.

Squares are indexed row-major from the top-left corner as seen by White,
so on the standard board a8 is 0, h8 is 7 and h1 is 63.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import InvalidConfig, InvalidFen, InvalidSquare

# (row delta, column delta); rows grow downwards (towards rank 1).
TOP_LEFT = (-1, -1)
TOP_CENTER = (-1, 0)
TOP_RIGHT = (-1, 1)
LEFT = (0, -1)
RIGHT = (0, 1)
BOTTOM_LEFT = (1, -1)
BOTTOM_CENTER = (1, 0)
BOTTOM_RIGHT = (1, 1)

DEFAULT_NEIGHBOR_ORDER = (
    TOP_LEFT, TOP_CENTER, TOP_RIGHT,
    LEFT, RIGHT,
    BOTTOM_LEFT, BOTTOM_CENTER, BOTTOM_RIGHT,
)
ORTHOGONAL_OFFSETS = (TOP_CENTER, LEFT, RIGHT, BOTTOM_CENTER)

PIECE_LETTERS = "KQRBNPkqrbnp"
EMPTY = ""

FILES = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class DetectorConfig:
    """Board dimensions and search settings shared by every stage."""

    width: int = 8
    height: int = 8
    min_ea_size: int = 2
    neighbor_order: tuple = DEFAULT_NEIGHBOR_ORDER
    parallel_branches: bool = False

    def __post_init__(self):
        for name in ("width", "height", "min_ea_size"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidConfig(f"{name} must be an integer, got {value!r}")
        if self.width < 3 or self.height < 3:
            raise InvalidConfig(
                f"board must be at least 3x3, got {self.width}x{self.height}")
        if self.width > len(FILES):
            raise InvalidConfig(f"width above {len(FILES)} has no file letters")
        if not 1 <= self.min_ea_size <= self.size // 2:
            raise InvalidConfig(
                f"min_ea_size must lie in [1, {self.size // 2}], "
                f"got {self.min_ea_size}")
        order = tuple(tuple(offset) for offset in self.neighbor_order)
        if sorted(order) != sorted(DEFAULT_NEIGHBOR_ORDER):
            raise InvalidConfig(
                "neighbor_order must be a permutation of the eight king moves")
        object.__setattr__(self, "neighbor_order", order)

    @property
    def size(self) -> int:
        return self.width * self.height


DEFAULT_CONFIG = DetectorConfig()


@dataclass(frozen=True)
class BoardGrid:
    """Row-major cells; ``""`` marks an empty square, else a FEN piece letter."""

    config: DetectorConfig
    cells: tuple

    def __post_init__(self):
        if len(self.cells) != self.config.size:
            raise ValueError(
                f"expected {self.config.size} cells, got {len(self.cells)}")
        for cell in self.cells:
            if cell != EMPTY and (len(cell) != 1 or cell not in PIECE_LETTERS):
                raise ValueError(f"bad cell value {cell!r}")

    def is_occupied(self, index: int) -> bool:
        return self.cells[index] != EMPTY

    @property
    def occupancy(self) -> tuple:
        return tuple(cell != EMPTY for cell in self.cells)

    def occupied_indices(self) -> list:
        return [i for i, cell in enumerate(self.cells) if cell != EMPTY]

    def empty_indices(self) -> list:
        return [i for i, cell in enumerate(self.cells) if cell == EMPTY]

    @classmethod
    def from_occupancy(cls, occupied, config: DetectorConfig = DEFAULT_CONFIG,
                       piece: str = "P") -> "BoardGrid":
        """Build a board from a boolean sequence, filling occupied cells with ``piece``."""
        return cls(config, tuple(piece if flag else EMPTY for flag in occupied))

    @classmethod
    def from_squares(cls, squares, config: DetectorConfig = DEFAULT_CONFIG,
                     piece: str = "P") -> "BoardGrid":
        """Build a board with ``piece`` on each named square."""
        cells = [EMPTY] * config.size
        for square in squares:
            cells[square_to_index(square, config)] = piece
        return cls(config, tuple(cells))

    def to_fen(self) -> str:
        """Placement field of this board (extended FEN for wide boards)."""
        width = self.config.width
        ranks = []
        for row in range(self.config.height):
            out = []
            run = 0
            for cell in self.cells[row * width:(row + 1) * width]:
                if cell == EMPTY:
                    run += 1
                    continue
                if run:
                    out.append(str(run))
                    run = 0
                out.append(cell)
            if run:
                out.append(str(run))
            ranks.append("".join(out))
        return "/".join(ranks)


_RANK_TOKEN = re.compile(r"[1-9][0-9]*|[KQRBNPkqrbnp]")


def parse_fen(text: str, config: DetectorConfig = DEFAULT_CONFIG) -> BoardGrid:
    """Parse the placement field of a FEN record.

    Fields after the first (side to move, castling, ...) are ignored. On
    boards wider than 9 an empty run may be written as a multi-digit number;
    on narrower boards two adjacent digits are rejected.
    """
    if not isinstance(text, str) or not text.strip():
        raise InvalidFen("invalid FEN: empty string")
    placement = text.split()[0]
    ranks = placement.split("/")
    if len(ranks) != config.height:
        raise InvalidFen(
            f"invalid FEN: expected {config.height} ranks, got {len(ranks)}")

    cells = []
    for number, rank in enumerate(ranks):
        rank_label = config.height - number
        pos = 0
        filled = 0
        while pos < len(rank):
            match = _RANK_TOKEN.match(rank, pos)
            if match is None:
                raise InvalidFen(
                    f"invalid FEN: unexpected {rank[pos]!r} in rank {rank_label}")
            token = match.group()
            if token.isdigit():
                if len(token) > 1 and config.width <= 9:
                    raise InvalidFen(
                        f"invalid FEN: consecutive digits {token!r} in rank {rank_label}")
                count = int(token)
                cells.extend([EMPTY] * count)
                filled += count
            else:
                cells.append(token)
                filled += 1
            pos = match.end()
        if filled != config.width:
            raise InvalidFen(
                f"invalid FEN: rank {rank_label} describes {filled} squares, "
                f"expected {config.width}")
    return BoardGrid(config, tuple(cells))


_SQUARE = re.compile(r"([a-z])([1-9][0-9]*)")


def square_to_index(notation: str, config: DetectorConfig = DEFAULT_CONFIG) -> int:
    match = _SQUARE.fullmatch(notation) if isinstance(notation, str) else None
    if match is None:
        raise InvalidSquare(f"invalid square {notation!r}")
    file_offset = FILES.index(match.group(1))
    rank = int(match.group(2))
    if file_offset >= config.width or not 1 <= rank <= config.height:
        raise InvalidSquare(
            f"square {notation!r} is off a {config.width}x{config.height} board")
    return (config.height - rank) * config.width + file_offset


def index_to_square(index: int, config: DetectorConfig = DEFAULT_CONFIG) -> str:
    assert 0 <= index < config.size, f"index {index} out of range"
    row, col = divmod(index, config.width)
    return f"{FILES[col]}{config.height - row}"


def is_rim(index: int, config: DetectorConfig = DEFAULT_CONFIG) -> bool:
    row, col = divmod(index, config.width)
    return row in (0, config.height - 1) or col in (0, config.width - 1)


@lru_cache(maxsize=None)
def _neighbor_table(width: int, height: int, offsets: tuple) -> tuple:
    table = []
    for index in range(width * height):
        row, col = divmod(index, width)
        near = []
        for ordinal, (dr, dc) in enumerate(offsets):
            r, c = row + dr, col + dc
            if 0 <= r < height and 0 <= c < width:
                near.append((ordinal, r * width + c))
        table.append(tuple(near))
    return tuple(table)


def king_neighbors(config: DetectorConfig = DEFAULT_CONFIG) -> tuple:
    """Per-square tuples of ``(direction ordinal, neighbor index)`` in search order.

    Off-board directions are omitted, so there is no wraparound.
    """
    return _neighbor_table(config.width, config.height, config.neighbor_order)


def neighbor_indices(config: DetectorConfig = DEFAULT_CONFIG) -> tuple:
    """Per-square tuples of king-move neighbor indices in search order."""
    table = king_neighbors(config)
    return tuple(tuple(n for _, n in row) for row in table)


def orthogonal_neighbors(config: DetectorConfig = DEFAULT_CONFIG) -> tuple:
    table = _neighbor_table(config.width, config.height, ORTHOGONAL_OFFSETS)
    return tuple(tuple(n for _, n in row) for row in table)
