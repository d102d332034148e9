"""Input coercion shared by the estimator layer and the CLI."""

from __future__ import annotations

import numpy as np

from .board import BoardGrid, DetectorConfig, parse_fen, square_to_index
from .exceptions import InvalidConfig, InvalidSquare


def check_config(width=8, height=8, min_ea_size=2, parallel_branches=False) -> DetectorConfig:
    return DetectorConfig(width=width, height=height, min_ea_size=min_ea_size,
                          parallel_branches=bool(parallel_branches))


def check_board(board, config: DetectorConfig) -> BoardGrid:
    """Accept a FEN string, a BoardGrid, or an occupancy array (flat or height x width)."""
    if isinstance(board, BoardGrid):
        if (board.config.width, board.config.height) != (config.width, config.height):
            raise InvalidConfig(
                f"board is {board.config.width}x{board.config.height}, "
                f"expected {config.width}x{config.height}")
        return board if board.config == config else BoardGrid(config, board.cells)
    if isinstance(board, str):
        return parse_fen(board, config)
    occupancy = np.asarray(board)
    if occupancy.shape not in ((config.size,), (config.height, config.width)):
        raise ValueError(
            f"occupancy array has shape {occupancy.shape}, expected "
            f"({config.size},) or ({config.height}, {config.width})")
    if occupancy.dtype.kind not in "biu":
        raise ValueError(f"occupancy array must be boolean or integer, got {occupancy.dtype}")
    return BoardGrid.from_occupancy(occupancy.ravel().astype(bool).tolist(), config)


def check_square(square, config: DetectorConfig) -> int:
    """Algebraic text or a plain index; returns the index."""
    if isinstance(square, str):
        return square_to_index(square, config)
    if isinstance(square, (bool, np.bool_)) or not isinstance(square, (int, np.integer)):
        raise InvalidSquare(f"square must be text or an integer index, got {square!r}")
    if not 0 <= square < config.size:
        raise InvalidSquare(f"index {square} outside [0, {config.size})")
    return int(square)
