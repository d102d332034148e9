"""scikit-learn style wrappers around the detection pipeline.

Samples are boards (FEN text, :class:`BoardGrid` or occupancy arrays). The
transformer maps each board to its final enclosed-area labels; the detector
maps ``(board, last_move)`` pairs to the chain verdict.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .areas import detect_enclosed_areas
from .chains import detect_chain
from .validation import check_board, check_config, check_square


class EnclosedAreaTransformer(TransformerMixin, BaseEstimator):
    """Boards in, compacted enclosed-area label vectors out (0 = no area)."""

    def __init__(self, width=8, height=8, min_ea_size=2):
        self.width = width
        self.height = height
        self.min_ea_size = min_ea_size

    def fit(self, X=None, y=None):
        # nothing to learn; fitting only validates the parameters
        self.config_ = check_config(self.width, self.height, self.min_ea_size)
        self.n_features_out_ = self.config_.size
        return self

    def transform(self, X):
        check_is_fitted(self, "config_")
        rows = []
        for board in X:
            _, _, trace = detect_enclosed_areas(check_board(board, self.config_), self.config_)
            rows.append(trace.after_compaction.labels)
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.config_.size)


class ChainDetector(ClassifierMixin, BaseEstimator):
    """Predicts whether the last move completed a chain.

    Each sample in ``X`` is a ``(board, last_move)`` pair; ``last_move`` may
    be algebraic text or an index.
    """

    def __init__(self, width=8, height=8, min_ea_size=2, parallel=False):
        self.width = width
        self.height = height
        self.min_ea_size = min_ea_size
        self.parallel = parallel

    def fit(self, X=None, y=None):
        self.config_ = check_config(self.width, self.height, self.min_ea_size, self.parallel)
        self.classes_ = np.array([False, True])
        return self

    def detect(self, board, last_move):
        """Full result for one sample: ``(ChainVerdict, StageTrace)``."""
        check_is_fitted(self, "config_")
        board = check_board(board, self.config_)
        return detect_chain(board, check_square(last_move, self.config_), self.config_)

    def predict(self, X):
        return np.array([self.detect(board, move)[0].found for board, move in X], dtype=bool)
