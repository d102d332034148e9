"""Chain detection for Switch-Side Chain-Chess positions."""

from .areas import (EnclosedArea, FilterReport, StageTrace, detect_enclosed_areas,
                    eliminate_small_classes, perimeter_filter)
from .board import (DEFAULT_CONFIG, DEFAULT_NEIGHBOR_ORDER, BoardGrid, DetectorConfig,
                    index_to_square, parse_fen, square_to_index)
from .chains import (ChainVerdict, PathWitness, SearchState, adjacent_classes, detect_chain,
                     two_disjoint_paths_exist, verify_witness)
from .estimators import ChainDetector, EnclosedAreaTransformer
from .exceptions import (EnumerationOverflow, InvalidConfig, InvalidFen, InvalidSquare,
                         StartSquareEmpty)
from .labeling import ClassGrid, compact_labels, label_empty_components

__version__ = "0.1.0"

__all__ = [
    "BoardGrid", "ChainDetector", "ChainVerdict", "ClassGrid", "DEFAULT_CONFIG",
    "DEFAULT_NEIGHBOR_ORDER", "DetectorConfig", "EnclosedArea", "EnclosedAreaTransformer",
    "EnumerationOverflow", "FilterReport", "InvalidConfig", "InvalidFen", "InvalidSquare",
    "PathWitness", "SearchState", "StageTrace", "StartSquareEmpty", "adjacent_classes",
    "compact_labels", "detect_chain", "detect_enclosed_areas", "eliminate_small_classes",
    "index_to_square", "label_empty_components", "parse_fen", "perimeter_filter",
    "square_to_index", "two_disjoint_paths_exist", "verify_witness",
]
