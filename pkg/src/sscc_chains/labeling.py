"""Two-pass 8-connected component labeling of empty squares."""

from __future__ import annotations

from dataclasses import dataclass

from .board import BoardGrid, DetectorConfig


@dataclass(frozen=True)
class ClassGrid:
    """Per-square class labels; 0 means the square belongs to no class."""

    config: DetectorConfig
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.config.size:
            raise ValueError(
                f"expected {self.config.size} labels, got {len(self.labels)}")

    def classes(self) -> dict:
        """Map class id to the sorted indices carrying it."""
        groups = {}
        for index, label in enumerate(self.labels):
            if label:
                groups.setdefault(label, []).append(index)
        return groups

    @property
    def class_count(self) -> int:
        return len({label for label in self.labels if label})

    def partition(self) -> frozenset:
        """Label-independent view of the grouping, for comparisons."""
        return frozenset(frozenset(members) for members in self.classes().values())


class _Equivalences:
    def __init__(self):
        self.parent = [0]

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def label_empty_components(board: BoardGrid) -> ClassGrid:
    """Label every maximal king-connected group of empty squares.

    Groups are numbered 1..K by the row-major position of their first square.
    """
    config = board.config
    width, height = config.width, config.height
    cells = board.cells
    provisional = [0] * config.size
    eq = _Equivalences()

    # First pass: provisional labels from the already-scanned neighbors
    # (left, top-left, top, top-right), recording equivalences.
    for row in range(height):
        for col in range(width):
            index = row * width + col
            if cells[index]:
                continue
            seen = []
            if col > 0 and provisional[index - 1]:
                seen.append(provisional[index - 1])
            if row > 0:
                above = index - width
                for c, i in ((col - 1, above - 1), (col, above), (col + 1, above + 1)):
                    if 0 <= c < width and provisional[i]:
                        seen.append(provisional[i])
            if not seen:
                provisional[index] = eq.make()
                continue
            smallest = min(seen)
            provisional[index] = smallest
            for label in seen:
                eq.union(smallest, label)

    # Second pass: resolve equivalences and number roots by first occurrence.
    final = {}
    labels = [0] * config.size
    for index, label in enumerate(provisional):
        if label:
            root = eq.find(label)
            if root not in final:
                final[root] = len(final) + 1
            labels[index] = final[root]
    return ClassGrid(config, tuple(labels))


def compact_labels(grid: ClassGrid) -> ClassGrid:
    """Renumber surviving labels to 1..K' in row-major first-occurrence order."""
    mapping = {}
    labels = []
    for label in grid.labels:
        if label and label not in mapping:
            mapping[label] = len(mapping) + 1
        labels.append(mapping.get(label, 0))
    return ClassGrid(grid.config, tuple(labels))
