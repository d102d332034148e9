"""Differential campaigns: production pipeline against the independent oracles."""

from __future__ import annotations

from dataclasses import dataclass, field

from .areas import detect_enclosed_areas
from .board import DEFAULT_CONFIG, DetectorConfig, index_to_square
from .chains import two_disjoint_paths_exist, verify_witness
from .exceptions import EnumerationOverflow
from .oracles import (DENSITIES, oracle_disjoint_paths, oracle_ea_floodfill,
                      oracle_enumerate_paths, random_position)


@dataclass
class CampaignResult:
    samples: int = 0
    area_disagreements: int = 0
    verdict_disagreements: int = 0
    enumeration_disagreements: int = 0
    enumeration_completed: int = 0
    invalid_witnesses: int = 0
    records: list = field(default_factory=list)

    @property
    def disagreements(self) -> int:
        return (self.area_disagreements + self.verdict_disagreements
                + self.enumeration_disagreements + self.invalid_witnesses)

    def summary(self) -> str:
        return f"samples={self.samples} disagreements={self.disagreements}"


def pick_start(board, seed: int):
    occupied = board.occupied_indices()
    return occupied[seed % len(occupied)]


def run_campaign(samples: int, seed: int = 0, densities=DENSITIES,
                 config: DetectorConfig = DEFAULT_CONFIG,
                 enumeration_cap: int = 5_000) -> CampaignResult:
    """Check ``samples`` random boards; sample ``k`` uses seed ``seed + k``.

    Each board is checked for area agreement with the flood-fill oracle, and
    one start square per board for verdict agreement with the max-flow
    oracle and, when it finishes under ``enumeration_cap``, the brute-force
    enumeration oracle.
    """
    result = CampaignResult()
    densities = tuple(densities)
    for k in range(samples):
        sample_seed = seed + k
        density = densities[k % len(densities)]
        board = random_position(sample_seed, density, config).board
        result.samples += 1

        areas, _, trace = detect_enclosed_areas(board, config)
        expected = {g.members for g in oracle_ea_floodfill(board, config.min_ea_size)}
        if {a.members for a in areas} != expected:
            result.area_disagreements += 1
            result.records.append(
                f"seed={sample_seed} density={density} areas main={len(areas)} "
                f"oracle={len(expected)}")

        start = pick_start(board, sample_seed)
        grid = trace.after_compaction
        verdict = two_disjoint_paths_exist(board, grid, start, config)
        flow = oracle_disjoint_paths(board, grid, start)
        square = index_to_square(start, config)
        if verdict.found != flow:
            result.verdict_disagreements += 1
            result.records.append(
                f"seed={sample_seed} density={density} start={square} "
                f"main={verdict.found} oracle={flow}")
        if not verify_witness(board, grid, start, verdict):
            result.invalid_witnesses += 1
            result.records.append(
                f"seed={sample_seed} density={density} start={square} witness=invalid")
        try:
            brute = oracle_enumerate_paths(board, grid, start, enumeration_cap)
        except EnumerationOverflow:
            continue
        result.enumeration_completed += 1
        if brute != flow:
            result.enumeration_disagreements += 1
            result.records.append(
                f"seed={sample_seed} density={density} start={square} "
                f"enumeration={brute} oracle={flow}")
    return result
