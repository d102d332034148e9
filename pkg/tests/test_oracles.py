import pytest

from sscc_chains import (BoardGrid, DEFAULT_CONFIG, DetectorConfig, EnumerationOverflow,
                         StartSquareEmpty, detect_enclosed_areas, square_to_index)
from sscc_chains.oracles import (DENSITIES, build_flow_network, dense_chain_position,
                                 enumerate_paths, max_disjoint_paths, oracle_disjoint_paths,
                                 oracle_ea_floodfill, oracle_enclosing_cycle,
                                 oracle_enumerate_paths, piece_distances, random_position)

from positions import diamond, figure_4, figure_7, figure_9, squares, two_areas


def compacted(board):
    return detect_enclosed_areas(board)[2].after_compaction


def at(name):
    return square_to_index(name)


def test_floodfill_fixtures():
    assert [g.members for g in oracle_ea_floodfill(figure_9(), 2)] == [squares(["b6", "b7"])]
    assert [g.members for g in oracle_ea_floodfill(figure_7(), 2)] == [
        squares(["e5", "f5", "g5", "f6", "g6", "g4"])]
    assert oracle_ea_floodfill(BoardGrid.from_occupancy([False] * 64), 2) == []


def test_flow_fixtures():
    board = diamond()
    assert oracle_disjoint_paths(board, compacted(board), at("e4"))
    # d5, f3 and d3 all touch the area directly
    assert max_disjoint_paths(board, at("e4"), squares(["d4", "e3"])) == 3
    assert max_disjoint_paths(board, at("c4"), squares(["d4", "e3"])) == 2
    board = two_areas()
    assert not oracle_disjoint_paths(board, compacted(board), at("e5"))
    board = figure_4()
    assert oracle_disjoint_paths(board, compacted(board), at("a3"))


def test_flow_network_shape():
    g = build_flow_network(diamond(), at("e4"), squares(["d4", "e3"]))
    # five split pieces plus source and sink
    assert g.number_of_nodes() == 12
    assert all(d["capacity"] == 1 for _, _, d in g.edges(data=True))


def test_flow_with_one_neighbor():
    board = BoardGrid.from_squares(["c4", "d5", "e4", "f3", "e2", "d3", "g2", "h1"])
    assert not oracle_disjoint_paths(board, compacted(board), at("h1"))


def test_flow_ignores_renumbering():
    board = figure_4()
    members = compacted(board).classes()[1]
    assert max_disjoint_paths(board, at("a3"), members) >= 2


def test_enumeration_fixtures():
    board = diamond()
    grid = compacted(board)
    assert len(enumerate_paths(board, grid, at("c4"))) == 2
    # e4 also touches d3's neighbor d4, so it sees three records
    assert len(enumerate_paths(board, grid, at("e4"))) == 3
    assert oracle_enumerate_paths(board, grid, at("e4"))
    lone = BoardGrid.from_squares(["c4", "d5", "e4", "f3", "e2", "d3", "a1"])
    assert enumerate_paths(lone, compacted(lone), at("a1")) == []
    assert not oracle_enumerate_paths(lone, compacted(lone), at("a1"))


def test_enumeration_figure_4():
    # about a million prefixes on this board; slow but exhaustive
    board = figure_4()
    assert oracle_enumerate_paths(board, compacted(board), at("a3"), 2_000_000)


def test_enumeration_overflow():
    board = figure_4()
    with pytest.raises(EnumerationOverflow):
        enumerate_paths(board, compacted(board), at("a3"), 10)


def test_oracles_reject_empty_start():
    board = diamond()
    grid = compacted(board)
    for fn in (oracle_disjoint_paths, oracle_enumerate_paths):
        with pytest.raises(StartSquareEmpty):
            fn(board, grid, at("d4"))


def test_enclosing_cycle():
    board = diamond()
    area = detect_enclosed_areas(board)[0][0]
    assert oracle_enclosing_cycle(board, at("e4"), area)
    line = BoardGrid.from_squares(["c4", "d4", "e4", "f4"])
    assert not oracle_enclosing_cycle(line, at("d4"), squares(["d5"]))
    with pytest.raises(EnumerationOverflow):
        oracle_enclosing_cycle(figure_4(), at("a3"), squares(["c4"]))


def test_random_position_determinism():
    a = random_position(42, 0.5)
    assert a == random_position(42, 0.5)
    assert a.board != random_position(43, 0.5).board


def test_random_position_density_edges():
    assert len(random_position(1, 0.0).board.occupied_indices()) == 1
    assert len(random_position(1, 1.0).board.occupied_indices()) == 64
    with pytest.raises(ValueError):
        random_position(1, 1.5)


def test_random_position_frozen_values():
    # pinned so a change of generator cannot go unnoticed
    board = random_position(0, 0.5).board
    assert board.to_fen() == "1B2q1b1/2r1Qq1n/b3P1nk/p1B1k3/3R1Q2/6q1/3rR2r/k4pK1"


def test_random_position_other_sizes():
    config = DetectorConfig(width=5, height=7)
    board = random_position(3, 0.4, config).board
    assert len(board.cells) == 35


def test_dense_chain_position():
    sample, start = dense_chain_position(0)
    groups = oracle_ea_floodfill(sample.board, 2)
    assert len(groups) == 1
    dist = piece_distances(sample.board, groups[0].members)
    assert dist[start] == max(dist.values())
    assert sample.density == 0.8


def test_density_sweep():
    assert DENSITIES == (0.2, 0.35, 0.5, 0.65, 0.8)
