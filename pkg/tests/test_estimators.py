import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from sscc_chains import ChainDetector, EnclosedAreaTransformer, InvalidConfig, InvalidSquare
from sscc_chains.validation import check_board, check_config, check_square

from positions import FIGURE_4_FEN, SPIRAL_FEN, diamond, figure_9, squares


def test_transformer_labels():
    boards = [FIGURE_4_FEN, SPIRAL_FEN, diamond()]
    labels = EnclosedAreaTransformer().fit(boards).transform(boards)
    assert labels.shape == (3, 64)
    assert (labels[0] > 0).sum() == 10
    assert not labels[1].any()
    assert set(np.flatnonzero(labels[2])) == squares(["d4", "e3"])


def test_transformer_occupancy_input():
    occupancy = np.array(diamond().occupancy).reshape(8, 8)
    labels = EnclosedAreaTransformer().fit_transform([occupancy, occupancy.ravel().astype(int)])
    assert (labels[0] == labels[1]).all()


def test_detector_predict_and_score():
    X = [(FIGURE_4_FEN, "a3"), (SPIRAL_FEN, "e1"), (diamond(), 36)]
    det = ChainDetector().fit(X)
    assert det.predict(X).tolist() == [True, False, True]
    assert det.score(X, [True, False, True]) == 1.0
    assert list(det.classes_) == [False, True]


def test_detector_detect_returns_trace():
    verdict, trace = ChainDetector().fit().detect(figure_9(), "f3")
    assert trace.verdict == verdict


def test_parallel_param():
    X = [(FIGURE_4_FEN, "a3"), (diamond(), "c4")]
    assert ChainDetector(parallel=True).fit().predict(X).tolist() == [True, True]


def test_params_and_clone():
    det = ChainDetector(min_ea_size=3)
    assert det.get_params() == {"width": 8, "height": 8, "min_ea_size": 3, "parallel": False}
    assert clone(det).set_params(min_ea_size=2).min_ea_size == 2
    assert "min_ea_size" in EnclosedAreaTransformer().get_params()


def test_unfitted():
    with pytest.raises(NotFittedError):
        EnclosedAreaTransformer().transform([SPIRAL_FEN])
    with pytest.raises(NotFittedError):
        ChainDetector().predict([(SPIRAL_FEN, "e1")])


def test_bad_params_fail_at_fit():
    with pytest.raises(InvalidConfig):
        ChainDetector(width=2).fit()


def test_pipeline():
    pipe = make_pipeline(EnclosedAreaTransformer())
    assert pipe.fit_transform([SPIRAL_FEN]).shape == (1, 64)


def test_validation_helpers():
    config = check_config()
    assert check_square("a8", config) == 0
    assert check_square(np.int64(63), config) == 63
    for bad in (64, -1, True, 2.0):
        with pytest.raises(InvalidSquare):
            check_square(bad, config)
    with pytest.raises(ValueError):
        check_board(np.zeros(10, dtype=bool), config)
    with pytest.raises(ValueError):
        check_board(np.zeros(64, dtype=float), config)
    with pytest.raises(InvalidConfig):
        check_board(diamond(), check_config(width=9))
