import math

import pytest

import ehvi


def test_dominance_and_filter():
    assert ehvi.dominates([1, 2], [2, 3])
    assert not ehvi.dominates([1, 2], [1, 2])
    assert ehvi.nondominated_filter([[2, 2], [1, 1], [1, 1]]) == [[1, 1]]


def test_hypervolume_worked_value():
    assert ehvi.hypervolume([[1, 3], [2, 2], [3, 1]], [4, 4]) == 6.0
    assert ehvi.hypervolume([[3, 1], [1, 3]], [0, 0], maximize=True) == 5.0


def test_psi_and_box():
    assert ehvi.psi(0.0, 0.0, 1.0) == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-15)
    side = ehvi.psi(1.0, 0.0, 1.0) - ehvi.psi(0.0, 0.0, 1.0)
    assert ehvi.box_integral([0, 0], [1, 1], [0, 0], [1, 1]) == pytest.approx(side * side, rel=1e-14)
    with pytest.raises(ehvi.ParameterError):
        ehvi.psi(0.0, 0.0, 0.0)


def test_empty_front_matches_analytic_value():
    res = ehvi.ehvi([], [0, 0], [0, 0], [1, 1])
    assert res["value"] == pytest.approx(1 / (2 * math.pi), rel=1e-12)
    assert res["algorithm"] == "wfg"


def test_backends_agree_on_generated_front():
    front = ehvi.generate_front(3, 30, seed=2)
    args = (front, [0, 0, 0], [10, 10, 10], [2.5, 2.5, 2.5])
    values = [ehvi.ehvi(*args, maximize=True, algorithm=a)["value"] for a in ("grid", "wfg", "clm3")]
    assert values[1] == pytest.approx(values[0], rel=1e-10)
    assert values[2] == pytest.approx(values[0], rel=1e-10)


def test_monte_carlo_brackets_exact_value():
    args = ([[-1, -1]], [0, 0], [-1, -1], [1, 1])
    exact = ehvi.ehvi(*args)["value"]
    mc = ehvi.ehvi_monte_carlo(*args, samples=200000, seed=4)
    assert abs(mc["mean"] - exact) <= 4 * mc["std_error"]


def test_errors():
    with pytest.raises(ehvi.InvalidFrontError):
        ehvi.ehvi([[1, 1], [2, 2]], [4, 4], [0, 0], [1, 1])
    with pytest.raises(ehvi.ReferenceBoundError):
        ehvi.ehvi([[3, 1]], [2, 2], [0, 0], [1, 1])
    with pytest.raises(ehvi.UnsupportedDimensionError):
        ehvi.ehvi([], [0, 0], [0, 0], [1, 1], algorithm="clm3")
    with pytest.raises(ehvi.Error):
        ehvi.dominates([1, 2], [1, 2, 3])
