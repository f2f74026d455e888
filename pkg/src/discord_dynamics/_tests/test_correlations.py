import math

import numpy as np
import pytest
from scipy.optimize import OptimizeResult

from discord_dynamics._errors import OptimizerError
from discord_dynamics.correlations import (
    CorrelationResult,
    Method,
    MinimizerOptions,
    classical_bell_closed,
    classical_correlation_numeric,
    conditional_entropy,
    discord_bell_closed,
    discord_numeric,
    evaluate_at,
    mutual_information,
    mutual_information_bell,
    sqd_bell_closed,
    sqd_numeric,
    weak_conditional_entropy,
)
from discord_dynamics.measurements import BlochDirection
from discord_dynamics.qcore import DensityMatrix
from discord_dynamics.states import (
    BellDiagonalState,
    random_bell_diagonal,
    to_density_matrix,
)

WORKBENCH = BellDiagonalState(1, -0.6, 0.6)
# coarse grid that still contains the three coordinate axes
FAST = MinimizerOptions(n_theta=17, n_phi=16)


def _gain(u: float) -> float:
    return sum((1 + s * u) / 2 * math.log2(1 + s * u) for s in (-1, 1) if 1 + s * u > 0)


def _random_state(rng: np.random.Generator) -> DensityMatrix:
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return DensityMatrix(rho / np.trace(rho))


def test_mutual_information_examples():
    assert mutual_information_bell(BellDiagonalState(0, 0, 0)) == pytest.approx(0.0)
    assert mutual_information_bell(BellDiagonalState(1, -1, 1)) == pytest.approx(2.0)
    assert mutual_information_bell(WORKBENCH) == pytest.approx(1.278071905, abs=1e-9)
    rho = to_density_matrix(WORKBENCH)
    assert mutual_information(rho) == pytest.approx(1.278071905, abs=1e-9)


def test_closed_form_examples():
    assert classical_bell_closed(WORKBENCH).value == pytest.approx(1.0)
    assert discord_bell_closed(WORKBENCH).value == pytest.approx(0.278071905, abs=1e-9)
    bell = BellDiagonalState(1, -1, 1)
    assert classical_bell_closed(bell).value == pytest.approx(1.0)
    assert discord_bell_closed(bell).value == pytest.approx(1.0)
    mixed = BellDiagonalState(0, 0, 0)
    assert discord_bell_closed(mixed).value == pytest.approx(0.0, abs=1e-15)
    assert sqd_bell_closed(mixed, 0.5).value == pytest.approx(0.0, abs=1e-15)
    assert discord_bell_closed(WORKBENCH).method is Method.CLOSED_FORM


@pytest.mark.parametrize(
    "x, expected", [(0.5, 1.118013443), (1.0, 0.805137246), (2.0, 0.408051180)]
)
def test_sqd_workbench(x, expected):
    assert sqd_bell_closed(WORKBENCH, x).value == pytest.approx(expected, abs=1e-8)


def test_sqd_limits():
    for s in random_bell_diagonal(np.random.default_rng(20), 50):
        i = mutual_information_bell(s)
        assert sqd_bell_closed(s, 0.0).value == pytest.approx(i, abs=1e-9)
        d = discord_bell_closed(s).value
        assert sqd_bell_closed(s, 15.0).value == pytest.approx(d, abs=1e-9)


def test_ordering_and_monotonicity():
    for s in random_bell_diagonal(np.random.default_rng(21), 100):
        i = mutual_information_bell(s)
        c = classical_bell_closed(s).value
        d = discord_bell_closed(s).value
        assert -1e-12 <= c <= i + 1e-12
        assert d >= -1e-12
        previous = i
        for x in (0.1, 0.5, 1.0, 2.0, 5.0):
            sqd = sqd_bell_closed(s, x).value
            assert d - 1e-12 <= sqd <= previous + 1e-12
            previous = sqd


def test_sqd_rejects_negative_strength():
    with pytest.raises(ValueError):
        sqd_bell_closed(WORKBENCH, -1.0)
    with pytest.raises(ValueError):
        sqd_numeric(to_density_matrix(WORKBENCH), -1.0)


def test_discord_numeric_matches_closed_form():
    states = [WORKBENCH] + random_bell_diagonal(np.random.default_rng(22), 20)
    for s in states:
        rho = to_density_matrix(s)
        numeric = discord_numeric(rho, FAST)
        assert numeric.method is Method.NUMERIC
        assert numeric.value == pytest.approx(discord_bell_closed(s).value, abs=1e-6)
        classical = classical_correlation_numeric(rho, FAST).value
        assert classical == pytest.approx(classical_bell_closed(s).value, abs=1e-6)


def test_sqd_numeric_matches_closed_form():
    states = [WORKBENCH] + random_bell_diagonal(np.random.default_rng(23), 10)
    for s in states:
        rho = to_density_matrix(s)
        for x in (0.5, 1.0, 2.0):
            numeric = sqd_numeric(rho, x, FAST).value
            assert numeric == pytest.approx(sqd_bell_closed(s, x).value, abs=1e-6)


def test_numeric_default_grid_on_workbench():
    rho = to_density_matrix(WORKBENCH)
    result = discord_numeric(rho)
    assert result.value == pytest.approx(0.278071905, abs=1e-6)
    # the optimum measures along the x axis, where |c1| is largest
    assert np.abs(result.argmin.vector) @ [1, 0, 0] == pytest.approx(1.0, abs=1e-4)
    assert sqd_numeric(rho, 0.5).value == pytest.approx(1.118013443, abs=1e-6)


def test_numeric_is_invariant_under_axis_permutation():
    s = BellDiagonalState(0.3, -0.2, 0.5)
    expected = discord_bell_closed(s).value
    for c in [(0.5, 0.3, -0.2), (-0.2, 0.5, 0.3)]:
        rho = to_density_matrix(BellDiagonalState(*c))
        assert discord_numeric(rho, FAST).value == pytest.approx(expected, abs=1e-6)


def test_general_state_correlations():
    rng = np.random.default_rng(24)
    for _ in range(5):
        rho = _random_state(rng)
        i = mutual_information(rho)
        d = discord_numeric(rho, FAST).value
        c = classical_correlation_numeric(rho, FAST).value
        assert d >= -1e-9
        assert c + d == pytest.approx(i, abs=1e-9)
        assert sqd_numeric(rho, 0.0, FAST).value == pytest.approx(i, abs=1e-9)
        assert sqd_numeric(rho, 1.0, FAST).value >= d - 1e-6


def test_conditional_entropy_is_antipode_invariant():
    rng = np.random.default_rng(25)
    for _ in range(10):
        rho = _random_state(rng)
        n = rng.normal(size=3)
        d, antipode = BlochDirection.from_vector(n), BlochDirection.from_vector(-n)
        assert conditional_entropy(rho, d) == pytest.approx(
            conditional_entropy(rho, antipode), abs=1e-12
        )
        assert weak_conditional_entropy(rho, d, 0.8) == pytest.approx(
            weak_conditional_entropy(rho, antipode, 0.8), abs=1e-12
        )


def test_evaluate_at_fixed_directions():
    rho = to_density_matrix(WORKBENCH)
    along_x = evaluate_at(rho, BlochDirection(math.pi / 2, 0.0), 0.5)
    assert along_x.classical == pytest.approx(1.0, abs=1e-12)
    assert along_x.discord == pytest.approx(0.278071905, abs=1e-9)
    assert along_x.sqd == pytest.approx(1.118013443, abs=1e-9)
    assert along_x.to_json_dict()["theta_phi"] == [math.pi / 2, 0.0]
    along_z = evaluate_at(rho, BlochDirection(0.0, 0.0), 0.5)
    assert along_z.classical == pytest.approx(_gain(0.6), abs=1e-12)
    i = mutual_information(rho)
    assert along_z.discord == pytest.approx(i - _gain(0.6), abs=1e-12)
    assert along_z.sqd == pytest.approx(i - _gain(0.6 * math.tanh(0.5)), abs=1e-12)
    assert along_z.sqd >= along_x.sqd


def test_optimizer_failure(monkeypatch):
    def _fail(fun, x0, **kwargs):
        return OptimizeResult(x=x0, fun=fun(x0), success=False, nfev=1, message="boom")

    monkeypatch.setattr("scipy.optimize.minimize", _fail)
    with pytest.raises(OptimizerError):
        discord_numeric(to_density_matrix(WORKBENCH), FAST)


def test_result_json_round_trip():
    result = discord_numeric(to_density_matrix(WORKBENCH), FAST)
    assert CorrelationResult.from_json_dict(result.to_json_dict()) == result
    assert float(result) == result.value
    closed = discord_bell_closed(WORKBENCH)
    assert "argmin_theta_phi" not in closed.to_json_dict()
