import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from discord_dynamics._errors import NegativeTimeError
from discord_dynamics.channels import (
    ChannelKind,
    PauliChannel,
    evolve_c,
    kraus_apply,
    kraus_operators,
)
from discord_dynamics.qcore import IDENTITY2, SIGMA3, DensityMatrix
from discord_dynamics.states import (
    BellDiagonalState,
    random_bell_diagonal,
    to_density_matrix,
)

WORKBENCH = BellDiagonalState(1, -0.6, 0.6)
PHASE = PauliChannel(ChannelKind.PHASE_FLIP)


def _random_state(rng: np.random.Generator) -> DensityMatrix:
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return DensityMatrix(rho / np.trace(rho))


def test_channel_tokens():
    assert ChannelKind("phase") is ChannelKind.PHASE_FLIP
    assert ChannelKind("bit") is ChannelKind.BIT_FLIP
    assert ChannelKind("bitphase") is ChannelKind.BIT_PHASE_FLIP
    assert PauliChannel("bit").kind is ChannelKind.BIT_FLIP


def test_kraus_operators_limits():
    e1, e2 = kraus_operators(PHASE, 0.0)
    assert_allclose(e1, IDENTITY2)
    assert_allclose(e2, 0)
    e1, e2 = kraus_operators(PHASE, 50.0)
    assert_allclose(e1, IDENTITY2 / math.sqrt(2), atol=1e-12)
    assert_allclose(e2, SIGMA3 / math.sqrt(2), atol=1e-12)


def test_kraus_operators_half_mixing():
    assert PHASE.mixing(math.log(2)) == pytest.approx(0.5)
    e1, e2 = kraus_operators(PHASE, math.log(2))
    assert_allclose(e1, math.sqrt(0.75) * IDENTITY2, atol=1e-15)
    assert_allclose(e2, math.sqrt(0.25) * SIGMA3, atol=1e-15)


@pytest.mark.parametrize("kind", list(ChannelKind))
@pytest.mark.parametrize("t", [0.0, 0.1, 0.7, 3.0, 40.0])
def test_kraus_completeness(kind, t):
    assert kraus_operators(PauliChannel(kind, gamma=1.3), t).is_trace_preserving()


def test_negative_time():
    with pytest.raises(NegativeTimeError):
        kraus_operators(PHASE, -0.1)
    with pytest.raises(NegativeTimeError):
        evolve_c(WORKBENCH, PHASE, -1.0)


def test_negative_gamma():
    with pytest.raises(ValueError):
        PauliChannel(ChannelKind.PHASE_FLIP, gamma=-1.0)


def test_kraus_apply_identity_at_zero():
    rho = to_density_matrix(WORKBENCH)
    assert kraus_apply(rho, PHASE, 0.0).allclose(rho)


def test_phase_flip_long_time_limit():
    rho = to_density_matrix(WORKBENCH)
    limit = to_density_matrix(BellDiagonalState(0, 0, 0.6))
    assert kraus_apply(rho, PHASE, 20.0).allclose(limit)


def test_evolve_c_examples():
    assert evolve_c(WORKBENCH, PHASE, 0.0) == WORKBENCH
    crossing = evolve_c(WORKBENCH, PHASE, 0.5 * math.log(1 / 0.6))
    assert_allclose(crossing.coefficients, (0.6, -0.36, 0.6), atol=1e-12)
    bit = evolve_c(WORKBENCH, PauliChannel(ChannelKind.BIT_FLIP), 30.0)
    assert_allclose(bit.coefficients, (1, 0, 0), atol=1e-12)
    bitphase = evolve_c(WORKBENCH, PauliChannel(ChannelKind.BIT_PHASE_FLIP), 30.0)
    assert_allclose(bitphase.coefficients, (0, -0.6, 0), atol=1e-12)


@pytest.mark.parametrize("kind", list(ChannelKind))
def test_kraus_and_analytic_flow_agree(kind):
    channel = PauliChannel(kind)
    for s in random_bell_diagonal(np.random.default_rng(8), 100):
        rho = to_density_matrix(s)
        for t in (0.0, 0.25, 1.0, 3.0):
            analytic = to_density_matrix(evolve_c(s, channel, t))
            assert kraus_apply(rho, channel, t).allclose(analytic, atol=1e-12)


@pytest.mark.parametrize("kind", list(ChannelKind))
def test_semigroup(kind):
    channel = PauliChannel(kind, gamma=0.8)
    s = BellDiagonalState(0.3, -0.2, 0.5)
    two_steps = evolve_c(evolve_c(s, channel, 0.4), channel, 0.9)
    assert_allclose(
        two_steps.coefficients, evolve_c(s, channel, 1.3).coefficients, atol=1e-12
    )
    rho = _random_state(np.random.default_rng(9))
    assert kraus_apply(kraus_apply(rho, channel, 0.4), channel, 0.9).allclose(
        kraus_apply(rho, channel, 1.3)
    )


def test_rate_and_time_enter_as_product():
    fast = PauliChannel(ChannelKind.PHASE_FLIP, gamma=2.0)
    assert evolve_c(WORKBENCH, fast, 0.5) == evolve_c(WORKBENCH, PHASE, 1.0)


@pytest.mark.parametrize("kind", list(ChannelKind))
def test_kraus_apply_preserves_trace_and_hermiticity(kind):
    rng = np.random.default_rng(10)
    for _ in range(20):
        out = kraus_apply(_random_state(rng), PauliChannel(kind), rng.uniform(0, 3))
        assert np.trace(out.mat) == pytest.approx(1.0, abs=1e-12)
        assert np.max(np.abs(out.mat - out.mat.conj().T)) <= 1e-12
