import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oloid.specfun import agm, ellipe, ellipk

import oracles

SQRT3_2 = math.sqrt(3.0) / 2.0
# AGM(1, 1/2) iterated to convergence
K_SQRT3_2 = 2.156515647499643235438675
# fixed by (2/3)(K + 2E) = 3.05241846842437485669720053193
V_OLOID = 3.05241846842437485669720053193


def test_agm_endpoints():
    assert agm(1.0, 1.0) == 1.0
    assert agm(0.0, 0.0) == 0.0
    # Gauss's lemniscatic constant
    assert agm(1.0, math.sqrt(2.0)) == pytest.approx(1.1981402347355922074, rel=1e-15)


def test_agm_rejects_negative():
    with pytest.raises(ValueError):
        agm(-1.0, 2.0)


def test_ellipk_at_zero():
    assert ellipk(0.0) == pytest.approx(math.pi / 2.0, rel=1e-16)


def test_ellipk_at_sqrt3_half():
    assert ellipk(SQRT3_2) == pytest.approx(K_SQRT3_2, rel=1e-15)


def test_ellipk_domain_errors():
    for bad in (-0.1, 1.0, 1.5, math.inf):
        with pytest.raises(ValueError):
            ellipk(bad)


def test_ellipe_trivials():
    assert ellipe(0.0) == pytest.approx(math.pi / 2.0, rel=1e-16)
    assert ellipe(1.0) == 1.0


def test_ellipe_domain_errors():
    for bad in (-0.01, 1.01):
        with pytest.raises(ValueError):
            ellipe(bad)


def test_volume_combination_reproduces_decimal_expansion():
    combo = (2.0 / 3.0) * (ellipk(SQRT3_2) + 2.0 * ellipe(SQRT3_2))
    assert combo == pytest.approx(V_OLOID, rel=1e-14)


def test_ellipk_against_midpoint_oracle_at_half():
    k = 0.5
    oracle = oracles.midpoint_rule(
        lambda x: 1.0 / np.sqrt(1.0 - k * k * np.sin(x) ** 2),
        0.0,
        math.pi / 2.0,
        10**7,
    )
    assert abs(ellipk(k) - oracle) <= 1e-13


def test_both_functions_against_oracle_grid():
    # midpoint error scales as h^2 * f''; 4e6 panels keep it below 1e-12
    # for moduli up to 0.93
    for k in np.linspace(0.02, 0.93, 20):
        k = float(k)
        ko = oracles.midpoint_rule(
            lambda x: 1.0 / np.sqrt(1.0 - k * k * np.sin(x) ** 2),
            0.0,
            math.pi / 2.0,
            4_000_000,
        )
        eo = oracles.midpoint_rule(
            lambda x: np.sqrt(1.0 - k * k * np.sin(x) ** 2),
            0.0,
            math.pi / 2.0,
            4_000_000,
        )
        assert abs(ellipk(k) - ko) <= 1e-12
        assert abs(ellipe(k) - eo) <= 1e-12


@pytest.mark.parametrize("k", [0.1, 0.3, 0.5, SQRT3_2, 0.9])
def test_legendre_relation_pinned_moduli(k):
    kp = math.sqrt(1.0 - k * k)
    defect = (
        ellipe(k) * ellipk(kp)
        + ellipe(kp) * ellipk(k)
        - ellipk(k) * ellipk(kp)
        - math.pi / 2.0
    )
    assert abs(defect) <= 1e-13


@given(st.floats(min_value=0.01, max_value=0.97))
def test_legendre_relation_property(k):
    kp = math.sqrt(1.0 - k * k)
    defect = (
        ellipe(k) * ellipk(kp)
        + ellipe(kp) * ellipk(k)
        - ellipk(k) * ellipk(kp)
        - math.pi / 2.0
    )
    assert abs(defect) <= 1e-13


def test_monotonicity():
    grid = np.linspace(0.0, 0.95, 40)
    kvals = [ellipk(float(k)) for k in grid]
    evals = [ellipe(float(k)) for k in np.append(grid, 1.0)]
    assert all(a < b for a, b in zip(kvals, kvals[1:]))
    assert all(a > b for a, b in zip(evals, evals[1:]))
