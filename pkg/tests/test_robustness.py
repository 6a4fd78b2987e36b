import math

import numpy as np
import pytest

from conftest import random_states
from sepspec.errors import DegenerateTau, DomainError, OracleUnavailable
from sepspec.fixtures import bell, lhat2_minimizer, product_00, werner
from sepspec.linalg import partial_transpose
from sepspec.robustness import (criterion2_check, lhat_constants, modulus, modulus_bisect,
                                modulus_bisect_batch, ppt_separable, segment_state,
                                spectral_lower_bound, vidal_tarrach_floor, wootters_separable)
from sepspec.states import Spectrum, maximally_mixed


def analytic_ppt_ell(m):
    # min eig of (t rho + (1-t) tau)^TB is t*m + (1-t)/4
    mn = np.linalg.eigvalsh(partial_transpose(m, (2, 2), "B")).min()
    return 1.0 if mn >= 0 else min(1.0, 1.0 / (1.0 - 4.0 * mn))


def test_segment_state():
    rho = bell()
    s = segment_state(rho, 0.25)
    np.testing.assert_allclose(s.matrix, 0.25 * rho.matrix + 0.75 * np.eye(4) / 4)
    np.testing.assert_allclose(segment_state(rho, 0).matrix, np.eye(4) / 4)
    with pytest.raises(DomainError):
        segment_state(rho, 1.5)


def test_known_moduli():
    assert modulus_bisect(bell()).ell == pytest.approx(1 / 3, abs=1e-8)
    assert modulus_bisect(bell(), "wootters").ell == pytest.approx(1 / 3, abs=1e-8)
    assert modulus_bisect(product_00()).ell == 1.0
    assert modulus_bisect(maximally_mixed((2, 2))).ell == 1.0
    assert modulus_bisect(werner(0.5)).ell == pytest.approx(2 / 3, abs=1e-8)
    assert modulus_bisect(lhat2_minimizer()).ell == pytest.approx(1 / math.sqrt(2), abs=1e-8)


def test_random_robustness():
    r = modulus_bisect(bell())
    assert r.random_robustness == pytest.approx(2.0, abs=1e-6)


def test_bisection_matches_analytic_ppt():
    states = random_states(21, 400)
    ell = modulus_bisect_batch(np.array([s.matrix for s in states]), tol=1e-10)
    expect = np.array([analytic_ppt_ell(s.matrix) for s in states])
    np.testing.assert_allclose(ell, expect, atol=1e-8)


def test_oracle_concordance():
    for s in random_states(22, 100):
        a = modulus_bisect(s, "ppt").ell
        b = modulus_bisect(s, "wootters").ell
        assert a == pytest.approx(b, abs=1e-6)


def test_floor_and_monotone_segment():
    for s in random_states(23, 50):
        ell = modulus_bisect(s).ell
        assert ell >= 1 / 3 - 1e-9
        for t in np.linspace(0, 1, 11):
            if t < ell - 1e-6:
                assert ppt_separable(segment_state(s, t))
            elif t > ell + 1e-6:
                assert not ppt_separable(segment_state(s, t))


def test_constants():
    assert vidal_tarrach_floor(4) == pytest.approx(1 / 3)
    assert vidal_tarrach_floor(9) == pytest.approx(2 / 11)
    assert lhat_constants() == pytest.approx((1 / 3, 1 / math.sqrt(2), 1.0))


def test_spectral_lower_bound():
    assert spectral_lower_bound([1, 0, 0, 0]) == pytest.approx(1 / 3)
    assert spectral_lower_bound([0.25] * 4) == 1.0
    # rank-3 flat spectrum satisfies theorem 2 exactly
    assert spectral_lower_bound([1 / 3, 1 / 3, 1 / 3, 0]) == pytest.approx(1.0)
    for s in random_states(24, 200):
        lam = np.linalg.eigvalsh(s.matrix)[::-1]
        assert spectral_lower_bound(lam) <= modulus_bisect(s).ell + 1e-7


def test_modulus_dispatch():
    r = modulus(lhat2_minimizer())
    assert r.method == "closed_form" and r.ell == pytest.approx(1 / math.sqrt(2))
    r = modulus(bell())
    assert r.method == "bisection"
    tau6 = maximally_mixed((2, 3))
    r = modulus(tau6)
    assert r.method == "bound_only" and r.ell == 1.0
    with pytest.raises(OracleUnavailable):
        modulus(tau6, method="bisect")
    with pytest.raises(OracleUnavailable):
        ppt_separable(tau6)


def test_criterion2_agrees_with_oracle():
    n = 0
    for s in random_states(25, 150):
        r = criterion2_check(s)
        ell = modulus_bisect(s).ell
        if abs(ell - 1.0) > 1e-6 and abs(r.weight - r.ell_omega) > 1e-6:
            assert r.separable == (ell >= 1.0 - 1e-9)
            n += 1
        assert r.separable == ppt_separable(s) or abs(r.weight - r.ell_omega) < 1e-6
    assert n > 0
    with pytest.raises(DegenerateTau):
        criterion2_check(maximally_mixed((2, 2)))


def test_spectrum_object_accepted():
    assert spectral_lower_bound(Spectrum.from_values([0.7, 0.1, 0.1, 0.1])) >= 1 / 3


def test_wootters_separable_oracle():
    assert wootters_separable(werner(1 / 3))
    assert not wootters_separable(werner(0.34))
