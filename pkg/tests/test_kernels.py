import numpy as np
import pytest

from conftest import random_states
from sepspec import kernels
from sepspec.criteria import (gurvits_barnum_margin, region_a_margin, region_b_margin,
                              region_c_margin, theorem2_margin)
from sepspec.linalg import partial_transpose
from sepspec.wootters import wootters_check


@pytest.fixture(scope="module")
def states():
    return np.array([s.matrix for s in random_states(31, 64)])


@pytest.fixture(scope="module")
def spectra():
    rng = np.random.default_rng(5)
    return np.sort(rng.dirichlet(np.ones(4), size=200), axis=1)[:, ::-1].copy()


def test_margins_two_qubit(backend, spectra):
    out = backend.margins_two_qubit(spectra)
    fns = [region_a_margin, region_b_margin, region_c_margin, theorem2_margin, gurvits_barnum_margin]
    expect = np.array([[f(s) for f in fns] for s in spectra])
    np.testing.assert_allclose(out, expect, atol=1e-14)


def test_margins_general(backend):
    rng = np.random.default_rng(6)
    sp = np.sort(rng.dirichlet(np.ones(6), size=50), axis=1)[:, ::-1].copy()
    out = backend.margins_general(sp)
    expect = np.array([[theorem2_margin(s), gurvits_barnum_margin(s)] for s in sp])
    np.testing.assert_allclose(out, expect, atol=1e-14)


def test_partial_transpose(backend, states):
    out = backend.partial_transpose_b(states, 2, 2)
    for m, pt in zip(states, out):
        np.testing.assert_array_equal(pt, partial_transpose(m, (2, 2), "B"))


def test_ppt_min(backend, states):
    out = backend.ppt_min_eigenvalues(states, 2, 2)
    expect = [np.linalg.eigvalsh(partial_transpose(m, (2, 2), "B")).min() for m in states]
    np.testing.assert_allclose(out, expect, atol=1e-12)


def test_wootters(backend, states):
    out = backend.wootters_eigenvalues(states)
    expect = np.array([wootters_check(m).w for m in states])
    np.testing.assert_allclose(out, expect, atol=1e-7)


def test_bisection(backend, states):
    for oracle in (0, 1):
        lo, hi, it = backend.bisect_modulus(states, oracle, 1 / 3, 1e-9, 60)
        assert np.all(hi - lo <= 1e-9) and np.all(lo >= 1 / 3)


def test_backends_agree(states):
    if kernels.numba_backend is None:
        pytest.skip("numba disabled")
    a = kernels.numpy_backend.bisect_modulus(states, 0, 1 / 3, 1e-9, 60)
    b = kernels.numba_backend.bisect_modulus(states, 0, 1 / 3, 1e-9, 60)
    np.testing.assert_allclose(a[0], b[0], atol=1e-9)


def test_single_matrix_wrapper():
    m = np.eye(4) / 4
    assert kernels.ppt_min_eigenvalues(m).shape == (1,)
    lo, hi, _ = kernels.bisect_modulus(m)
    assert lo[0] == hi[0] == 1.0
