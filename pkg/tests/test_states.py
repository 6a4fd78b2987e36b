import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepspec.errors import (DimensionMismatch, MalformedInput, NotHermitian, NotPSD,
                            NotUnitTrace, ValidationFailure)
from sepspec.io import parse_spectrum, parse_state, write_report, write_spectrum, write_state
from sepspec.sampling import haar_unitary, random_state, state_with_spectrum
from sepspec.states import (CriteriaReport, RegionVerdict, Spectrum, make_density,
                            maximally_mixed, pure_state, purity, spectrum_of, verdict_from_margin)
from sepspec.criteria import evaluate_all

S2 = math.sqrt(2)
PHI = np.array([1, 0, 0, 1]) / np.sqrt(2)


def test_make_density_tau():
    rho = make_density(np.eye(4) / 4, (2, 2))
    np.testing.assert_allclose(spectrum_of(rho).values, [0.25] * 4)


def test_make_density_rejects():
    with pytest.raises(NotPSD):
        make_density(np.diag([0.6, 0.5, 0, -0.1]), (2, 2))
    with pytest.raises(NotUnitTrace):
        make_density(np.eye(4) / 2, (2, 2))
    with pytest.raises(NotHermitian):
        make_density(np.array([[0.5, 0.3], [0.0, 0.5]]))
    with pytest.raises(DimensionMismatch):
        make_density(np.eye(4) / 4, (2, 3))


def test_make_density_renormalizes_small_drift():
    rho = make_density(np.eye(4) / 4 * (1 + 5e-7), (2, 2))
    assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-15)


def test_pure_projector():
    rho = make_density(np.outer(PHI, PHI), (2, 2))
    np.testing.assert_allclose(spectrum_of(rho).values, [1, 0, 0, 0], atol=1e-15)
    assert purity(rho) == pytest.approx(1.0)


def test_spectrum_round_trip_haar(rng):
    rho = state_with_spectrum([0.5, 1 / 6, 1 / 6, 1 / 6], (2, 2), rng)
    np.testing.assert_allclose(spectrum_of(rho).values, [0.5, 1 / 6, 1 / 6, 1 / 6], atol=1e-12)


def test_maximally_mixed():
    np.testing.assert_array_equal(maximally_mixed((2, 2)).matrix, np.eye(4) / 4)
    np.testing.assert_array_equal(maximally_mixed((2, 3)).matrix, np.eye(6) / 6)
    assert maximally_mixed((1, 1)).matrix.shape == (1, 1)
    assert maximally_mixed((1, 1)).matrix[0, 0] == 1


def test_purity_examples():
    lam = Spectrum.from_values([(2 + S2) / 8] * 2 + [(2 - S2) / 8] * 2)
    assert purity(lam) == pytest.approx(3 / 8, abs=1e-15)
    assert purity(maximally_mixed((2, 2))) == pytest.approx(0.25)


def test_spectrum_clamps_and_sorts():
    s = Spectrum.from_values([0.2, -5e-9, 0.8])
    assert list(s) == [0.8, 0.2, 0.0]
    with pytest.raises(NotPSD):
        Spectrum.from_values([1.1, -0.1])


def test_unitary_invariance(rng):
    for _ in range(50):
        rho = random_state((2, 2), rng)
        u = haar_unitary(4, rng)
        rot = make_density(u @ rho.matrix @ u.conj().T, (2, 2))
        np.testing.assert_allclose(spectrum_of(rot).values, spectrum_of(rho).values, atol=1e-10)
        assert purity(rho) == pytest.approx(purity(spectrum_of(rho)), abs=1e-10)


def test_parse_state_json_text():
    doc = {"dims": [2, 2], "matrix": [[[0.25 if i == j else 0.0, 0.0] for j in range(4)] for i in range(4)]}
    rho = parse_state(json.dumps(doc))
    np.testing.assert_array_equal(rho.matrix, maximally_mixed((2, 2)).matrix)


def test_parse_state_errors(tmp_path):
    with pytest.raises(MalformedInput, match="line 1"):
        parse_state('{"dims": [2, 2], "matrix": [[')
    with pytest.raises(MalformedInput, match=r"matrix\[1\]\[0\]"):
        parse_state('{"dims": [1, 2], "matrix": [[[1, 0], [0, 0]], [1, [0, 0]]]}')
    with pytest.raises(MalformedInput, match="dims"):
        parse_state('{"dims": [2], "matrix": []}')
    with pytest.raises(ValidationFailure, match="NotPSD"):
        parse_state('{"dims": [1, 2], "matrix": [[[1.1, 0], [0, 0]], [[0, 0], [-0.1, 0]]]}')


def test_state_file_round_trip(tmp_path, rng):
    for _ in range(20):
        rho = random_state((2, 3), rng)
        path = tmp_path / "s.json"
        write_state(rho, path)
        back = parse_state(path)
        assert back.dims == (2, 3)
        assert np.max(np.abs(back.matrix - rho.matrix)) <= 1e-12


def test_parse_spectrum_csv():
    s = parse_spectrum("0.5,0.166666667,0.166666667,0.166666667")
    np.testing.assert_allclose(s.values, [0.5, 1 / 6, 1 / 6, 1 / 6], atol=1e-9)
    with pytest.raises(MalformedInput, match="field 2"):
        parse_spectrum("0.5,abc,0.5")
    with pytest.raises(MalformedInput):
        parse_spectrum("0.5\n0.5")


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(0.0, 1.0), min_size=2, max_size=9).filter(lambda v: sum(v) > 0.1))
def test_spectrum_write_parse_round_trip(v):
    s = Spectrum.from_values(np.array(v) / sum(v))
    back = parse_spectrum(write_spectrum(s))
    np.testing.assert_allclose(back.values, s.values, atol=1e-12, rtol=0)


def test_spectrum_file(tmp_path):
    p = tmp_path / "s.csv"
    p.write_text("0.1,0.2,0.3,0.4\n")
    assert list(parse_spectrum(p)) == pytest.approx([0.4, 0.3, 0.2, 0.1])
    assert list(parse_spectrum(str(p))) == pytest.approx([0.4, 0.3, 0.2, 0.1])


def test_report_json_shape():
    text = write_report(evaluate_all([0.25] * 4))
    doc = json.loads(text)
    assert set(doc) == {"dims", "spectrum", "purity", "criteria"}
    assert doc["criteria"][0] == {"name": "theorem1", "verdict": "in", "margin": -0.5}


@pytest.mark.parametrize("margin,verdict", [(-0.5, "in"), (2e-9, "out"), (1e-10, "boundary"),
                                            (-1e-9, "boundary"), (0.0, "boundary")])
def test_verdict_band(margin, verdict):
    assert verdict_from_margin(margin) == verdict
    assert RegionVerdict.from_margin("x", margin).verdict == verdict


def test_report_margin_sign_consistency(rng):
    for _ in range(200):
        lam = np.sort(rng.dirichlet(np.ones(4)))[::-1]
        rep = evaluate_all(lam)
        assert isinstance(rep, CriteriaReport)
        for c in rep.criteria:
            assert (c.margin < -1e-9) == (c.verdict == "in")
            assert (c.margin > 1e-9) == (c.verdict == "out")
