import itertools
import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from sepspec import criteria
from sepspec.criteria import (REGION_A_VERTICES, batch_margins, evaluate_all, gurvits_barnum,
                              region_a, region_a_margin, region_b, region_c, region_c_margin,
                              theorem2)
from sepspec.errors import LengthMismatch, WrongDimension
from sepspec.sampling import rng_for, state_with_spectrum

S2 = math.sqrt(2)
MIX = (0.25 + S2 / 6, 0.25, 0.25 - S2 / 12, 0.25 - S2 / 12)
SQ = ((2 + S2) / 8, (2 + S2) / 8, (2 - S2) / 8, (2 - S2) / 8)

r2 = sp.sqrt(2)
EXACT_VERTICES = [
    (sp.Rational(1, 2), sp.Rational(1, 6), sp.Rational(1, 6), sp.Rational(1, 6)),
    ((2 + r2) / 8, (2 + r2) / 8, (2 - r2) / 8, (2 - r2) / 8),
    (sp.Rational(1, 3),) * 3 + (sp.Integer(0),),
    (sp.Rational(1, 4),) * 4,
]


def exact_margin_a(l):
    return sp.nsimplify(sp.simplify(3 * l[0] + r2 * l[1] + (3 - r2) * l[2] - 2))


def spectra_strategy(d=4):
    return st.lists(st.floats(0.001, 1.0), min_size=d, max_size=d).map(
        lambda v: np.sort(np.array(v) / sum(v))[::-1])


def test_exact_vertex_margins():
    exact = [exact_margin_a(v) for v in EXACT_VERTICES]
    assert exact == [0, 0, 0, sp.Rational(-1, 2)]
    for v, e in zip(REGION_A_VERTICES, exact):
        assert region_a_margin(v) == pytest.approx(float(e), abs=1e-12)


def test_region_a_examples():
    assert region_a((0.5, 1 / 6, 1 / 6, 1 / 6)).inside
    assert region_a(SQ).verdict == "boundary"
    r = region_a((1, 0, 0, 0))
    assert r.verdict == "out" and r.margin == pytest.approx(1.0)
    r = region_a(MIX)
    expected = float(sp.Rational(5, 3) + r2 / 4 - 2)
    assert r.margin == pytest.approx(expected, abs=1e-12)
    assert r.margin == pytest.approx(0.0202, abs=1e-4)
    assert r.verdict == "out"


def test_region_b_examples():
    assert region_b([0.25] * 4).margin == pytest.approx(0.25 - 1 / 3)
    assert region_b(SQ).margin == pytest.approx(3 / 8 - 1 / 3, abs=1e-15)
    assert region_b(SQ).verdict == "out"
    assert region_b(MIX).verdict == "boundary"
    exact = sum(x ** 2 for x in (sp.Rational(1, 4) + r2 / 6, sp.Rational(1, 4),
                                  sp.Rational(1, 4) - r2 / 12, sp.Rational(1, 4) - r2 / 12))
    assert sp.simplify(exact - sp.Rational(1, 3)) == 0


def test_region_c_examples():
    assert region_c([0.25] * 4).margin == pytest.approx(-0.5)
    assert region_c((0.5, 1 / 6, 1 / 6, 1 / 6)).margin == pytest.approx(0.0, abs=1e-15)
    assert region_c((1, 0, 0, 0)).verdict == "out"


def test_theorem2_examples():
    assert theorem2([0.25] * 4, 4).margin == pytest.approx(-0.5)
    assert theorem2((1, 0, 0, 0), 4).margin == pytest.approx(1.0)
    assert theorem2((0.3, 0.25, 0.25, 0.2), 4).margin == pytest.approx(-0.35)
    with pytest.raises(LengthMismatch):
        theorem2([0.25] * 4, 6)


def test_theorem2_spectrum_passes_ppt():
    from sepspec.kernels import ppt_min_eigenvalues
    states = [state_with_spectrum((0.3, 0.25, 0.25, 0.2), (2, 2), rng_for(5, i)).matrix
              for i in range(500)]
    assert ppt_min_eigenvalues(np.array(states)).min() >= -1e-12


def test_gurvits_barnum_examples():
    assert gurvits_barnum((1 / 3, 1 / 3, 1 / 3, 0)).verdict == "boundary"
    assert gurvits_barnum([0.25] * 4).margin == pytest.approx(0.25 - 1 / 3)
    assert gurvits_barnum((1, 0, 0, 0)).margin == pytest.approx(2 / 3)


def test_two_qubit_gate():
    with pytest.raises(WrongDimension):
        region_a([1 / 6] * 6)
    with pytest.raises(WrongDimension):
        region_a([0.25] * 4, d=6)
    rep = evaluate_all([1 / 6] * 6)
    verdicts = {c.name: c.verdict for c in rep.criteria}
    assert verdicts["theorem1"] == verdicts["purity"] == verdicts["region_c"] == "not_applicable"
    assert verdicts["theorem2"] == "in"


def test_evaluate_all_tau():
    rep = evaluate_all([0.25] * 4)
    assert rep.dims == (2, 2)
    assert all(c.verdict == "in" for c in rep.criteria)
    assert rep.get("theorem1").margin == pytest.approx(-0.5)


def test_footnote_identity_symbolic():
    l1, l2, l3 = sp.symbols("l1 l2 l3")
    l4 = 1 - l1 - l2 - l3
    on_sphere = l1 ** 2 + l2 ** 2 + l3 ** 2 + l4 ** 2 - sp.Rational(1, 3)
    lhs = (l1 - l3) ** 2 - 4 * l2 * l4
    rhs = -3 * (l1 + l3 - sp.Rational(2, 3)) ** 2
    # lhs - rhs is a multiple of the sphere equation
    q = sp.simplify((lhs - rhs) / on_sphere)
    assert q.is_number


@settings(max_examples=200, deadline=None)
@given(spectra_strategy())
def test_permutation_safety(lam):
    for perm in itertools.islice(itertools.permutations(lam), 0, 24, 5):
        assert evaluate_all(perm).to_dict() == evaluate_all(lam).to_dict()


@settings(max_examples=200, deadline=None)
@given(spectra_strategy(), spectra_strategy(), st.floats(0, 1))
def test_region_a_margin_affine(a, b, s):
    mixed = s * a + (1 - s) * b
    assert region_a_margin(mixed) == pytest.approx(
        s * region_a_margin(a) + (1 - s) * region_a_margin(b), abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(spectra_strategy(), spectra_strategy(), st.floats(0, 1))
def test_region_c_convex(a, b, s):
    if region_c_margin(a) <= 0 and region_c_margin(b) <= 0:
        assert region_c_margin(s * a + (1 - s) * b) <= 1e-12


def test_batch_margins_match_scalar(rng):
    spectra = np.sort(rng.dirichlet(np.ones(4), size=300), axis=1)[:, ::-1]
    m = batch_margins(spectra)
    for k in (0, 17, 299):
        for name in criteria.ALL_REGIONS:
            assert m[name][k] == pytest.approx(criteria.margin(name, spectra[k]), abs=1e-14)
    s6 = np.sort(rng.dirichlet(np.ones(6), size=20), axis=1)[:, ::-1]
    m6 = batch_margins(s6)
    assert set(m6) == {"theorem2", "gurvits_barnum"}
    assert m6["theorem2"][3] == pytest.approx(criteria.theorem2_margin(s6[3]), abs=1e-14)
