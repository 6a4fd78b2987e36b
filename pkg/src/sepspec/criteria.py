"""Spectral sufficient conditions for separability.

Every region is written as ``margin <= 0`` on the sorted spectrum:

========  ==============================================  ========
name      margin                                          d
========  ==============================================  ========
theorem1  3 l1 + sqrt2 l2 + (3 - sqrt2) l3 - 2            4 only
purity    l1^2 + l2^2 + l3^2 + l4^2 - 1/3                 4 only
region_c  l1 - l3 - 2 sqrt(l2 l4)                         4 only
theorem2  1 - 3 l_d - (d - 1) l_{d-1}                     any
gurvits   sum l_i^2 - 1/(d - 1)                           any
========  ==============================================  ========
"""

import math
from typing import Optional, Tuple

import numpy as np

from . import kernels
from .constants import B_TOL, SQRT2
from .errors import LengthMismatch, WrongDimension
from .states import CriteriaReport, RegionVerdict, Spectrum, purity

REGION_A = "theorem1"
REGION_B = "purity"
REGION_C = "region_c"
THEOREM2 = "theorem2"
GURVITS_BARNUM = "gurvits_barnum"

TWO_QUBIT_REGIONS = (REGION_A, REGION_B, REGION_C)
ALL_REGIONS = (REGION_A, REGION_B, REGION_C, THEOREM2, GURVITS_BARNUM)

# Vertices of the polytope region A (three on the boundary, plus tau).
REGION_A_VERTICES = (
    (0.5, 1 / 6, 1 / 6, 1 / 6),
    ((2 + SQRT2) / 8, (2 + SQRT2) / 8, (2 - SQRT2) / 8, (2 - SQRT2) / 8),
    (1 / 3, 1 / 3, 1 / 3, 0.0),
    (0.25, 0.25, 0.25, 0.25),
)


def _as_spectrum(lam) -> Spectrum:
    return lam if isinstance(lam, Spectrum) else Spectrum.from_values(lam)


def _two_qubit(lam) -> np.ndarray:
    s = _as_spectrum(lam)
    if s.d != 4:
        raise WrongDimension(f"region is defined for two qubits only (d=4), got d={s.d}")
    return s.values


def region_a_margin(lam) -> float:
    l1, l2, l3, _ = _two_qubit(lam)
    return 3.0 * l1 + SQRT2 * l2 + (3.0 - SQRT2) * l3 - 2.0


def region_b_margin(lam) -> float:
    v = _two_qubit(lam)
    return float(np.dot(v, v)) - 1.0 / 3.0


def region_c_margin(lam) -> float:
    l1, l2, l3, l4 = _two_qubit(lam)
    return l1 - l3 - 2.0 * math.sqrt(max(l2 * l4, 0.0))


def _check_d(s: Spectrum, d: Optional[int]) -> int:
    if d is not None and d != s.d:
        raise LengthMismatch(f"spectrum has {s.d} entries, expected d={d}")
    if s.d < 2:
        raise LengthMismatch("need d >= 2")
    return s.d


def theorem2_margin(lam, d: Optional[int] = None) -> float:
    s = _as_spectrum(lam)
    d = _check_d(s, d)
    v = s.values
    return 1.0 - 3.0 * v[d - 1] - (d - 1) * v[d - 2]


def gurvits_barnum_margin(lam, d: Optional[int] = None) -> float:
    s = _as_spectrum(lam)
    d = _check_d(s, d)
    return purity(s) - 1.0 / (d - 1)


def region_a(lam, d: int = 4) -> RegionVerdict:
    """Theorem 1 region; ``in`` means every state with this spectrum is separable."""
    if d != 4:
        raise WrongDimension(f"theorem 1 needs d=4, got d={d}")
    return RegionVerdict.from_margin(REGION_A, region_a_margin(lam))


def region_b(lam) -> RegionVerdict:
    return RegionVerdict.from_margin(REGION_B, region_b_margin(lam))


def region_c(lam) -> RegionVerdict:
    return RegionVerdict.from_margin(REGION_C, region_c_margin(lam))


def theorem2(lam, d: Optional[int] = None) -> RegionVerdict:
    return RegionVerdict.from_margin(THEOREM2, theorem2_margin(lam, d))


def gurvits_barnum(lam, d: Optional[int] = None) -> RegionVerdict:
    return RegionVerdict.from_margin(GURVITS_BARNUM, gurvits_barnum_margin(lam, d))


def margin(name: str, lam, d: Optional[int] = None) -> float:
    fn = {
        REGION_A: region_a_margin,
        REGION_B: region_b_margin,
        REGION_C: region_c_margin,
    }.get(name)
    if fn is not None:
        return fn(lam)
    if name == THEOREM2:
        return theorem2_margin(lam, d)
    if name == GURVITS_BARNUM:
        return gurvits_barnum_margin(lam, d)
    raise KeyError(name)


def evaluate_all(lam, d: Optional[int] = None,
                 dims: Optional[Tuple[int, int]] = None) -> CriteriaReport:
    """Run every region; two-qubit-only regions become not_applicable for d != 4."""
    s = _as_spectrum(lam)
    d = _check_d(s, d)
    if dims is None and d == 4:
        dims = (2, 2)
    records = []
    if d == 4:
        records += [region_a(s), region_b(s), region_c(s)]
    else:
        records += [RegionVerdict.not_applicable(n) for n in TWO_QUBIT_REGIONS]
    records += [theorem2(s), gurvits_barnum(s)]
    return CriteriaReport(dims=dims, spectrum=tuple(s), purity=purity(s), criteria=records)


def batch_margins(spectra) -> dict:
    """Margins of every applicable region for an (n, d) array of sorted spectra."""
    s = np.atleast_2d(np.asarray(spectra, dtype=float))
    if s.shape[1] == 4:
        m = kernels.margins_two_qubit(s)
        return dict(zip(ALL_REGIONS, m.T))
    m = kernels.margins_general(s)
    return {THEOREM2: m[:, 0], GURVITS_BARNUM: m[:, 1]}


def batch_inside(spectra, b_tol: float = B_TOL) -> dict:
    """Closed-region membership (``margin <= b_tol``) for each applicable region."""
    return {k: v <= b_tol for k, v in batch_margins(spectra).items()}
