"""Modulus of separability.

``ell(rho) = sup{t : t rho + (1 - t) tau is separable}``. Separability along the
segment is monotone in t, so for two qubits ``ell`` is found by bisection with an
exact oracle (PPT or Wootters). No exact oracle is available for d != 4; there
only lower bounds are reported.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .constants import B_TOL, SQRT2
from .errors import DegenerateTau, DomainError, OracleUnavailable, SepspecError
from .gap import gap_decompose
from .states import DensityMatrix, Spectrum, maximally_mixed, purity, spectrum_of
from .wootters import RANK2_SPECTRUM, RANK2_TOL, rank2_closed_form

ORACLES = ("ppt", "wootters")
DEFAULT_TOL = 1e-8
MAX_ITER = 60
TAU_TOL = 1e-12


@dataclass(frozen=True)
class ModulusResult:
    ell: float
    method: str
    oracle: Optional[str]
    iterations: int
    bracket_width: float

    @property
    def random_robustness(self) -> float:
        return 1.0 / self.ell - 1.0

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "method": self.method,
            "oracle": self.oracle,
            "iterations": self.iterations,
            "bracket_width": self.bracket_width,
            "random_robustness": self.random_robustness,
        }


def vidal_tarrach_floor(d: int) -> float:
    if d < 2:
        raise DomainError(f"need d >= 2, got {d}")
    return 2.0 / (2.0 + d)


def lhat_constants():
    """Minimal moduli over two-qubit states with flat spectra of rank 1, 2, 3."""
    return (1.0 / 3.0, 1.0 / SQRT2, 1.0)


def segment_state(rho: DensityMatrix, t: float) -> DensityMatrix:
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"t = {t!r} outside [0, 1]")
    tau = maximally_mixed(rho.dims)
    return DensityMatrix(t * rho.matrix + (1.0 - t) * tau.matrix, rho.dims)


def ppt_separable(rho: DensityMatrix) -> bool:
    _require_two_qubit(rho)
    return bool(kernels.ppt_min_eigenvalues(rho.matrix)[0] >= -kernels.PPT_TOL)


def wootters_separable(rho: DensityMatrix) -> bool:
    _require_two_qubit(rho)
    return bool(kernels.wootters_margins(rho.matrix)[0] <= kernels.WOOTTERS_TOL)


def oracle_fn(name: str):
    try:
        return {"ppt": ppt_separable, "wootters": wootters_separable}[name]
    except KeyError:
        raise SepspecError(f"unknown oracle {name!r}; choose from {ORACLES}") from None


def _require_two_qubit(rho: DensityMatrix) -> None:
    if rho.d != 4:
        raise OracleUnavailable(f"no exact separability oracle for d={rho.d}")


def is_tau(rho: DensityMatrix, tol: float = TAU_TOL) -> bool:
    return float(np.max(np.abs(rho.matrix - np.eye(rho.d) / rho.d))) <= tol


def modulus_bisect(rho: DensityMatrix, oracle: str = "ppt", tol: float = DEFAULT_TOL,
                   max_iter: int = MAX_ITER) -> ModulusResult:
    """Bisect the segment towards tau on the bracket [1/3, 1].

    Everything below the universal floor 1/3 is separable, so the search starts
    there. The returned ``ell`` is the midpoint of the final bracket. By
    convention ``ell(tau) = 1``.
    """
    _require_two_qubit(rho)
    if oracle not in ORACLES:
        raise SepspecError(f"unknown oracle {oracle!r}")
    if is_tau(rho):
        return ModulusResult(1.0, "bisection", oracle, 0, 0.0)
    lower, upper, iters = kernels.bisect_modulus(rho.matrix, oracle, vidal_tarrach_floor(4),
                                                 tol, max_iter)
    lo, hi = float(lower[0]), float(upper[0])
    return ModulusResult(0.5 * (lo + hi), "bisection", oracle, int(iters[0]), hi - lo)


def modulus_bisect_batch(states, oracle: str = "ppt", tol: float = DEFAULT_TOL,
                         max_iter: int = MAX_ITER) -> np.ndarray:
    """Bisection moduli for an (n, 4, 4) stack of two-qubit states."""
    lower, upper, _ = kernels.bisect_modulus(states, oracle, vidal_tarrach_floor(4), tol, max_iter)
    return 0.5 * (lower + upper)


def spectral_lower_bound(lam) -> float:
    """Largest t for which the segment state is certified by theorem 2 or Gurvits-Barnum.

    Both conditions only see the spectrum ``t*l + (1-t)/d`` of the segment
    state; the result is at least the universal floor.
    """
    s = lam if isinstance(lam, Spectrum) else Spectrum.from_values(lam)
    d = s.d
    v = s.values
    best = vidal_tarrach_floor(d)
    # theorem 2: (d+2)/d (1-t) + t (3 l_d + (d-1) l_{d-1}) >= 1
    k = 3.0 * v[-1] + (d - 1) * v[-2]
    c = (d + 2.0) / d
    if k >= 1.0:
        return 1.0
    best = max(best, min(1.0, (c - 1.0) / (c - k)))
    # Gurvits-Barnum: 1/d + t^2 (tr rho^2 - 1/d) <= 1/(d-1)
    excess = purity(s) - 1.0 / d
    if excess <= 0.0:
        return 1.0
    best = max(best, min(1.0, math.sqrt((1.0 / (d - 1) - 1.0 / d) / excess)))
    return best


def modulus(rho: DensityMatrix, method: str = "auto", oracle: str = "ppt",
            tol: float = DEFAULT_TOL) -> ModulusResult:
    """Dispatch between bisection, the rank-2 closed form and bound-only.

    ``auto`` uses the closed form only for (1/2,1/2,0,0) states whose
    configuration it is exact for, bisection for other two-qubit states, and
    the spectral lower bound for d != 4.
    """
    if method not in ("auto", "bisect", "closed"):
        raise SepspecError(f"unknown method {method!r}")
    if rho.d != 4:
        if method != "auto":
            raise OracleUnavailable(f"no exact separability oracle for d={rho.d}")
        return ModulusResult(spectral_lower_bound(spectrum_of(rho)), "bound_only", None, 0, 0.0)
    if method == "closed":
        return ModulusResult(rank2_closed_form(rho).ell_closed, "closed_form", None, 0, 0.0)
    if method == "auto":
        lam = spectrum_of(rho).values
        if np.max(np.abs(lam - np.asarray(RANK2_SPECTRUM))) <= RANK2_TOL:
            analysis = rank2_closed_form(rho)
            if analysis.closed_form_exact:
                return ModulusResult(analysis.ell_closed, "closed_form", None, 0, 0.0)
    return modulus_bisect(rho, oracle, tol)


@dataclass(frozen=True)
class Criterion2Result:
    weight: float
    ell_omega: float
    separable: bool


def criterion2_check(rho: DensityMatrix, oracle: str = "ppt",
                     tol: float = DEFAULT_TOL) -> Criterion2Result:
    """Decide separability through ``1 - d l_d <= ell(omega)``."""
    _require_two_qubit(rho)
    rep = gap_decompose(rho)
    if rep.spectrum.values[-1] >= 1.0 / rep.d - B_TOL:
        raise DegenerateTau("state is maximally mixed")
    weight = 1.0 - rep.residual_weight
    ell = modulus_bisect(rep.omega(), oracle, tol).ell
    return Criterion2Result(weight, ell, weight <= ell)
