"""Wootters operator and the rank-2 modulus-of-separability computation.

For a two-qubit state ``rho`` (in the computational product basis, which is
real) the Wootters operator is

    W = ( sqrt(rho) F conj(rho) F sqrt(rho) )^(1/2),   F = sigma_y (x) sigma_y,

and ``rho`` is separable iff its eigenvalues satisfy ``w1 <= w2 + w3 + w4``.

The rest of the module handles states with spectrum (1/2, 1/2, 0, 0). Along the
segment ``t rho + (1 - t) tau`` the spectrum is (a, a, b, b) with
``a = (1 + t)/4`` and ``b = (1 - t)/4``. With P the rank-2 spectral projection
and ``Q = F conj(P) F``, the overlap ``xi = tr(PQ) - 1`` fixes the squared
Wootters eigenvalues ``{a^2, b^2, zeta_plus, zeta_minus}`` whenever the ranges
of P and Q share a vector, and the modulus is ``1 / sqrt(3 - tr(PQ))``.

The shared-vector assumption does not hold for a generic rank-2 projection:
the ranges of P and Q typically meet only in {0} while Q != 1 - P, and then the
closed form is not the modulus. :class:`Rank2Analysis` reports the dimension of
the intersection so callers can tell which situation they are in.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .constants import B_TOL, NEG_TOL
from .errors import DomainError, NotPSD, SpectrumMismatch, WrongDimension
from .linalg import eig_hermitian, hermitian_part, spin_flip, sqrt_psd
from .states import DensityMatrix

DISJOINT = "Disjoint"
EQUAL = "Equal"
GENERIC = "Generic"

RANK2_SPECTRUM = (0.5, 0.5, 0.0, 0.0)
RANK2_TOL = 1e-8
# cos^2 of a principal angle this close to 1 counts as a shared direction
INTERSECTION_TOL = 1e-8


def _matrix(rho) -> np.ndarray:
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)
    if m.shape != (4, 4):
        raise WrongDimension(f"Wootters construction needs a two-qubit state, got shape {m.shape}")
    return m


def _flipped_product(m: np.ndarray):
    s = sqrt_psd(m)
    prod = s @ spin_flip(m) @ s
    return 0.5 * (prod + prod.conj().T)


def wootters_operator(rho) -> np.ndarray:
    """The Hermitian PSD operator W for a two-qubit state."""
    return sqrt_psd(_flipped_product(_matrix(rho)))


@dataclass(frozen=True)
class WoottersResult:
    w: np.ndarray
    concurrence: float
    separable: bool

    @property
    def margin(self) -> float:
        """``w1 - w2 - w3 - w4``; nonpositive for separable states."""
        w = self.w
        return float(w[0] - w[1] - w[2] - w[3])


def wootters_check(rho, b_tol: float = B_TOL) -> WoottersResult:
    """Wootters eigenvalues, concurrence and the separability verdict."""
    sq = eig_hermitian(_flipped_product(_matrix(rho))).eigenvalues
    if sq[-1] < -NEG_TOL:
        raise NotPSD(f"W^2 has eigenvalue {sq[-1]:.3e}")
    w = np.sqrt(np.clip(sq, 0.0, None))
    gap = w[0] - w[1] - w[2] - w[3]
    return WoottersResult(w, float(max(0.0, gap)), bool(gap <= b_tol))


def concurrence(rho) -> float:
    return wootters_check(rho).concurrence


@dataclass(frozen=True)
class ZetaPair:
    plus: float
    minus: float


def _check_alpha_xi(alpha: float, xi: float) -> None:
    if not (0.25 - 1e-15 <= alpha <= 0.5 + 1e-15):
        raise DomainError(f"alpha = {alpha!r} outside [1/4, 1/2]")
    if not (-1e-15 <= xi <= 1.0 + 1e-15):
        raise DomainError(f"xi = {xi!r} outside [0, 1]")


def zeta_pm(alpha: float, xi: float) -> ZetaPair:
    """The two squared Wootters eigenvalues besides alpha^2 and beta^2.

    Domain: alpha in [1/4, 1/2], xi in [0, 1]. The endpoint xi = 1 is the
    limit in which P = Q and ``zeta_plus = alpha^2``.
    """
    _check_alpha_xi(alpha, xi)
    base = 0.5 * alpha * (1.0 - 2.0 * alpha) + xi / 8.0 * (4.0 * alpha - 1.0) ** 2
    rad = 2.0 * xi * alpha * (1.0 - 2.0 * alpha) + xi ** 2 * (2.0 * alpha - 0.5) ** 2
    spread = (4.0 * alpha - 1.0) / 4.0 * math.sqrt(max(rad, 0.0))
    return ZetaPair(base + spread, base - spread)


def w2_matrix(alpha: float, xi: float, eta) -> np.ndarray:
    """W^2 in the block form on C (+) C (+) C^2, with ``||eta||^2 = 1 - xi``."""
    _check_alpha_xi(alpha, xi)
    if xi >= 1.0:
        raise DomainError("block form needs xi < 1")
    eta = np.asarray(eta, dtype=np.complex128).ravel()
    if eta.shape != (2,) or abs(np.vdot(eta, eta).real - (1.0 - xi)) > 1e-9:
        raise DomainError("eta must be a 2-vector with squared norm 1 - xi")
    beta = 0.5 - alpha
    off = (alpha - beta) * math.sqrt(xi * alpha * beta)
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = alpha ** 2
    m[1, 1] = alpha * beta + alpha * (alpha - beta) * xi
    m[1, 2:] = off * eta.conj()
    m[2:, 1] = off * eta
    m[2:, 2:] = beta ** 2 * np.eye(2) + beta * (alpha - beta) * np.outer(eta, eta.conj())
    return m


@dataclass(frozen=True)
class ThresholdResult:
    raw_margin: float
    simplified_margin: float
    raw: bool
    simplified: bool

    @property
    def agree(self) -> bool:
        return self.raw == self.simplified


def separability_threshold(alpha: float, xi: float, b_tol: float = B_TOL) -> ThresholdResult:
    """Wootters criterion for spectrum (a, a, b, b) in both of its forms.

    raw:        a <= b + sqrt(zeta_plus) + sqrt(zeta_minus)
    simplified: a <= (1 + 1/sqrt(2 - xi)) / 4
    """
    z = zeta_pm(alpha, xi)
    beta = 0.5 - alpha
    raw = alpha - beta - math.sqrt(max(z.plus, 0.0)) - math.sqrt(max(z.minus, 0.0))
    simple = alpha - (1.0 + 1.0 / math.sqrt(2.0 - xi)) / 4.0
    return ThresholdResult(raw, simple, raw <= b_tol, simple <= b_tol)


@dataclass(frozen=True, eq=False)
class Rank2Analysis:
    P: np.ndarray
    Q: np.ndarray
    overlap: float
    case: str
    ell_closed: float
    principal_cos2: np.ndarray
    intersection_dim: int

    @property
    def xi(self) -> float:
        return self.overlap - 1.0

    @property
    def closed_form_exact(self) -> bool:
        """True when the configuration is one the closed form was derived for."""
        return self.case != GENERIC or self.intersection_dim >= 1

    def alpha(self, t: float) -> float:
        return (1.0 + t) / 4.0

    def beta(self, t: float) -> float:
        return (1.0 - t) / 4.0


def rank2_closed_form(rho, b_tol: float = B_TOL) -> Rank2Analysis:
    """Case analysis and closed-form modulus for a state with spectrum (1/2,1/2,0,0)."""
    m = hermitian_part(_matrix(rho))
    w, v = eig_hermitian(m)
    if np.max(np.abs(w - np.asarray(RANK2_SPECTRUM))) > RANK2_TOL:
        raise SpectrumMismatch(f"spectrum {w.tolist()} is not (1/2, 1/2, 0, 0)")
    vp = v[:, :2]
    p = vp @ vp.conj().T
    q = spin_flip(p)
    overlap = float(np.trace(p @ q).real)
    # nonzero eigenvalues of PQP are squared cosines of the principal angles
    cos2 = np.linalg.eigvalsh(vp.conj().T @ q @ vp)[::-1]
    dim = int(np.sum(cos2 > 1.0 - INTERSECTION_TOL))
    if overlap <= b_tol:
        case, ell = DISJOINT, 1.0
    elif overlap >= 2.0 - b_tol:
        case, ell = EQUAL, 1.0 / math.sqrt(max(3.0 - overlap, 1.0))
    else:
        case, ell = GENERIC, 1.0 / math.sqrt(3.0 - overlap)
    return Rank2Analysis(p, q, overlap, case, ell, cos2, dim)


def batch_wootters_margins(states) -> np.ndarray:
    return kernels.wootters_margins(states)
