"""Gap representation and the gap-weighted sufficient separability test.

For ``spec(rho) = (l_1 >= ... >= l_d)`` with eigenvectors ``v_m``, the gaps are
``mu_j = j (l_j - l_{j+1})`` and the averaged states are
``rhohat_j = (1/j) sum_{m<=j} |v_m><v_m|``. Then

    rho = sum_j mu_j rhohat_j + d l_d tau.

A state is certified separable when ``sum_j mu_j / p_j <= 1`` for lower bounds
``p_j`` on the moduli of separability of the ``rhohat_j``.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from . import kernels
from .constants import B_TOL, SQRT2
from .criteria import region_a_margin, theorem2_margin
from .errors import DegenerateTau, DomainError, LengthMismatch, WrongDimension
from .linalg import eig_hermitian
from .states import DensityMatrix, Spectrum, maximally_mixed, verdict_from_margin


@dataclass(frozen=True)
class PVector:
    """Lower bounds ``p_1..p_{d-1}`` on the moduli of the averaged states."""

    values: Tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(x) for x in self.values)
        if not vals:
            raise DomainError("empty p-vector")
        for j, p in enumerate(vals, 1):
            if not (0.0 < p <= 1.0):
                raise DomainError(f"p_{j} = {p!r} outside (0, 1]")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)


def two_qubit_lhat() -> PVector:
    """Minimal moduli of states with flat spectra e(1), e(2), e(3) for two qubits."""
    return PVector((1.0 / 3.0, 1.0 / SQRT2, 1.0))


def vidal_tarrach(d: int) -> PVector:
    """Universal floor 2/(2+d) for j < d-1 and 1 for the Gurvits-Barnum state."""
    if d < 3:
        raise LengthMismatch(f"need d >= 3, got {d}")
    return PVector((2.0 / (2.0 + d),) * (d - 2) + (1.0,))


def gaps(lam) -> np.ndarray:
    v = np.asarray(lam, dtype=float)
    j = np.arange(1, v.size)
    return j * (v[:-1] - v[1:])


def flat_spectrum(j: int, d: int) -> np.ndarray:
    """e(j): j entries equal to 1/j followed by zeros."""
    e = np.zeros(d)
    e[:j] = 1.0 / j
    return e


@dataclass(frozen=True, eq=False)
class GapRepresentation:
    spectrum: Spectrum
    gaps: np.ndarray
    averaged_states: List[DensityMatrix]
    residual_weight: float
    dims: Tuple[int, int]

    @property
    def d(self) -> int:
        return self.spectrum.d

    def averaged(self, j: int) -> DensityMatrix:
        """rhohat_j for 1 <= j <= d; rhohat_d is tau."""
        if j == self.d:
            return maximally_mixed(self.dims)
        return self.averaged_states[j - 1]

    def reconstruct(self) -> np.ndarray:
        d = self.d
        out = self.residual_weight * np.eye(d, dtype=np.complex128) / d
        for mu, rh in zip(self.gaps, self.averaged_states):
            out = out + mu * rh.matrix
        return out

    def omega(self) -> DensityMatrix:
        """The normalized gap mixture, defined only when rho is not tau."""
        w = 1.0 - self.residual_weight
        if self.spectrum.values[-1] >= 1.0 / self.d - B_TOL:
            raise DegenerateTau("state is maximally mixed; omega is undefined")
        m = sum(mu / w * rh.matrix for mu, rh in zip(self.gaps, self.averaged_states))
        m = 0.5 * (m + m.conj().T)
        return DensityMatrix(m / np.trace(m).real, self.dims)


def gap_decompose(rho: DensityMatrix) -> GapRepresentation:
    """Gap representation of ``rho``.

    ``rhohat_j`` is the projection onto the top-j eigenvectors divided by j. When
    ``l_j == l_{j+1}`` that projection depends on the eigenvector choice inside
    the cluster, but then ``mu_j`` is zero so the reconstruction is unaffected.
    """
    w, v = eig_hermitian(rho.matrix)
    spec = Spectrum.from_values(w)
    lam = spec.values
    d = lam.size
    averaged = []
    for j in range(1, d):
        vj = v[:, :j]
        proj = vj @ vj.conj().T / j
        averaged.append(DensityMatrix(0.5 * (proj + proj.conj().T), rho.dims))
    return GapRepresentation(
        spectrum=spec,
        gaps=gaps(lam),
        averaged_states=averaged,
        residual_weight=float(d * lam[-1]),
        dims=rho.dims,
    )


@dataclass(frozen=True)
class PropositionResult:
    sum: float
    separable_certified: bool


def _spectrum_of_input(x) -> Spectrum:
    if isinstance(x, Spectrum):
        return x
    if isinstance(x, DensityMatrix):
        return gap_decompose(x).spectrum
    return Spectrum.from_values(x)


def proposition_sum(lam, p) -> float:
    s = _spectrum_of_input(lam)
    pv = np.asarray(p, dtype=float)
    if pv.size != s.d - 1:
        raise LengthMismatch(f"p has {pv.size} entries, expected {s.d - 1}")
    return float(kernels.proposition_sums(s.values[None, :], pv)[0])


def proposition_check(state, p: PVector, b_tol: float = B_TOL) -> PropositionResult:
    """``sum_j mu_j / p_j`` and whether it certifies separability (``<= 1 + b_tol``)."""
    total = proposition_sum(state, p)
    return PropositionResult(total, total <= 1.0 + b_tol)


@dataclass(frozen=True)
class EquivalenceWitness:
    """Proposition sum next to the matching region margin.

    ``sum - 1`` is a positive multiple of ``margin`` (2 for theorem 1,
    d/2 for theorem 2), so the two verdicts can only disagree inside the
    boundary band.
    """

    sum: float
    margin: float
    proposition_verdict: str
    region_verdict: str

    @property
    def agree(self) -> bool:
        return {self.proposition_verdict, self.region_verdict} != {"in", "out"}


def theorem1_from_proposition(lam) -> EquivalenceWitness:
    s = _spectrum_of_input(lam)
    if s.d != 4:
        raise WrongDimension(f"theorem 1 needs d=4, got d={s.d}")
    total = proposition_sum(s, two_qubit_lhat())
    m = region_a_margin(s)
    return EquivalenceWitness(total, m, verdict_from_margin(total - 1.0), verdict_from_margin(m))


def theorem2_from_proposition(lam, d: Optional[int] = None) -> EquivalenceWitness:
    s = _spectrum_of_input(lam)
    if d is not None and d != s.d:
        raise LengthMismatch(f"spectrum has {s.d} entries, expected d={d}")
    total = proposition_sum(s, vidal_tarrach(s.d))
    m = theorem2_margin(s)
    return EquivalenceWitness(total, m, verdict_from_margin(total - 1.0), verdict_from_margin(m))
