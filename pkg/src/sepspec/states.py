"""Density matrices, spectra and criteria reports."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .constants import B_TOL, STATE_NEG_TOL, TRACE_RENORM_TOL
from .errors import DimensionMismatch, NotPSD, NotUnitTrace, SepspecError
from .linalg import as_matrix, eig_hermitian, hermitian_part


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A bipartite state. Build validated instances with :func:`make_density`."""

    matrix: np.ndarray
    dims: Tuple[int, int]

    def __post_init__(self):
        m = _frozen(np.asarray(self.matrix, dtype=np.complex128))
        dims = (int(self.dims[0]), int(self.dims[1]))
        if m.ndim != 2 or m.shape != (dims[0] * dims[1],) * 2:
            raise DimensionMismatch(f"matrix shape {m.shape} does not match dims {dims}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", dims)

    @property
    def d(self) -> int:
        return self.dims[0] * self.dims[1]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Nonincreasing probability vector. Build with :meth:`Spectrum.from_values`."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(np.asarray(self.values, dtype=float)))

    @classmethod
    def from_values(cls, values: Sequence[float], neg_tol: float = STATE_NEG_TOL,
                    renorm_tol: float = TRACE_RENORM_TOL) -> "Spectrum":
        """Sort, clamp small negatives and renormalize.

        Raises NotPSD for entries below ``-neg_tol`` and NotUnitTrace when the
        sum is off by more than ``renorm_tol``.
        """
        v = np.sort(np.asarray(values, dtype=float).ravel())[::-1]
        if v.size == 0:
            raise DimensionMismatch("empty spectrum")
        if not np.all(np.isfinite(v)):
            raise SepspecError("spectrum contains non-finite values")
        if v[-1] < -neg_tol:
            raise NotPSD(f"spectrum entry {v[-1]:.3e} below -{neg_tol:g}")
        v = np.clip(v, 0.0, None)
        s = v.sum()
        if abs(s - 1.0) > renorm_tol:
            raise NotUnitTrace(f"spectrum sums to {s!r}")
        return cls(v / s)

    @property
    def d(self) -> int:
        return self.values.shape[0]

    def __len__(self):
        return self.d

    def __getitem__(self, i):
        return float(self.values[i])

    def __iter__(self):
        return iter(self.values.tolist())

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)


def make_density(matrix, dims: Optional[Tuple[int, int]] = None) -> DensityMatrix:
    """Validate ``matrix`` as a density matrix on ``C^dA (x) C^dB``.

    The matrix is symmetrized and, if its trace is within 1e-6 of one,
    renormalized. ``dims`` defaults to ``(d, 1)``.
    """
    a = as_matrix(matrix)
    if dims is None:
        dims = (a.shape[0], 1)
    d_a, d_b = (int(x) for x in dims)
    if d_a < 1 or d_b < 1 or a.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatch(f"matrix shape {a.shape} does not match dims {tuple(dims)}")
    h = hermitian_part(a)
    tr = np.trace(h).real
    if abs(tr - 1.0) > TRACE_RENORM_TOL:
        raise NotUnitTrace(f"trace {tr!r} deviates from 1 by more than {TRACE_RENORM_TOL:g}")
    h = h / tr
    lam = np.linalg.eigvalsh(h)[0]
    if lam < -STATE_NEG_TOL:
        raise NotPSD(f"minimum eigenvalue {lam:.3e} below -{STATE_NEG_TOL:g}")
    return DensityMatrix(h, (d_a, d_b))


def spectrum_of(rho: DensityMatrix) -> Spectrum:
    w = eig_hermitian(rho.matrix).eigenvalues
    return Spectrum.from_values(w)


def maximally_mixed(dims: Tuple[int, int]) -> DensityMatrix:
    d_a, d_b = (int(x) for x in dims)
    if d_a < 1 or d_b < 1:
        raise DimensionMismatch(f"invalid dims {dims}")
    d = d_a * d_b
    return DensityMatrix(np.eye(d, dtype=np.complex128) / d, (d_a, d_b))


def pure_state(vector, dims: Tuple[int, int]) -> DensityMatrix:
    """Projector onto the normalized ``vector``."""
    v = np.asarray(vector, dtype=np.complex128).ravel()
    v = v / np.linalg.norm(v)
    return make_density(np.outer(v, v.conj()), dims)


def purity(state) -> float:
    """tr(rho^2) for a DensityMatrix, or sum of squares for a Spectrum."""
    if isinstance(state, Spectrum):
        return float(np.dot(state.values, state.values))
    m = state.matrix
    # tr(M M) = sum |M_ij|^2 for Hermitian M
    return float(np.sum(np.abs(m) ** 2))


@dataclass(frozen=True)
class RegionVerdict:
    """Membership of a spectrum in a region normalized to ``margin <= 0``.

    ``verdict`` is "in", "out" or "boundary"; records that do not apply to the
    state's dimension carry ``verdict="not_applicable"`` and ``margin=None``.
    """

    name: str
    margin: Optional[float]
    verdict: str

    @classmethod
    def from_margin(cls, name: str, margin: float, b_tol: float = B_TOL) -> "RegionVerdict":
        return cls(name, float(margin), verdict_from_margin(margin, b_tol))

    @classmethod
    def not_applicable(cls, name: str) -> "RegionVerdict":
        return cls(name, None, "not_applicable")

    @property
    def inside(self) -> bool:
        """True for "in" or "boundary" (membership of the closed region)."""
        return self.verdict in ("in", "boundary")

    def to_dict(self) -> dict:
        return {"name": self.name, "verdict": self.verdict, "margin": self.margin}


def verdict_from_margin(margin: float, b_tol: float = B_TOL) -> str:
    if margin < -b_tol:
        return "in"
    if margin > b_tol:
        return "out"
    return "boundary"


@dataclass(frozen=True)
class CriteriaReport:
    dims: Optional[Tuple[int, int]]
    spectrum: Tuple[float, ...]
    purity: float
    criteria: List[RegionVerdict] = field(default_factory=list)

    def get(self, name: str) -> RegionVerdict:
        for c in self.criteria:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims) if self.dims is not None else None,
            "spectrum": [float(x) for x in self.spectrum],
            "purity": float(self.purity),
            "criteria": [c.to_dict() for c in self.criteria],
        }
