"""Dense complex-matrix primitives.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. Nothing
here is sparse; the dimensions of interest are tiny (d <= 16 or so).
"""

from typing import NamedTuple, Tuple

import numpy as np

from .constants import H_TOL, NEG_TOL
from .errors import DimensionMismatch, NonSquare, NotHermitian, NotPSD

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


class HermitianEig(NamedTuple):
    """Eigenvalues sorted nonincreasing and the matching unitary of eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionMismatch(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def _require_square(a: np.ndarray) -> None:
    if a.shape[0] != a.shape[1]:
        raise NonSquare(f"matrix is {a.shape[0]}x{a.shape[1]}")


def hermitian_part(m, h_tol: float = H_TOL) -> np.ndarray:
    """Return ``(M + M^dagger)/2`` after checking M is Hermitian to relative ``h_tol``."""
    a = as_matrix(m)
    _require_square(a)
    scale = max(np.linalg.norm(a), 1.0e-300)
    dev = np.linalg.norm(a - a.conj().T)
    if dev > h_tol * scale:
        raise NotHermitian(f"||M - M^H||_F / ||M||_F = {dev / scale:.3e} exceeds {h_tol:g}")
    return 0.5 * (a + a.conj().T)


def eig_hermitian(m, h_tol: float = H_TOL) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues nonincreasing.

    The input is symmetrized before decomposition. Within a degenerate cluster
    the choice of eigenvectors is arbitrary; callers should only use the
    spectral projections built from them.
    """
    a = hermitian_part(m, h_tol)
    w, v = np.linalg.eigh(a)
    return HermitianEig(w[::-1].copy(), v[:, ::-1].copy())


def sqrt_psd(m, neg_tol: float = NEG_TOL, h_tol: float = H_TOL) -> np.ndarray:
    """Principal square root of a positive semidefinite Hermitian matrix."""
    w, v = eig_hermitian(m, h_tol)
    if w[-1] < -neg_tol:
        raise NotPSD(f"minimum eigenvalue {w[-1]:.3e} below -{neg_tol:g}")
    root = np.sqrt(np.clip(w, 0.0, None))
    r = (v * root) @ v.conj().T
    return 0.5 * (r + r.conj().T)


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def conj_entrywise(m) -> np.ndarray:
    """Complex conjugate in the computational (real) product basis."""
    return np.conj(as_matrix(m))


def partial_transpose(m, dims: Tuple[int, int], subsystem: str = "B") -> np.ndarray:
    """Transpose the indices of one tensor factor of a bipartite operator.

    Parameters
    ----------
    m : array_like
        Square matrix of size ``d_A * d_B``.
    dims : (int, int)
        Local dimensions ``(d_A, d_B)``.
    subsystem : {"A", "B"}
        Factor whose indices are transposed.
    """
    a = as_matrix(m)
    d_a, d_b = (int(x) for x in dims)
    if a.shape != (d_a * d_b, d_a * d_b):
        raise DimensionMismatch(f"matrix shape {a.shape} does not match dims {dims}")
    t = a.reshape(d_a, d_b, d_a, d_b)
    if subsystem == "B":
        t = t.transpose(0, 3, 2, 1)
    elif subsystem == "A":
        t = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return t.reshape(d_a * d_b, d_a * d_b)


def spin_flip_operator() -> np.ndarray:
    """sigma_y (x) sigma_y, a real symmetric involution on two qubits."""
    return np.kron(SIGMA_Y, SIGMA_Y).real.astype(np.complex128)


SIGMA_YY = spin_flip_operator()


def spin_flip(m) -> np.ndarray:
    """``(sigma_y (x) sigma_y) conj(M) (sigma_y (x) sigma_y)``."""
    a = as_matrix(m)
    if a.shape != (4, 4):
        raise DimensionMismatch(f"spin flip needs a 4x4 matrix, got {a.shape}")
    return SIGMA_YY @ a.conj() @ SIGMA_YY
