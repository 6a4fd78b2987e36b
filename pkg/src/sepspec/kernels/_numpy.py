"""Vectorized numpy implementations of the batch kernels."""

import numpy as np

from ..constants import SQRT2
from ..linalg import SIGMA_YY

PPT_TOL = 1e-12
WOOTTERS_TOL = 1e-10


def margins_two_qubit(spectra):
    """Columns: region A, purity ball, Verstraete region, theorem 2, Gurvits-Barnum."""
    s = np.asarray(spectra, dtype=float)
    l1, l2, l3, l4 = s[:, 0], s[:, 1], s[:, 2], s[:, 3]
    pur = np.einsum("ij,ij->i", s, s)
    out = np.empty((s.shape[0], 5))
    out[:, 0] = 3.0 * l1 + SQRT2 * l2 + (3.0 - SQRT2) * l3 - 2.0
    out[:, 1] = pur - 1.0 / 3.0
    out[:, 2] = l1 - l3 - 2.0 * np.sqrt(np.clip(l2 * l4, 0.0, None))
    out[:, 3] = 1.0 - 3.0 * l4 - 3.0 * l3
    out[:, 4] = pur - 1.0 / 3.0
    return out


def margins_general(spectra):
    """Columns: theorem 2, Gurvits-Barnum, for any d >= 2."""
    s = np.asarray(spectra, dtype=float)
    d = s.shape[1]
    out = np.empty((s.shape[0], 2))
    out[:, 0] = 1.0 - 3.0 * s[:, d - 1] - (d - 1) * s[:, d - 2]
    out[:, 1] = np.einsum("ij,ij->i", s, s) - 1.0 / (d - 1)
    return out


def proposition_sums(spectra, p):
    s = np.asarray(spectra, dtype=float)
    d = s.shape[1]
    j = np.arange(1, d)
    mu = j * (s[:, :-1] - s[:, 1:])
    return mu @ (1.0 / np.asarray(p, dtype=float))


def partial_transpose_b(states, d_a, d_b):
    n = states.shape[0]
    t = states.reshape(n, d_a, d_b, d_a, d_b).transpose(0, 1, 4, 3, 2)
    return t.reshape(n, d_a * d_b, d_a * d_b)


def ppt_min_eigenvalues(states, d_a, d_b):
    pt = partial_transpose_b(np.asarray(states, dtype=np.complex128), d_a, d_b)
    return np.linalg.eigvalsh(pt)[:, 0]


def _sqrt_psd_batch(h):
    w, v = np.linalg.eigh(h)
    root = np.sqrt(np.clip(w, 0.0, None))
    return (v * root[:, None, :]) @ np.conj(np.swapaxes(v, 1, 2))


def wootters_eigenvalues(states):
    """Eigenvalues of the Wootters operator, each row sorted nonincreasing."""
    r = np.asarray(states, dtype=np.complex128)
    r = 0.5 * (r + np.conj(np.swapaxes(r, 1, 2)))
    s = _sqrt_psd_batch(r)
    flipped = SIGMA_YY @ np.conj(r) @ SIGMA_YY
    m = s @ flipped @ s
    m = 0.5 * (m + np.conj(np.swapaxes(m, 1, 2)))
    e = np.linalg.eigvalsh(m)
    return np.sqrt(np.clip(e, 0.0, None))[:, ::-1]


def wootters_margins(states):
    w = wootters_eigenvalues(states)
    return w[:, 0] - w[:, 1] - w[:, 2] - w[:, 3]


def _segment(states, t):
    n, d, _ = states.shape
    eye = np.eye(d, dtype=np.complex128)
    return t[:, None, None] * states + ((1.0 - t) / d)[:, None, None] * eye


def _separable(states, oracle):
    if oracle == 0:
        return ppt_min_eigenvalues(states, 2, 2) >= -PPT_TOL
    return wootters_margins(states) <= WOOTTERS_TOL


def bisect_modulus(states, oracle, lo, tol, max_iter):
    """Batch bisection of t -> separable(t*rho + (1-t)*tau) on [lo, 1].

    ``oracle`` is 0 for PPT, 1 for Wootters. Returns (lower, upper, iterations);
    ``upper == lower == 1`` when the whole segment is separable.
    """
    states = np.asarray(states, dtype=np.complex128)
    n = states.shape[0]
    lower = np.full(n, float(lo))
    upper = np.ones(n)
    iters = np.zeros(n, dtype=np.int64)
    whole = _separable(states, oracle)
    lower[whole] = 1.0
    active = ~whole
    for _ in range(max_iter):
        active &= (upper - lower) > tol
        if not active.any():
            break
        idx = np.nonzero(active)[0]
        mid = 0.5 * (lower[idx] + upper[idx])
        ok = _separable(_segment(states[idx], mid), oracle)
        lower[idx[ok]] = mid[ok]
        upper[idx[~ok]] = mid[~ok]
        iters[idx] += 1
    return lower, upper, iters
