"""numba-compiled versions of the batch kernels.

Signatures and results match ``_numpy``; loops run one state at a time.
"""

import numpy as np
from numba import njit

from ..constants import SQRT2
from ..linalg import SIGMA_YY
from ._numpy import PPT_TOL, WOOTTERS_TOL

_YY = np.ascontiguousarray(SIGMA_YY)


@njit(cache=True)
def margins_two_qubit(spectra):
    n = spectra.shape[0]
    out = np.empty((n, 5))
    for k in range(n):
        l1 = spectra[k, 0]
        l2 = spectra[k, 1]
        l3 = spectra[k, 2]
        l4 = spectra[k, 3]
        pur = l1 * l1 + l2 * l2 + l3 * l3 + l4 * l4
        out[k, 0] = 3.0 * l1 + SQRT2 * l2 + (3.0 - SQRT2) * l3 - 2.0
        out[k, 1] = pur - 1.0 / 3.0
        out[k, 2] = l1 - l3 - 2.0 * np.sqrt(max(l2 * l4, 0.0))
        out[k, 3] = 1.0 - 3.0 * l4 - 3.0 * l3
        out[k, 4] = pur - 1.0 / 3.0
    return out


@njit(cache=True)
def margins_general(spectra):
    n, d = spectra.shape
    out = np.empty((n, 2))
    for k in range(n):
        pur = 0.0
        for i in range(d):
            pur += spectra[k, i] * spectra[k, i]
        out[k, 0] = 1.0 - 3.0 * spectra[k, d - 1] - (d - 1) * spectra[k, d - 2]
        out[k, 1] = pur - 1.0 / (d - 1)
    return out


@njit(cache=True)
def proposition_sums(spectra, p):
    n, d = spectra.shape
    out = np.zeros(n)
    for k in range(n):
        acc = 0.0
        for j in range(1, d):
            acc += j * (spectra[k, j - 1] - spectra[k, j]) / p[j - 1]
        out[k] = acc
    return out


@njit(cache=True)
def _pt_b(r, d_a, d_b):
    d = d_a * d_b
    out = np.empty((d, d), dtype=np.complex128)
    for i in range(d_a):
        for a in range(d_b):
            for j in range(d_a):
                for b in range(d_b):
                    out[i * d_b + a, j * d_b + b] = r[i * d_b + b, j * d_b + a]
    return out


@njit(cache=True)
def partial_transpose_b(states, d_a, d_b):
    n, d, _ = states.shape
    out = np.empty((n, d, d), dtype=np.complex128)
    for k in range(n):
        out[k] = _pt_b(states[k], d_a, d_b)
    return out


@njit(cache=True)
def ppt_min_eigenvalues(states, d_a, d_b):
    n = states.shape[0]
    out = np.empty(n)
    for k in range(n):
        out[k] = np.linalg.eigvalsh(_pt_b(states[k], d_a, d_b))[0]
    return out


@njit(cache=True)
def _hsym(m):
    return 0.5 * (m + np.ascontiguousarray(m.conj().T))


@njit(cache=True)
def _wootters_one(r):
    r = _hsym(r)
    w, v = np.linalg.eigh(r)
    root = np.sqrt(np.maximum(w, 0.0))
    s = np.ascontiguousarray(v * root) @ np.ascontiguousarray(v.conj().T)
    flipped = _YY @ np.ascontiguousarray(np.conj(r)) @ _YY
    m = _hsym(s @ flipped @ s)
    e = np.linalg.eigvalsh(m)
    return np.sqrt(np.maximum(e, 0.0))[::-1]


@njit(cache=True)
def wootters_eigenvalues(states):
    n = states.shape[0]
    out = np.empty((n, 4))
    for k in range(n):
        out[k] = _wootters_one(states[k])
    return out


@njit(cache=True)
def wootters_margins(states):
    n = states.shape[0]
    out = np.empty(n)
    for k in range(n):
        w = _wootters_one(states[k])
        out[k] = w[0] - w[1] - w[2] - w[3]
    return out


@njit(cache=True)
def _separable_at(r, t, oracle):
    d = r.shape[0]
    m = t * r
    for i in range(d):
        m[i, i] += (1.0 - t) / d
    if oracle == 0:
        return np.linalg.eigvalsh(_pt_b(m, 2, 2))[0] >= -PPT_TOL
    w = _wootters_one(m)
    return w[0] - w[1] - w[2] - w[3] <= WOOTTERS_TOL


@njit(cache=True)
def bisect_modulus(states, oracle, lo, tol, max_iter):
    n = states.shape[0]
    lower = np.empty(n)
    upper = np.ones(n)
    iters = np.zeros(n, dtype=np.int64)
    for k in range(n):
        r = states[k]
        if _separable_at(r, 1.0, oracle):
            lower[k] = 1.0
            continue
        a = lo
        b = 1.0
        it = 0
        while b - a > tol and it < max_iter:
            mid = 0.5 * (a + b)
            if _separable_at(r, mid, oracle):
                a = mid
            else:
                b = mid
            it += 1
        lower[k] = a
        upper[k] = b
        iters[k] = it
    return lower, upper, iters
