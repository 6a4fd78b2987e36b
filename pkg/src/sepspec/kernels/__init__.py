"""Batch kernels behind a single import.

The hot loops (region margins over many spectra, partial-transpose and
Wootters eigenvalues over stacks of states, batch bisection) have a numba
implementation in ``_numba`` and a vectorized numpy one in ``_numpy``.
``SEPSPEC_DISABLE_JIT=1`` selects the numpy path.
"""

import numpy as np

from .. import _jit
from . import _numpy as numpy_backend

if _jit.USE_NUMBA:
    from . import _numba as numba_backend

    _impl = numba_backend
    BACKEND = "numba"
else:
    numba_backend = None
    _impl = numpy_backend
    BACKEND = "numpy"

PPT_TOL = numpy_backend.PPT_TOL
WOOTTERS_TOL = numpy_backend.WOOTTERS_TOL

ORACLES = {"ppt": 0, "wootters": 1}


def _spectra(x):
    return np.ascontiguousarray(np.atleast_2d(np.asarray(x, dtype=np.float64)))


def _states(x):
    a = np.asarray(x, dtype=np.complex128)
    if a.ndim == 2:
        a = a[None]
    return np.ascontiguousarray(a)


def margins_two_qubit(spectra):
    return _impl.margins_two_qubit(_spectra(spectra))


def margins_general(spectra):
    return _impl.margins_general(_spectra(spectra))


def proposition_sums(spectra, p):
    return _impl.proposition_sums(_spectra(spectra), np.ascontiguousarray(p, dtype=np.float64))


def partial_transpose_b(states, d_a, d_b):
    return _impl.partial_transpose_b(_states(states), int(d_a), int(d_b))


def ppt_min_eigenvalues(states, d_a=2, d_b=2):
    return _impl.ppt_min_eigenvalues(_states(states), int(d_a), int(d_b))


def wootters_eigenvalues(states):
    return _impl.wootters_eigenvalues(_states(states))


def wootters_margins(states):
    return _impl.wootters_margins(_states(states))


def bisect_modulus(states, oracle="ppt", lo=1.0 / 3.0, tol=1e-8, max_iter=60):
    return _impl.bisect_modulus(_states(states), ORACLES[oracle], float(lo), float(tol), int(max_iter))
