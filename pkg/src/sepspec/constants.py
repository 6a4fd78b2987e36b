"""Numerical tolerances shared across modules."""

import math

#: Relative Frobenius tolerance on ||M - M^dagger|| before symmetrization.
H_TOL = 1e-9
#: Eigenvalues in [-NEG_TOL, 0) are clamped to zero by ``sqrt_psd``.
NEG_TOL = 1e-10
#: Eigenvalue floor for density matrices / spectra before clamping.
STATE_NEG_TOL = 1e-8
#: Largest |tr - 1| silently renormalized.
TRACE_RENORM_TOL = 1e-6
#: Band around zero in which a region margin is reported as "boundary".
B_TOL = 1e-9

SQRT2 = math.sqrt(2.0)
