"""Named two-qubit states used as fixtures and in the verification suites."""

from pathlib import Path

import numpy as np

from .io import write_state
from .states import DensityMatrix, make_density, maximally_mixed, pure_state

KET_00 = np.array([1, 0, 0, 0], dtype=np.complex128)
KET_01 = np.array([0, 1, 0, 0], dtype=np.complex128)
KET_11 = np.array([0, 0, 0, 1], dtype=np.complex128)
PHI_PLUS = np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2.0)


def bell() -> DensityMatrix:
    return pure_state(PHI_PLUS, (2, 2))


def werner(t: float) -> DensityMatrix:
    """``t |Phi+><Phi+| + (1 - t) tau``."""
    return make_density(t * bell().matrix + (1.0 - t) * maximally_mixed((2, 2)).matrix, (2, 2))


def product_00() -> DensityMatrix:
    return pure_state(KET_00, (2, 2))


def zero_tau() -> DensityMatrix:
    """|0><0| (x) tau_B, spectrum (1/2, 1/2, 0, 0) with Q = 1 - P."""
    return make_density((np.outer(KET_00, KET_00) + np.outer(KET_01, KET_01)) / 2, (2, 2))


def equal_pair() -> DensityMatrix:
    """(|00><00| + |11><11|)/2, spectrum (1/2, 1/2, 0, 0) with Q = P."""
    return make_density((np.outer(KET_00, KET_00) + np.outer(KET_11, KET_11)) / 2, (2, 2))


def lhat2_minimizer() -> DensityMatrix:
    """(|Phi+><Phi+| + |01><01|)/2, whose modulus is 1/sqrt(2)."""
    m = np.outer(PHI_PLUS, PHI_PLUS.conj()) + np.outer(KET_01, KET_01)
    return make_density(m / 2, (2, 2))


FIXTURES = {
    "bell": bell,
    "werner_1_3": lambda: werner(1.0 / 3.0),
    "werner_0_5": lambda: werner(0.5),
    "product_00": product_00,
    "zero_tau": zero_tau,
    "equal_pair": equal_pair,
    "lhat2_minimizer": lhat2_minimizer,
}


def write_fixtures(directory) -> list:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, make in FIXTURES.items():
        path = out / f"{name}.json"
        write_state(make(), path)
        paths.append(path)
    return paths


if __name__ == "__main__":
    import sys

    for p in write_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures"):
        print(p)
