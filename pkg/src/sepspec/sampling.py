"""Seeded random states and spectra.

Sample ``i`` of a batch draws from its own Philox stream keyed by the seed with
counter offset ``i``, so a batch is identical regardless of how it is split
across workers.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .constants import B_TOL
from .criteria import (ALL_REGIONS, GURVITS_BARNUM, THEOREM2, TWO_QUBIT_REGIONS,
                       batch_margins)
from .errors import LengthMismatch, RejectionTimeout, SepspecError
from .states import DensityMatrix, Spectrum

MAX_DRAWS = 10 ** 6
_CHUNK = 64

REGION_ALIASES = {
    "A": "theorem1", "B": "purity", "C": "region_c",
    "thm2": THEOREM2, "gb": GURVITS_BARNUM,
}


def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    """Independent generator for sample ``index`` of the stream ``seed``."""
    seed = int(seed) & 0xFFFFFFFFFFFFFFFF
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, int(index)]))


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * ph


def state_with_spectrum(lam, dims: Tuple[int, int], rng: np.random.Generator) -> DensityMatrix:
    s = lam if isinstance(lam, Spectrum) else Spectrum.from_values(lam)
    d = int(dims[0]) * int(dims[1])
    if s.d != d:
        raise LengthMismatch(f"spectrum has {s.d} entries, dims {tuple(dims)} need {d}")
    u = haar_unitary(d, rng)
    m = (u * s.values) @ u.conj().T
    return DensityMatrix(0.5 * (m + m.conj().T), dims)


def spectrum_uniform(d: int, rng: np.random.Generator) -> Spectrum:
    """Flat-Dirichlet point of the simplex, sorted nonincreasing."""
    return Spectrum(np.sort(rng.dirichlet(np.ones(d)))[::-1])


def random_state(dims: Tuple[int, int], rng: np.random.Generator) -> DensityMatrix:
    d = int(dims[0]) * int(dims[1])
    return state_with_spectrum(spectrum_uniform(d, rng), dims, rng)


def canonical_region(region: str) -> str:
    name = REGION_ALIASES.get(region, region)
    if name not in ALL_REGIONS:
        raise SepspecError(f"unknown region {region!r}")
    return name


def spectrum_in_region(region: str, rng: np.random.Generator, d: int = 4,
                       max_draws: int = MAX_DRAWS) -> Spectrum:
    """Rejection-sample a flat-Dirichlet spectrum with ``margin <= 0`` for ``region``."""
    name = canonical_region(region)
    if name in TWO_QUBIT_REGIONS and d != 4:
        raise SepspecError(f"region {region!r} requires d=4")
    drawn = 0
    while drawn < max_draws:
        k = min(_CHUNK, max_draws - drawn)
        cand = np.sort(rng.dirichlet(np.ones(d), size=k), axis=1)[:, ::-1]
        ok = np.nonzero(batch_margins(cand)[name] <= 0.0)[0]
        if ok.size:
            return Spectrum(cand[ok[0]])
        drawn += k
    raise RejectionTimeout(f"no spectrum in region {region!r} after {max_draws} draws")


def spectrum_on_purity_sphere(target: float, rng: np.random.Generator, d: int = 4,
                              max_draws: int = MAX_DRAWS) -> Spectrum:
    """Spectrum with ``sum l_i^2 == target``, from a Dirichlet direction scaled about tau."""
    center = np.full(d, 1.0 / d)
    need = target - 1.0 / d
    if need < 0:
        raise SepspecError(f"purity {target} below 1/d")
    for _ in range(max_draws):
        x = np.sort(rng.dirichlet(np.ones(d)))[::-1]
        delta = x - center
        norm2 = float(delta @ delta)
        if norm2 == 0.0:
            continue
        y = center + np.sqrt(need / norm2) * delta
        if y[-1] >= 0.0:
            return Spectrum(y)
    raise RejectionTimeout("purity sphere leaves the simplex for every draw")


@dataclass(frozen=True)
class SampleConfig:
    seed: int
    count: int
    dims: Tuple[int, int] = (2, 2)
    spectrum: Optional[Tuple[float, ...]] = None
    region: Optional[str] = None

    def __post_init__(self):
        if self.count < 1:
            raise SepspecError("count must be >= 1")
        if self.spectrum is not None and self.region is not None:
            raise SepspecError("give either a spectrum or a region, not both")
        d = self.d
        if self.spectrum is not None and len(self.spectrum) != d:
            raise LengthMismatch(f"spectrum length {len(self.spectrum)} != d={d}")
        if self.region is not None:
            name = canonical_region(self.region)
            if name in TWO_QUBIT_REGIONS and d != 4:
                raise SepspecError(f"region {self.region!r} requires d=4")

    @property
    def d(self) -> int:
        return int(self.dims[0]) * int(self.dims[1])


def _draw_spectrum(cfg: SampleConfig, rng) -> Spectrum:
    if cfg.spectrum is not None:
        return Spectrum.from_values(cfg.spectrum)
    if cfg.region is not None:
        return spectrum_in_region(cfg.region, rng, cfg.d)
    return spectrum_uniform(cfg.d, rng)


def _map_indices(fn, count: int, jobs: int):
    if jobs <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, range(count), chunksize=256))


def sample_spectra(cfg: SampleConfig, jobs: int = 1) -> np.ndarray:
    """(count, d) array of sorted spectra."""
    out = _map_indices(lambda i: _draw_spectrum(cfg, rng_for(cfg.seed, i)).values, cfg.count, jobs)
    return np.array(out)


def sample_states(cfg: SampleConfig, jobs: int = 1) -> np.ndarray:
    """(count, d, d) stack of states ``U diag(l) U^dagger``."""
    def one(i):
        rng = rng_for(cfg.seed, i)
        return state_with_spectrum(_draw_spectrum(cfg, rng), cfg.dims, rng).matrix

    return np.array(_map_indices(one, cfg.count, jobs))


def sample_states_with_spectra(cfg: SampleConfig, jobs: int = 1):
    def one(i):
        rng = rng_for(cfg.seed, i)
        s = _draw_spectrum(cfg, rng)
        return s.values, state_with_spectrum(s, cfg.dims, rng).matrix

    pairs = _map_indices(one, cfg.count, jobs)
    return np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs])


# theta(v) = F conj(v) fixes exactly the real span of these vectors
_FLIP_FIXED_BASIS = np.array([
    [1, 0, 0, -1],
    [1j, 0, 0, 1j],
    [0, 1, 1, 0],
    [0, 1j, -1j, 0],
]).T / np.sqrt(2.0)


def rank2_intersecting_state(rng: np.random.Generator) -> DensityMatrix:
    """Random spectrum-(1/2,1/2,0,0) state whose projection P shares a vector with its spin flip.

    P = |psi><psi| + |phi><phi| with psi invariant under the spin flip and phi
    Haar-random orthogonal to psi; this is the family covered by the rank-2
    closed form.
    """
    psi = _FLIP_FIXED_BASIS @ rng.standard_normal(4)
    psi /= np.linalg.norm(psi)
    phi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    phi -= psi * np.vdot(psi, phi)
    phi /= np.linalg.norm(phi)
    p = np.outer(psi, psi.conj()) + np.outer(phi, phi.conj())
    return DensityMatrix(0.5 * (p + p.conj().T) / 2.0, (2, 2))


def rank2_haar_state(rng: np.random.Generator) -> DensityMatrix:
    return state_with_spectrum((0.5, 0.5, 0.0, 0.0), (2, 2), rng)
