"""Seeded verification suites.

Each ``check_*`` function returns a :class:`Check`; suites bundle them. Results
only depend on the seed and the sample counts.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np

from . import kernels
from .constants import B_TOL, SQRT2
from .criteria import (ALL_REGIONS, REGION_A, REGION_A_VERTICES, REGION_C, THEOREM2,
                       batch_margins, region_a_margin, region_c_margin)
from .fixtures import bell, lhat2_minimizer, product_00
from .gap import (flat_spectrum, gap_decompose, theorem1_from_proposition,
                  theorem2_from_proposition)
from .robustness import modulus_bisect, modulus_bisect_batch
from .sampling import (SampleConfig, random_state, rank2_haar_state, rank2_intersecting_state,
                       rng_for, sample_spectra, sample_states, spectrum_on_purity_sphere)
from .states import Spectrum, purity
from .wootters import rank2_closed_form, separability_threshold, w2_matrix, zeta_pm


@dataclass
class Check:
    name: str
    passed: bool
    residual: float
    tolerance: float
    count: int
    status: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status or ("pass" if self.passed else "fail"),
            "residual": _finite(self.residual),
            "tolerance": self.tolerance,
            "count": self.count,
        }


def _finite(x):
    x = float(x)
    return x if math.isfinite(x) else None


def _sub(seed: int, k: int) -> int:
    return int(np.random.SeedSequence([int(seed), k]).generate_state(1, np.uint64)[0])


def _states(seed, count, jobs=1, **kw):
    return sample_states(SampleConfig(seed=seed, count=count, **kw), jobs)


def _per_index(seed, count, fn):
    return [fn(rng_for(seed, i)) for i in range(count)]


# ---------------------------------------------------------------- vertices

def check_vertex_margins() -> Check:
    res = 0.0
    for v in REGION_A_VERTICES:
        m = region_a_margin(v)
        expected = -0.5 if v == REGION_A_VERTICES[3] else 0.0
        res = max(res, abs(m - expected))
    return Check("vertex_margins", res <= 1e-12, res, 1e-12, 4)


def check_vertex_hull(seed: int, count: int = 100) -> Check:
    rng = rng_for(seed)
    w = rng.dirichlet(np.ones(4), size=count)
    spectra = w @ np.array(REGION_A_VERTICES)
    worst = float(np.max(batch_margins(spectra)[REGION_A]))
    return Check("vertex_hull_in_A", worst <= B_TOL, worst, B_TOL, count)


def check_region_comparison() -> Check:
    v2 = REGION_A_VERTICES[1]
    k = SQRT2 / 3.0
    mix = k * np.array([0.75, 0.25, 0, 0]) + (1 - k) * np.full(4, 0.25)
    s2, sm = Spectrum.from_values(v2), Spectrum.from_values(mix)
    res = max(
        abs(purity(s2) - 3.0 / 8.0),
        abs(region_a_margin(s2)),
        abs(purity(sm) - 1.0 / 3.0),
        abs(region_a_margin(sm) - (5.0 / 3.0 + SQRT2 / 4.0 - 2.0)),
    )
    ok = res <= 1e-12 and purity(s2) > 1 / 3 and region_a_margin(sm) > B_TOL
    return Check("region_comparison", ok, res, 1e-12, 2)


def check_vertices_in_c() -> Check:
    worst = max(region_c_margin(v) for v in REGION_A_VERTICES)
    return Check("vertices_in_C", worst <= 1e-12, worst, 1e-12, 4)


# ------------------------------------------------------------- containment

def check_a_subset_c(seed: int, count: int, jobs: int = 1) -> Check:
    s = sample_spectra(SampleConfig(seed=seed, count=count), jobs)
    m = batch_margins(s)
    inside = m[REGION_A] < -B_TOL
    worst = float(np.max(m[REGION_C][inside])) if inside.any() else -np.inf
    return Check("A_subset_C", worst <= B_TOL, worst, B_TOL, count)


def footnote_residual(lam) -> float:
    l1, l2, l3, l4 = lam
    return abs((l1 - l3) ** 2 - 4 * l2 * l4 + 3 * (l1 + l3 - 2.0 / 3.0) ** 2)


def check_b_boundary(seed: int, count: int) -> Check:
    spectra = _per_index(seed, count, lambda r: spectrum_on_purity_sphere(1.0 / 3.0, r).values)
    res = max(footnote_residual(s) for s in spectra)
    worst_c = float(np.max(batch_margins(np.array(spectra))[REGION_C]))
    return Check("B_boundary_identity", res <= 1e-9 and worst_c <= B_TOL, res, 1e-9, count)


def check_thm2_implies_thm1(seed: int, count: int, jobs: int = 1) -> Check:
    s = sample_spectra(SampleConfig(seed=seed, count=count), jobs)
    m = batch_margins(s)
    hit = m[THEOREM2] <= B_TOL
    worst = float(np.max(m[REGION_A][hit])) if hit.any() else -np.inf
    return Check("thm2_implies_thm1", worst <= B_TOL, worst, B_TOL, count)


def check_ppt_soundness(seed: int, region: str, count: int, jobs: int = 1) -> Check:
    states = _states(seed, count, jobs, region=region)
    worst = float(np.min(kernels.ppt_min_eigenvalues(states)))
    return Check(f"ppt_soundness_{region}", worst >= -1e-9, -worst, 1e-9, count)


def check_gap_reconstruction(seed: int, count: int, dims=(2, 2)) -> Check:
    d = dims[0] * dims[1]
    res_rec = res_spec = res_pur = 0.0
    for i in range(count):
        rho = random_state(dims, rng_for(seed, i))
        rep = gap_decompose(rho)
        res_rec = max(res_rec, float(np.linalg.norm(rep.reconstruct() - rho.matrix)))
        for j in range(1, d):
            w = np.linalg.eigvalsh(rep.averaged(j).matrix)[::-1]
            res_spec = max(res_spec, float(np.max(np.abs(w - flat_spectrum(j, d)))))
        res_pur = max(res_pur, abs(purity(rep.averaged(d - 1)) - 1.0 / (d - 1)))
    ok = res_rec <= 1e-12 and res_spec <= 1e-10 and res_pur <= 1e-12
    return Check(f"gap_reconstruction_d{d}", ok, max(res_rec, res_pur), 1e-12, count)


def check_proposition_theorem1(seed: int, count: int, jobs: int = 1) -> Check:
    s = sample_spectra(SampleConfig(seed=seed, count=count), jobs)
    bad = sum(not theorem1_from_proposition(Spectrum(x)).agree for x in s)
    return Check("proposition_theorem1", bad == 0, float(bad), 0.0, count)


def check_proposition_theorem2(seed: int, count: int, d: int, jobs: int = 1) -> Check:
    s = sample_spectra(SampleConfig(seed=seed, count=count, dims=(d, 1)), jobs)
    bad = sum(not theorem2_from_proposition(Spectrum(x)).agree for x in s)
    return Check(f"proposition_theorem2_d{d}", bad == 0, float(bad), 0.0, count)


# ---------------------------------------------------------------- appendix

def check_zeta_at_one(n_alpha: int = 50) -> Check:
    alphas = np.linspace(0.25, 0.5, n_alpha)
    res = max(abs(zeta_pm(a, 1.0).plus - a * a) for a in alphas)
    return Check("zeta_plus_at_xi_1", res <= 1e-12, res, 1e-12, n_alpha)


def _grid(n):
    return np.linspace(0.25, 0.5, n), np.linspace(0.0, 1.0, n, endpoint=False)


def check_w2_block(seed: int, n: int = 20) -> Check:
    rng = rng_for(seed)
    alphas, xis = _grid(n)
    res = 0.0
    for a in alphas:
        for x in xis:
            th, ph = rng.uniform(0, np.pi / 2), rng.uniform(0, 2 * np.pi)
            eta = math.sqrt(1 - x) * np.array([np.cos(th), np.exp(1j * ph) * np.sin(th)])
            num = np.linalg.eigvalsh(w2_matrix(a, x, eta))
            z = zeta_pm(a, x)
            ref = np.sort([a * a, (0.5 - a) ** 2, z.plus, z.minus])
            res = max(res, float(np.max(np.abs(num - ref))))
    return Check("w2_block_spectrum", res <= 1e-9, res, 1e-9, n * n)


def check_threshold_forms(n: int = 20) -> Check:
    alphas, xis = _grid(n)
    bad = 0
    for a in alphas:
        for x in xis:
            bad += not separability_threshold(a, x).agree
    return Check("threshold_forms_agree", bad == 0, float(bad), 0.0, n * n)


def check_zeta_monotone(n: int = 200) -> Check:
    worst = 0.0
    for a in np.linspace(0.25, 0.5, 51):
        zp = np.array([zeta_pm(a, x).plus for x in np.linspace(0.0, 1.0, n)])
        worst = max(worst, float(np.max(zp[:-1] - zp[1:])))
    return Check("zeta_plus_nondecreasing", worst <= 1e-15, worst, 1e-15, 51 * n)


def check_lhat2_fixture() -> Check:
    rho = lhat2_minimizer()
    closed = rank2_closed_form(rho).ell_closed
    bis = modulus_bisect(rho, tol=1e-10).ell
    target = 1.0 / SQRT2
    res = max(abs(closed - target), abs(bis - target))
    return Check("lhat2_fixture", abs(closed - target) <= 1e-9 and abs(bis - target) <= 1e-6,
                 res, 1e-9, 1)


def closed_vs_bisection(states) -> np.ndarray:
    closed = np.array([rank2_closed_form(r).ell_closed for r in states])
    bis = modulus_bisect_batch(np.array([r.matrix for r in states]))
    return np.abs(closed - bis)


def check_closed_form(seed: int, count: int, family: str = "intersecting") -> Check:
    maker = rank2_intersecting_state if family == "intersecting" else rank2_haar_state
    states = _per_index(seed, count, maker)
    res = float(np.max(closed_vs_bisection(states)))
    return Check(f"closed_form_vs_bisection_{family}", res <= 1e-6, res, 1e-6, count)


def check_closed_form_floor(seed: int, count: int, family: str = "haar") -> Check:
    maker = rank2_intersecting_state if family == "intersecting" else rank2_haar_state
    ells = [rank2_closed_form(r).ell_closed for r in _per_index(seed, count, maker)]
    low = min(ells)
    res = max(0.0, 1.0 / SQRT2 - low)
    return Check(f"closed_form_floor_{family}", low >= 1.0 / SQRT2 - 1e-9, res, 1e-9, count)


def check_bisection_floor_rank2(seed: int, count: int) -> Check:
    states = np.array([r.matrix for r in _per_index(seed, count, rank2_haar_state)])
    low = float(np.min(modulus_bisect_batch(states)))
    res = max(0.0, 1.0 / SQRT2 - low)
    return Check("bisection_floor_rank2_haar", low >= 1.0 / SQRT2 - 1e-6, res, 1e-6, count)


def check_w2_family(seed: int, count: int) -> Check:
    res = 0.0
    top = 0.0
    for i, rho in enumerate(_per_index(seed, count, rank2_intersecting_state)):
        an = rank2_closed_form(rho)
        t = rng_for(seed, count + i).uniform(0.0, 1.0)
        a = (1 + t) / 4
        xi = min(max(an.xi, 0.0), 1.0)
        rt = t * rho.matrix + (1 - t) * np.eye(4) / 4
        w = kernels.wootters_eigenvalues(rt)[0]
        z = zeta_pm(a, xi)
        ref = np.sort([a * a, (0.5 - a) ** 2, z.plus, z.minus])
        res = max(res, float(np.max(np.abs(np.sort(w ** 2) - ref))))
        top = max(top, abs(w[0] - a))
    return Check("w2_spectrum_family", res <= 1e-9 and top <= 1e-9, max(res, top), 1e-9, count)


def rank2_generic_report(seed: int, count: int) -> Check:
    """How often the closed form misses on Haar-random rank-2 states (informational)."""
    states = _per_index(seed, count, rank2_haar_state)
    dev = closed_vs_bisection(states)
    frac = float(np.mean(dev > 1e-6))
    return Check("closed_form_haar_mismatch_fraction", True, frac, 1e-6, count, status="info")


# --------------------------------------------------------------- convexity

def check_convexity(seed: int, pairs: int, weights=(0.25, 0.5, 0.75), jobs: int = 1) -> Check:
    a = _states(_sub(seed, 1), pairs, jobs)
    b = _states(_sub(seed, 2), pairs, jobs)
    la, lb = modulus_bisect_batch(a), modulus_bisect_batch(b)
    worst = -np.inf
    for s in weights:
        lm = modulus_bisect_batch(s * a + (1 - s) * b)
        bound = 1.0 / (s / la + (1 - s) / lb)
        worst = max(worst, float(np.max(bound - lm)))
    return Check("convexity_inverse_ell", worst <= 1e-6, worst, 1e-6, pairs * len(weights))


def check_oracle_concordance(seed: int, count: int, tol: float = 1e-8, jobs: int = 1) -> Check:
    states = _states(seed, count, jobs)
    lp = modulus_bisect_batch(states, "ppt", tol)
    lw = modulus_bisect_batch(states, "wootters", tol)
    res = float(np.max(np.abs(lp - lw)))
    return Check("oracle_concordance", res <= 2 * tol, res, 2 * tol, count)


def check_modulus_floor(seed: int, count: int, jobs: int = 1) -> Check:
    states = np.concatenate([_states(seed, count, jobs), bell().matrix[None]])
    low = float(np.min(modulus_bisect_batch(states)))
    res = max(0.0, 1.0 / 3.0 - low)
    return Check("modulus_floor", low >= 1.0 / 3.0 - 1e-9, res, 1e-9, count + 1)


def check_known_moduli() -> Check:
    lb = modulus_bisect(bell()).ell
    lp = modulus_bisect(product_00()).ell
    res = max(abs(lb - 1.0 / 3.0), abs(lp - 1.0))
    return Check("known_moduli", res <= 1e-6, res, 1e-6, 2)


def check_wootters_ppt(seed: int, count: int, band: float = 1e-7, jobs: int = 1) -> Check:
    states = _states(seed, count, jobs)
    wm = kernels.wootters_margins(states)
    pm = kernels.ppt_min_eigenvalues(states)
    keep = np.abs(wm) >= band
    bad = int(np.sum((wm[keep] <= 0) != (pm[keep] >= 0)))
    return Check("wootters_ppt_concordance", bad == 0, float(bad), 0.0, int(keep.sum()))


# ------------------------------------------------------------------ suites

def suite_vertices(seed: int, samples: int, jobs: int = 1) -> List[Check]:
    return [
        check_vertex_margins(),
        check_vertex_hull(_sub(seed, 10), 100),
        check_region_comparison(),
        check_vertices_in_c(),
    ]


def suite_containment(seed: int, samples: int, jobs: int = 1) -> List[Check]:
    checks = [
        check_a_subset_c(_sub(seed, 20), 10 * samples, jobs),
        check_b_boundary(_sub(seed, 21), 10 * samples),
        check_thm2_implies_thm1(_sub(seed, 22), 10 * samples, jobs),
    ]
    for k, region in enumerate(ALL_REGIONS):
        checks.append(check_ppt_soundness(_sub(seed, 30 + k), region, samples, jobs))
    checks += [
        check_gap_reconstruction(_sub(seed, 40), max(1, samples // 10), (2, 2)),
        check_gap_reconstruction(_sub(seed, 41), max(1, samples // 10), (2, 3)),
        check_proposition_theorem1(_sub(seed, 42), samples, jobs),
    ]
    for k, d in enumerate((4, 6, 9)):
        checks.append(check_proposition_theorem2(_sub(seed, 43 + k), samples, d, jobs))
    return checks


def suite_appendix(seed: int, samples: int, jobs: int = 1) -> List[Check]:
    n = max(1, samples // 10)
    return [
        check_zeta_at_one(50),
        check_w2_block(_sub(seed, 50), 20),
        check_threshold_forms(20),
        check_zeta_monotone(),
        check_lhat2_fixture(),
        check_closed_form(_sub(seed, 51), n, "intersecting"),
        check_closed_form_floor(_sub(seed, 52), samples, "intersecting"),
        check_w2_family(_sub(seed, 53), n),
        check_bisection_floor_rank2(_sub(seed, 54), n),
        rank2_generic_report(_sub(seed, 55), n),
    ]


def suite_convexity(seed: int, samples: int, jobs: int = 1) -> List[Check]:
    n = max(1, samples // 10)
    return [
        check_known_moduli(),
        check_convexity(_sub(seed, 60), n, jobs=jobs),
        check_oracle_concordance(_sub(seed, 61), n, jobs=jobs),
        check_modulus_floor(_sub(seed, 62), n, jobs),
        check_wootters_ppt(_sub(seed, 63), samples, jobs=jobs),
    ]


SUITES: Dict[str, Callable] = {
    "vertices": suite_vertices,
    "containment": suite_containment,
    "appendix": suite_appendix,
    "convexity": suite_convexity,
}


def run(suite: str, seed: int, samples: int = 1000, jobs: int = 1) -> dict:
    names = list(SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        for c in SUITES[name](seed, samples, jobs):
            d = c.to_dict()
            d["suite"] = name
            checks.append(d)
    passed = all(c["status"] != "fail" for c in checks)
    return {"suite": suite, "seed": seed, "samples": samples, "passed": passed, "checks": checks}
