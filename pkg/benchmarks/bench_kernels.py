"""Time the numba and numpy kernel backends on the same batch.

    python3 benchmarks/bench_kernels.py --count 2000 --repeat 3
"""

import argparse
import time

import numpy as np

from sepspec import kernels
from sepspec.sampling import SampleConfig, sample_spectra, sample_states


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cfg = SampleConfig(seed=args.seed, count=args.count)
    states = np.ascontiguousarray(sample_states(cfg))
    spectra = np.ascontiguousarray(sample_spectra(cfg))

    backends = {"numpy": kernels.numpy_backend}
    if kernels.numba_backend is not None:
        backends["numba"] = kernels.numba_backend
    jobs = {
        "margins_two_qubit": lambda b: b.margins_two_qubit(spectra),
        "ppt_min_eigenvalues": lambda b: b.ppt_min_eigenvalues(states, 2, 2),
        "wootters_margins": lambda b: b.wootters_margins(states),
        "bisect_modulus_ppt": lambda b: b.bisect_modulus(states, 0, 1 / 3, 1e-8, 60),
        "bisect_modulus_wootters": lambda b: b.bisect_modulus(states, 1, 1 / 3, 1e-8, 60),
    }
    names = list(backends)
    print(f"{'kernel':<26}" + "".join(f"{n:>12}" for n in names) + f"   (n={args.count}, seconds)")
    for job, fn in jobs.items():
        for b in backends.values():
            fn(b)  # warm-up, includes JIT compilation
        row = [best_of(lambda b=b: fn(b), args.repeat) for b in backends.values()]
        print(f"{job:<26}" + "".join(f"{t:>12.4f}" for t in row))


if __name__ == "__main__":
    main()
