"""Command-line interface.

Every command writes one JSON document to stdout (or ``--output``). Exit codes:
0 success, 1 verification failure, 2 bad input. Errors are reported as JSON on
stderr.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import kernels, verify
from .criteria import ALL_REGIONS, batch_margins, evaluate_all
from .errors import SepspecError
from .gap import gap_decompose, proposition_check, two_qubit_lhat, vidal_tarrach
from .io import dumps, parse_spectrum, parse_state
from .robustness import ORACLES, modulus, modulus_bisect_batch
from .sampling import SampleConfig, sample_states_with_spectra
from .states import RegionVerdict, Spectrum, purity, spectrum_of
from .wootters import wootters_check

SEED_ENV = "SEPSPEC_SEED"
DEFAULT_SEED = 0


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV}={raw!r} is not an integer") from None


def _check_report(rho) -> dict:
    report = evaluate_all(spectrum_of(rho), dims=rho.dims).to_dict()
    if rho.d == 4:
        pt_min = float(kernels.ppt_min_eigenvalues(rho.matrix)[0])
        w = wootters_check(rho)
        report["criteria"].append(RegionVerdict.from_margin("ppt", -pt_min).to_dict())
        report["criteria"].append(RegionVerdict.from_margin("wootters", w.margin).to_dict())
        report["wootters"] = {"w": [float(x) for x in w.w], "concurrence": w.concurrence}
    else:
        report["criteria"] += [RegionVerdict.not_applicable(n).to_dict() for n in ("ppt", "wootters")]
    return report


def _load_state(path):
    if not os.path.isfile(path):
        raise InputError(f"no such state file: {path}")
    return parse_state(path)


def cmd_check(args) -> dict:
    return _check_report(_load_state(args.state))


def cmd_spectrum(args) -> dict:
    if args.csv:
        spec = parse_spectrum(args.csv)
    elif args.values:
        spec = Spectrum.from_values(args.values)
    else:
        raise InputError("give spectrum values or --csv")
    dims = tuple(args.dims) if args.dims else None
    if dims is not None and dims[0] * dims[1] != spec.d:
        raise InputError(f"dims {dims} do not match {spec.d} values")
    return evaluate_all(spec, dims=dims).to_dict()


def cmd_gap(args) -> dict:
    rho = _load_state(args.state)
    rep = gap_decompose(rho)
    presets = {}
    if rep.d == 4:
        presets["two_qubit_lhat"] = two_qubit_lhat()
    if rep.d >= 3:
        presets["vidal_tarrach"] = vidal_tarrach(rep.d)
    props = {}
    for name, p in presets.items():
        r = proposition_check(rep.spectrum, p)
        props[name] = {"p": list(p.values), "sum": r.sum, "certified": r.separable_certified}
    return {
        "dims": list(rho.dims),
        "spectrum": [float(x) for x in rep.spectrum.values],
        "gaps": [float(x) for x in rep.gaps],
        "residual_weight": rep.residual_weight,
        "averaged_state_purities": [purity(rep.averaged(j)) for j in range(1, rep.d + 1)],
        "reconstruction_error": float(np.linalg.norm(rep.reconstruct() - rho.matrix)),
        "omega_defined": bool(rep.spectrum.values[-1] < 1.0 / rep.d - 1e-9),
        "propositions": props,
    }


def cmd_ell(args) -> dict:
    rho = _load_state(args.state)
    method = {"bisect": "bisect", "closed": "closed", "auto": "auto"}[args.method]
    return modulus(rho, method=method, oracle=args.oracle, tol=args.tol).to_dict()


def cmd_sample(args) -> dict:
    dims = tuple(args.dims)
    cfg = SampleConfig(seed=args.seed, count=args.count, dims=dims,
                       spectrum=tuple(args.spectrum) if args.spectrum else None,
                       region=args.region)
    spectra, states = sample_states_with_spectra(cfg, args.jobs)
    margins = {k: v for k, v in batch_margins(spectra).items()}
    out = {"config": {"seed": cfg.seed, "count": cfg.count, "dims": list(dims),
                      "spectrum": list(cfg.spectrum) if cfg.spectrum else None,
                      "region": cfg.region}}
    if cfg.d == 4:
        margins["ppt"] = -kernels.ppt_min_eigenvalues(states)
        margins["wootters"] = kernels.wootters_margins(states)
    names = [n for n in (*ALL_REGIONS, "ppt", "wootters") if n in margins]
    inside = {n: margins[n] <= 1e-9 for n in names}
    out["criteria"] = names
    out["inside_fraction"] = {n: float(np.mean(inside[n])) for n in names}
    out["agreement"] = [[float(np.mean(inside[a] == inside[b])) for b in names] for a in names]
    out["margin_min"] = {n: float(np.min(margins[n])) for n in names}
    out["margin_max"] = {n: float(np.max(margins[n])) for n in names}
    if cfg.d == 4 and not args.no_ell:
        ell = modulus_bisect_batch(states)
        out["ell_min"] = float(np.min(ell))
        out["ell_max"] = float(np.max(ell))
    return out


def cmd_verify(args) -> dict:
    return verify.run(args.suite, args.seed, samples=args.samples, jobs=args.jobs)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sepspec", description="Spectral separability criteria for bipartite states.")
    p.add_argument("--pretty", action="store_true", help="human-readable output")
    p.add_argument("--output", "-o", help="write output to this path instead of stdout")
    # the same flags after the subcommand; SUPPRESS keeps the top-level values otherwise
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="all criteria plus PPT and Wootters for one state")
    c.add_argument("state")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("spectrum", parents=[common], help="region membership of a spectrum")
    s.add_argument("values", nargs="*", type=float)
    s.add_argument("--csv", help="spectrum CSV file")
    s.add_argument("--dims", nargs=2, type=int)
    s.set_defaults(func=cmd_spectrum)

    g = sub.add_parser("gap", parents=[common], help="gap representation and proposition sums")
    g.add_argument("state")
    g.set_defaults(func=cmd_gap)

    e = sub.add_parser("ell", parents=[common], help="modulus of separability")
    e.add_argument("state")
    e.add_argument("--method", choices=("bisect", "closed", "auto"), default="auto")
    e.add_argument("--oracle", choices=ORACLES, default="ppt")
    e.add_argument("--tol", type=float, default=1e-8)
    e.set_defaults(func=cmd_ell)

    seed = _default_seed()
    m = sub.add_parser("sample", parents=[common], help="batch statistics over random states")
    grp = m.add_mutually_exclusive_group()
    grp.add_argument("--spectrum", nargs="+", type=float)
    grp.add_argument("--region", choices=("A", "B", "C", "thm2", "gb", *ALL_REGIONS))
    m.add_argument("--count", type=int, default=1000)
    m.add_argument("--seed", type=int, default=seed)
    m.add_argument("--dims", nargs=2, type=int, default=(2, 2))
    m.add_argument("--jobs", type=int, default=1)
    m.add_argument("--no-ell", action="store_true", help="skip the bisection moduli")
    m.set_defaults(func=cmd_sample)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=("vertices", "containment", "appendix", "convexity", "all"),
                   default="all")
    v.add_argument("--seed", type=int, default=seed)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def _render_pretty(doc) -> str:
    lines = []
    crit = doc.get("criteria") if isinstance(doc, dict) else None
    for k, val in doc.items():
        if k in ("criteria", "checks"):
            continue
        lines.append(f"{k}: {json.dumps(val)}")
    if crit and isinstance(crit[0], dict):
        lines.append(f"{'criterion':<16} {'verdict':<15} margin")
        for r in crit:
            m = "-" if r["margin"] is None else f"{r['margin']:+.6e}"
            lines.append(f"{r['name']:<16} {r['verdict']:<15} {m}")
    for r in doc.get("checks", []):
        res = "-" if r["residual"] is None else f"{r['residual']:.3e}"
        lines.append(f"{r['status']:<5} {r.get('suite', ''):<12} {r['name']:<38} {res}")
    return "\n".join(lines)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc = args.func(args)
    except (InputError, SepspecError, OSError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(dumps(err) + "\n")
        return 2
    text = _render_pretty(doc) if args.pretty else dumps(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    if args.command == "verify" and not doc["passed"]:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
