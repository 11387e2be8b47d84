"""``szego-lab``: command-line front end.

Exit codes: 0 pass, 1 check failure, 2 usage error.  Options may also come
from ``--config FILE`` (``key = value`` lines, ``#`` comments); command-line
flags override the file, which overrides built-in defaults.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import checks, duality, muckenhoupt, norms, serialize, szego, weights
from .circle import BoundarySamples, FourierCoeffs, make_grid

TEST_FUNCTIONS = {
    "one": lambda t: np.ones_like(t, dtype=complex),
    "wbar": lambda t: np.exp(-1j * t),
    "wbar2": lambda t: np.exp(-2j * t),
    "cos": lambda t: np.cos(t).astype(complex),
    "z2": lambda t: np.exp(2j * t),
}


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.replace(";", ",").split(",") if x.strip()]


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(";", ",").split(",") if x.strip()]


def _complex_list(text: str) -> list[complex]:
    return [complex(x.strip().replace(" ", "")) for x in text.split(",") if x.strip()]


def read_config(path: str) -> dict:
    cfg = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            cfg[key.replace("-", "_")] = value
    return cfg


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta_table(meta: dict) -> serialize.Table:
    return serialize.Table(meta=meta)


# subcommands: each returns (table, exit code) --------------------------------


def cmd_interval(args):
    q0, p0 = muckenhoupt.boundedness_interval(args.alpha)
    meta = {"q0": round(q0, 12), "p0": "inf" if math.isinf(p0) else round(p0, 12)}
    return serialize.Table(meta=meta, short_floats=True), 0


def cmd_ap_scan(args):
    ladder = args.deltas or muckenhoupt.default_ladder()
    report = muckenhoupt.ap_scan(args.alpha, args.p, ladder, args.resolution, args.eps)
    if report.verdict is muckenhoupt.Verdict.BOUNDARY:
        print(f"warning: p = {args.p} is an endpoint for alpha = {args.alpha}; slope not asserted", file=sys.stderr)
    return serialize.scan_report_table(report), 0 if report.matches() else 1


def cmd_check_all(args):
    only = set(args.only) if args.only else None
    scale = -1.0 if args.corrupt_tolerance else 1.0
    results = checks.run_checks(args.seed, only, scale)
    if not results:
        raise ValueError("no checks matched --only")
    failed = [r for r in results if not r.passed]
    header = ["name", "group", "residual", "tolerance", "pass"]
    rows = [tuple(r.to_dict()[k] for k in header) for r in results]
    meta = {"seed": args.seed, "n_checks": len(results), "pass": not failed}
    if failed:
        print(f"FAILED: {failed[0].name}", file=sys.stderr)
    return serialize.Table(header, rows, meta), 1 if failed else 0


def _input_samples(args) -> BoundarySamples:
    if args.input:
        with open(args.input) as fh:
            return serialize.samples_from_csv(fh.read())
    return make_grid(args.n_points).samples(TEST_FUNCTIONS[args.function])


def cmd_project(args):
    f = _input_samples(args)
    z = np.array(args.points, dtype=complex)
    if args.route == "fourier":
        values = szego.project_weighted(f, args.alpha, args.method)(z)
    elif args.route == "quadrature":
        values = szego.project_weighted_quadrature(f, args.alpha, z)
    else:
        values = szego.rescaled_project(f, args.alpha, args.p, z, args.variant)
    meta = {"alpha": args.alpha, "route": args.route, "n_points": f.grid.n_points}
    return serialize.projection_table(z, values, meta), 0


def cmd_kernel_check(args):
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for _ in range(args.pairs):
        z, w = (args.radius * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()) for _ in range(2))
        k = szego.weighted_kernel(z, w, args.alpha).value
        lhs = weights.g_alpha(z, args.alpha) * k * np.conj(weights.g_alpha(w, args.alpha))
        worst = max(worst, abs(lhs - szego.szego_kernel(z, w)))
    ok = worst <= args.tol
    meta = {"alpha": args.alpha, "pairs": args.pairs, "seed": args.seed, "max_residual": worst, "pass": ok}
    return _meta_table(meta), 0 if ok else 1


def cmd_gram(args):
    grid = make_grid(args.grid_points) if args.grid_points else None
    exact = szego.weighted_kernel(args.z, args.w, args.alpha).value
    rows = []
    for n in args.dimensions:
        gram = szego.GramSystem.build(args.alpha, n, grid)
        approx = szego.weighted_kernel_via_moments(gram, args.z, args.w)
        rows.append((n, float(approx.real), float(approx.imag), float(abs(approx - exact)), float(gram.condition)))
    meta = {"alpha": args.alpha, "z": [args.z.real, args.z.imag], "w": [args.w.real, args.w.imag],
            "closed_form": [exact.real, exact.imag]}
    return serialize.Table(["N", "re", "im", "error", "condition"], rows, meta), 0


def cmd_norm_scan(args):
    coeffs = FourierCoeffs(0, np.array(args.coeffs, dtype=complex))
    radii = args.radii or norms.default_radii()
    means = norms.radial_means(coeffs, args.alpha, args.p, radii)
    monotone = bool(np.all(np.diff(means) >= -norms.RADIAL_SLACK * means[:-1]))
    meta = {"alpha": args.alpha, "p": args.p, "hardy_norm": float(np.max(means) ** (1 / args.p)), "monotone": monotone}
    rows = [(float(r), float(m)) for r, m in zip(radii, means)]
    return serialize.Table(["r", "radial_mean"], rows, meta), 0 if monotone else 1


def cmd_blowup(args):
    report = norms.blowup_scan(args.alpha, args.p, args.grid_sizes, args.budget, args.seed)
    return serialize.blowup_report_table(report), 0


def cmd_duality_check(args):
    grid = make_grid(args.n_points)
    rng = np.random.default_rng(args.seed)
    k = np.arange(-args.degree, args.degree + 1)
    c = rng.standard_normal(k.size) + 1j * rng.standard_normal(k.size)
    h = BoundarySamples(grid, np.exp(1j * np.outer(grid.nodes, k)) @ c)
    rep = duality.representation_check(h, args.alpha, args.p, args.n_tests, args.seed, args.normalization, args.tol)
    return _meta_table(rep.to_dict()), 0 if rep.passed else 1


def cmd_hoelder_fuzz(args):
    grid = make_grid(args.n_points)
    rng = np.random.default_rng(args.seed)
    worst = math.inf
    for _ in range(args.trials):
        f, h = (
            BoundarySamples(grid, rng.standard_normal(grid.n_points) + 1j * rng.standard_normal(grid.n_points))
            for _ in range(2)
        )
        worst = min(worst, duality.hoelder_margin(f, h, args.alpha, args.p))
    ok = worst >= -1e-10
    meta = {"alpha": args.alpha, "p": args.p, "trials": args.trials, "seed": args.seed, "min_margin": worst, "pass": ok}
    return _meta_table(meta), 0 if ok else 1


DEFAULT_FORMAT = {
    "ap-scan": "csv", "project": "csv", "gram": "csv", "norm-scan": "csv", "blowup": "csv",
}


# parser ------------------------------------------------------------------


def _alpha(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError("alpha must be >= 0")
    return value


def _p(text: str) -> float:
    value = float(text)
    if not value > 1:
        raise argparse.ArgumentTypeError("p must exceed 1")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="szego-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key = value file supplying defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--format", choices=["csv", "json"], default=DEFAULT_FORMAT.get(name, "json"))
        return p

    p = add("interval", cmd_interval, "boundedness interval for mu_alpha")
    p.add_argument("--alpha", type=_alpha, required=True)

    p = add("ap-scan", cmd_ap_scan, "clamped A_p quotient ladder and log-log slope")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--p", type=_p, required=True)
    p.add_argument("--deltas", type=_float_list, help="comma-separated decreasing clamps")
    p.add_argument("--eps", type=float, default=muckenhoupt.DEFAULT_SCAN_EPS)
    p.add_argument("--resolution", type=int, default=128)

    p = add("check-all", cmd_check_all, "run the full numerical check suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--only", type=lambda s: [x.strip() for x in s.split(",") if x.strip()],
                   help="comma-separated check names or groups")
    p.add_argument("--corrupt-tolerance", action="store_true", help=argparse.SUPPRESS)

    p = add("project", cmd_project, "weighted projection at interior points")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--points", type=_complex_list, required=True)
    p.add_argument("--input", help="samples CSV (theta,re,im)")
    p.add_argument("--function", choices=sorted(TEST_FUNCTIONS), default="wbar")
    p.add_argument("--n-points", type=_positive_int, default=4096)
    p.add_argument("--route", choices=["fourier", "quadrature", "rescaled"], default="fourier")
    p.add_argument("--method", choices=["auto", "discrete", "series"], default="auto")
    p.add_argument("--variant", choices=["corrected", "literal"], default="corrected")
    p.add_argument("--p", type=_p, default=2.0)

    p = add("kernel-check", cmd_kernel_check, "kernel identity g S_mu conj(g) = S on random pairs")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--pairs", type=_positive_int, default=100)
    p.add_argument("--radius", type=float, default=0.95)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-12)

    p = add("gram", cmd_gram, "moment-matrix kernel against the closed form")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--dimensions", type=_int_list, default=[16, 32, 64, 128])
    p.add_argument("--z", type=complex, default=0j)
    p.add_argument("--w", type=complex, default=0j)
    p.add_argument("--grid-points", type=int, default=0, help="quadrature moments on this grid (0: closed form)")

    p = add("norm-scan", cmd_norm_scan, "radial means and Hardy norm of a power series")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--coeffs", type=_complex_list, default=[1.0])
    p.add_argument("--radii", type=_float_list)

    p = add("blowup", cmd_blowup, "operator-norm lower bounds across grid sizes")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--p", type=_p, required=True)
    p.add_argument("--grid-sizes", type=_int_list, default=[512, 1024, 2048, 4096])
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = add("duality-check", cmd_duality_check, "dual representative residual on random test functions")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--p", type=_p, required=True)
    p.add_argument("--normalization", choices=["fixed", "rescaled"], default="fixed")
    p.add_argument("--n-tests", type=_positive_int, default=32)
    p.add_argument("--n-points", type=_positive_int, default=4096)
    p.add_argument("--degree", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)

    p = add("hoelder-fuzz", cmd_hoelder_fuzz, "Hölder margin on random pairs")
    p.add_argument("--alpha", type=_alpha, required=True)
    p.add_argument("--p", type=_p, required=True)
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--n-points", type=_positive_int, default=512)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _apply_config(parser: argparse.ArgumentParser, argv) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    choices = parser._subparsers._group_actions[0].choices
    command = next((a for a in rest if a in choices), None)
    if not known.config or command is None:
        return
    try:
        cfg = read_config(known.config)
    except (OSError, ValueError) as err:
        parser.error(str(err))
    sub = choices[command]
    known = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, raw in cfg.items():
        action = known.get(key)
        if action is None:
            parser.error(f"config key {key!r} is not an option of {command}")
        try:
            defaults[key] = action.type(raw) if action.type else raw
        except (argparse.ArgumentTypeError, ValueError) as err:
            parser.error(f"config {key}: {err}")
        action.required = False
    sub.set_defaults(**defaults)


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    _apply_config(parser, argv)
    args = parser.parse_args(argv)
    try:
        table, code = args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _emit(table.render(args.format), args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
