"""Command line front end.

Exit codes: 0 success, 2 validation, 3 numerical error, 4 budget, 5 reference miss.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .config import ExperimentConfig, load_config, parse_ints
from .cycles import check_hadamard, find_extreme_cycles
from .dirichlet import kernel_norm_series
from .errors import BudgetExceeded, MockFourierError, ValidationError
from .expsum import qmf_check
from .ifs import validate_system
from .mahler import mahler_quadrature, mahler_roots, poly_from_L, roots, search_dr
from .reference import JP_B, JP_R, JP_TABLE
from .ruelle import delta_estimate
from .spectrum import level_stats, spectrum_level

EXIT_VALIDATION, EXIT_MATH, EXIT_BUDGET, EXIT_MISS = 2, 3, 4, 5
WORD_TOL, ELTON_TOL = 1e-2, 1.5e-2


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".9g")
    if isinstance(v, (tuple, list)):
        return ",".join(map(str, v))
    return str(v)


def write_table(out, header: Sequence[tuple], columns: Sequence[str], rows, fmt_name: str = "csv") -> str:
    """Render rows with a parameter header; write to ``out`` (path) or return the text."""
    if fmt_name == "json":
        payload = {
            "header": {k: (list(v) if isinstance(v, tuple) else v) for k, v in header},
            "columns": list(columns),
            "rows": [list(r) for r in rows],
        }
        text = json.dumps(payload) + "\n"
    else:
        buf = io.StringIO()
        for k, v in header:
            buf.write(f"# {k}={fmt(v)}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(v) for v in r])
        text = buf.getvalue()
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    return text


def _emit(cfg: ExperimentConfig, text: str) -> None:
    if not cfg.out:
        sys.stdout.write(text)


def _header(verb: str, cfg: ExperimentConfig, **extra):
    items = [("tool", f"mockfourier {verb}")]
    items += [(k, v) for k, v in cfg.items() if k not in ("out",)]
    items += list(extra.items())
    return items


def cycles_text(cycles) -> str:
    return "; ".join(str(c) for c in cycles)


def cmd_check(cfg: ExperimentConfig) -> int:
    system = cfg.system()
    pair = check_hadamard(system, cfg.L or ())
    rng = np.random.default_rng(cfg.seed)
    xs = rng.uniform(0.0, 1.0, 100)
    qb, ql = qmf_check(pair, xs)
    qmf_err = float(max(np.max(np.abs(qb - 1)), np.max(np.abs(ql - 1))))
    print(f"R={system.R} B={fmt(system.B)} L={fmt(pair.L)}")
    print(f"N={system.N} d={system.d} dim={system.hausdorff_dim:.9g}")
    print(f"unitarity defect={pair.unitarity_defect:.3e}")
    print(f"qmf max deviation (100 points, seed {cfg.seed})={qmf_err:.3e}")
    print("hadamard: ok")
    return 0


def cmd_cycles(cfg: ExperimentConfig) -> int:
    print(cycles_text(find_extreme_cycles(cfg.pair())))
    return 0


def cmd_spectrum(cfg: ExperimentConfig) -> int:
    pair = cfg.pair()
    n = cfg.n if cfg.n is not None else 1
    level = spectrum_level(pair, n)
    st = level_stats(level)
    elements = [e.numerator if e.denominator == 1 else str(e) for e in level.elements]
    header = _header("spectrum", cfg, level=n, cardinality=st.cardinality, min=str(st.min), max=str(st.max))
    text = write_table(cfg.out, header, ["lambda"], [[e] for e in elements], cfg.format)
    _emit(cfg, text)
    return 0


def cmd_delta(cfg: ExperimentConfig) -> int:
    pair = cfg.pair()
    est = delta_estimate(
        pair, cfg.backend, depth=cfg.depth or 22, orbit_length=cfg.orbit_length,
        burn_in=cfg.burn_in, seed=cfg.seed,
    )
    print(f"{pair.label()} method={est.method} depth={fmt(est.depth)} "
          f"orbit={fmt(est.orbit_length)} seed={fmt(est.seed)}")
    print(f"delta={est.value:.9g} clamped={est.clamp_count}/{est.n_samples} sqrt(N)={math.sqrt(pair.N):.9g}")
    return 0


def cmd_norms(cfg: ExperimentConfig) -> int:
    pair = cfg.pair()
    n_max = cfg.n if cfg.n is not None else 8
    series = kernel_norm_series(
        pair, range(n_max + 1), backend=cfg.backend, margin=cfg.margin, depth=cfg.depth,
        orbit_length=cfg.orbit_length, burn_in=cfg.burn_in, seed=cfg.seed,
    )
    rho = series.fitted_rho if n_max >= 5 else None
    rows = [(n, norm, math.log(norm), b, m, s) for n, norm, b, m, s in series.entries]
    header = _header("norms", cfg, fitted_rho=rho)
    text = write_table(cfg.out, header, ["n", "norm", "log_norm", "backend", "depth", "seed"], rows, cfg.format)
    _emit(cfg, text)
    if cfg.out and rho is not None:
        print(f"fitted_rho={rho:.9g}")
    return 0


def cmd_mahler(args) -> int:
    p = poly_from_L(parse_ints(args.L))
    print(f"p(z) = {p}")
    if p.degree:
        for z in roots(p).roots:
            print(f"root {z.real:+.9f} {z.imag:+.9f}i |z|={abs(z):.9g}")
    value, clamps = mahler_quadrature(p, args.K, return_clamps=True)
    print(f"mahler_roots={mahler_roots(p):.9g}")
    print(f"mahler_quadrature={value:.9g} K={args.K} clamped={clamps}")
    return 0


def cmd_search_dr(args) -> int:
    results = search_dr(args.R, args.bound, args.top)
    header = [("tool", "mockfourier search-dr"), ("R", args.R), ("digit_bound", args.bound),
              ("top", args.top), ("sqrt_R", math.sqrt(args.R))]
    rows = [(";".join(map(str, L)), v) for L, v in results]
    text = write_table(args.out, header, ["L", "delta"], rows, args.format)
    if not args.out:
        sys.stdout.write(text)
    return 0


def reproduce_rows(backend: str = "word", depth: int = 22, orbit_length: int = 10**6,
                   burn_in: int = 1000, seed: int = 0):
    system = validate_system(JP_R, JP_B)
    tol = WORD_TOL if backend == "word" else ELTON_TOL
    rows = []
    for p, (ref, ref_cycles) in JP_TABLE.items():
        pair = check_hadamard(system, (0, p))
        est = delta_estimate(pair, backend, depth=depth, orbit_length=orbit_length, burn_in=burn_in, seed=seed)
        nontrivial = [c for c in find_extreme_cycles(pair) if c.points != (0,)]
        found = tuple(tuple(int(x) if x.denominator == 1 else x for x in c.points) for c in nontrivial)
        err = abs(est.value - ref)
        match = err <= tol and found == ref_cycles
        show = lambda cs: " ".join("{" + ",".join(map(str, c)) + "}" for c in cs) or "none"
        rows.append((p, est.value, ref, err, show(found), show(ref_cycles), "yes" if match else "no"))
    return rows


def cmd_reproduce_table(cfg: ExperimentConfig) -> int:
    depth = cfg.depth or 22
    rows = reproduce_rows(cfg.backend, depth, cfg.orbit_length, cfg.burn_in, cfg.seed)
    tol = WORD_TOL if cfg.backend == "word" else ELTON_TOL
    cfg = cfg.merged(R=JP_R, B=JP_B, depth=depth)
    header = _header("reproduce-table", cfg, tolerance=tol)
    cols = ["p", "delta_est", "delta_paper", "abs_err", "cycles_found", "cycles_paper", "match"]
    text = write_table(cfg.out, header, cols, rows, cfg.format)
    _emit(cfg, text)
    ok = sum(r[-1] == "yes" for r in rows)
    misses = [str(r[0]) for r in rows if r[-1] != "yes"]
    print(f"rows within tolerance: {ok}/{len(rows)}" + (f" (miss: p={','.join(misses)})" if misses else ""),
          file=sys.stderr if not cfg.out else sys.stdout)
    return 0 if ok == len(rows) else EXIT_MISS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value config file; flags override it")
    common.add_argument("--R", type=int)
    common.add_argument("--B", type=parse_ints, help="comma-joined integers")
    common.add_argument("--L", type=parse_ints, help="comma-joined integers")
    common.add_argument("--backend", choices=["word", "elton"])
    common.add_argument("--depth", type=int)
    common.add_argument("--orbit", dest="orbit_length", type=int)
    common.add_argument("--burn-in", dest="burn_in", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--margin", type=int)
    common.add_argument("--out")
    common.add_argument("--format", choices=["csv", "json"])

    parser = argparse.ArgumentParser(prog="mockfourier", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in ("check", "cycles", "spectrum", "delta", "norms", "reproduce-table"):
        sub.add_parser(verb, parents=[common])
    mp = sub.add_parser("mahler")
    mp.add_argument("--L", required=True, help="comma-joined exponents")
    mp.add_argument("--K", type=int, default=2**20)
    sp = sub.add_parser("search-dr")
    sp.add_argument("--R", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True, help="largest allowed digit")
    sp.add_argument("--top", type=int, default=10)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


_CONFIG_KEYS = ("R", "B", "L", "backend", "depth", "orbit_length", "burn_in", "seed", "n", "margin", "out", "format")

COMMANDS = {
    "check": cmd_check,
    "cycles": cmd_cycles,
    "spectrum": cmd_spectrum,
    "delta": cmd_delta,
    "norms": cmd_norms,
    "reproduce-table": cmd_reproduce_table,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "mahler":
            return cmd_mahler(args)
        if args.verb == "search-dr":
            return cmd_search_dr(args)
        cfg = load_config(args.config) if args.config else ExperimentConfig()
        cfg = cfg.merged(**{k: getattr(args, k) for k in _CONFIG_KEYS})
        return COMMANDS[args.verb](cfg)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except MockFourierError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
