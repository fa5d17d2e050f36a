"""Command-line interface.

Exit codes: 0 on success, 1 when a verification ran but failed its
tolerance, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys

from . import gauss, hecke, suites, weyl
from .numtheory import NotCoprimeError
from .propagator import propagator_json
from .sl2 import Mat2, decompose, format_word


def _parse_dims(text: str) -> list[int]:
    """Dimension lists: "8", "1,2,4" or "1..16"."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        dims = list(range(int(lo), int(hi) + 1))
    elif "," in text:
        dims = [int(t) for t in text.split(",") if t.strip()]
    else:
        dims = [int(text)]
    if not dims or any(d < 1 for d in dims):
        raise ValueError(f"invalid dimension list: {text!r}")
    return dims


def _parse_mode(text: str) -> tuple[int, int]:
    parts = [int(t) for t in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"a mode needs two components: {text!r}")
    return parts[0], parts[1]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _report_line(rep: suites.SweepReport) -> str:
    status = "PASS" if rep.passed else "FAIL"
    line = (f"[{status}] {rep.name}: {rep.samples} samples, "
            f"max error {rep.max_error:.3e} (tol rate {rep.tol:.0e})")
    if rep.note:
        line += f" -- {rep.note}"
    return line


def _cmd_propagator(args) -> int:
    m = Mat2.from_string(args.matrix)
    print(json.dumps(propagator_json(m, args.dim)))
    return 0


def _cmd_decompose(args) -> int:
    m = Mat2.from_string(args.matrix)
    word = decompose(m)
    payload = {"matrix": list(m.entries()), "word": word, "length": len(word)}
    _emit(args, payload, format_word(word) if word else "(identity)")
    return 0


def _cmd_gauss(args) -> int:
    p = gauss.GaussParams(args.alpha, args.beta, args.gamma)
    payload = {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma,
               "nonvanishing": gauss.is_nonvanishing(p)}
    lines = []
    direct = closed = None
    if args.method in ("direct", "both"):
        direct = gauss.gauss_direct(p)
        payload["direct"] = [direct.real, direct.imag]
        lines.append(f"direct  {direct:.12g}")
    if args.method in ("closed", "both"):
        if math.gcd(p.alpha, p.beta) != 1:
            raise NotCoprimeError("closed form requires gcd(alpha, beta) = 1")
        closed = gauss.gauss_closed(p) if gauss.is_nonvanishing(p) else 0j
        payload["closed"] = [closed.real, closed.imag]
        lines.append(f"closed  {closed:.12g}")
    rc = 0
    if direct is not None and closed is not None:
        diff = abs(direct - closed)
        payload["difference"] = diff
        lines.append(f"difference  {diff:.3e}")
        rc = 0 if diff < suites.GAUSS_ORACLE_TOL else 1
    _emit(args, payload, "\n".join(lines))
    return rc


def _cmd_egorov(args) -> int:
    m = Mat2.from_string(args.matrix)
    n = args.dim
    if args.mode is not None:
        mode = _parse_mode(args.mode)
        rep = weyl.verify_egorov(m, n, {mode: 1.0},
                                 tol_scale=args.tolerance_scale)
        err, tol, passed = rep.max_error, rep.tol, rep.passed
    else:
        err = float(weyl.egorov_mode_errors(m, n).max())
        tol = weyl.EGOROV_TOL * n * args.tolerance_scale
        passed = err < tol
    payload = {"matrix": list(m.entries()), "N": n, "max_error": err,
               "tol": tol, "passed": passed}
    status = "PASS" if passed else "FAIL"
    _emit(args, payload, f"[{status}] egorov: max error {err:.3e} (tol {tol:.1e})")
    return 0 if passed else 1


def _cmd_hecke(args) -> int:
    m = Mat2.from_string(args.matrix)
    rep = hecke.verify_hecke(m, args.dim, samples=args.samples,
                             cap=args.max_4n, seed=args.seed,
                             tol_scale=args.tolerance_scale)
    payload = dataclasses.asdict(rep)
    status = "PASS" if rep.passed else "FAIL"
    text = (f"[{status}] hecke: commutant size {rep.commutant_size}, "
            f"{rep.checked} lifted, max error "
            f"{max(rep.max_error_vs_a, rep.max_pairwise_error):.3e} "
            f"(tol {rep.tol:.1e})")
    _emit(args, payload, text)
    return 0 if rep.passed else 1


def _cmd_verify(args) -> int:
    dims = _parse_dims(args.dims) if args.dims else None
    top = max(dims) if dims else None
    ts = args.tolerance_scale
    reports = []

    def want(name: str) -> bool:
        return args.what in (name, "all")

    if want("mult"):
        reports.append(suites.multiplicativity_sweep(
            pairs=args.samples or 500, max_dim=top or 32,
            seed=args.seed, tol_scale=ts))
    if want("relations"):
        reports.append(suites.relations_sweep(dims=dims, tol_scale=ts))
    if want("gauss-oracle"):
        reports.append(suites.gauss_oracle_sweep(max_abs=args.max_beta))
    if want("substitution"):
        reports.append(suites.substitution_sweep(
            samples=args.samples or 500, max_dim=top or 32, seed=args.seed))
    if want("h-identity"):
        reports.append(suites.h_identity_sweep(
            samples=args.samples or 500, seed=args.seed))
    if want("egorov"):
        reports.append(suites.egorov_sweep(
            samples=args.samples or 100, max_dim=top or 16,
            seed=args.seed, tol_scale=ts))
    if want("mod4n"):
        reports.append(suites.mod4n_sweep(
            pairs=args.samples or 100, max_dim=top or 16,
            seed=args.seed, tol_scale=ts))
    if want("mod2n"):
        reports.append(suites.mod2n_sweep(
            pairs=args.samples or 100, max_dim=top or 16,
            seed=args.seed, tol_scale=ts))
    if want("decompose"):
        reports.append(suites.decomposition_sweep(
            words=args.samples or 1000, max_dim=top or 16,
            seed=args.seed, tol_scale=ts))
    if want("hecke"):
        reports.append(suites.hecke_sweep(
            max_dim=min(top, 8) if top else 8, seed=args.seed,
            cap=args.max_4n, tol_scale=ts))
    if want("unitarity"):
        reports.append(suites.unitarity_sweep(
            samples=args.samples or 64, max_dim=top or 64,
            seed=args.seed, tol_scale=ts))

    if args.format == "json":
        print(json.dumps([dataclasses.asdict(r) for r in reports]))
    else:
        for rep in reports:
            print(_report_line(rep))
    return 0 if all(r.passed for r in reports) else 1


VERIFY_CHOICES = ("mult", "relations", "gauss-oracle", "substitution",
                  "h-identity", "egorov", "mod4n", "mod2n", "decompose",
                  "hecke", "unitarity", "all")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for the pseudorandom samples")
    common.add_argument("--samples", type=int, default=None,
                        help="number of samples (default depends on the task)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--tolerance-scale", dest="tolerance_scale",
                        type=float, default=1.0,
                        help="multiply every tolerance by this factor")

    parser = argparse.ArgumentParser(
        prog="qcatmap",
        description="quantized cat maps: propagators, Gauss sums and "
                    "their exact identities")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("propagator", parents=[common],
                       help="build a propagator and print it as JSON")
    p.add_argument("--matrix", required=True, help='entries "a,b,c,d"')
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=_cmd_propagator)

    p = sub.add_parser("decompose", parents=[common],
                       help="write a matrix as a word in the generators")
    p.add_argument("--matrix", required=True, help='entries "a,b,c,d"')
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("gauss", parents=[common],
                       help="evaluate a quadratic exponential sum")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--method", choices=("closed", "direct", "both"),
                   default="both")
    p.set_defaults(func=_cmd_gauss)

    p = sub.add_parser("egorov", parents=[common],
                       help="check exact conjugation of Weyl modes")
    p.add_argument("--matrix", required=True, help='entries "a,b,c,d"')
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--mode", default=None, help='mode "n1,n2" (default: all)')
    p.set_defaults(func=_cmd_egorov)

    p = sub.add_parser("hecke", parents=[common],
                       help="lift a commuting family and check it")
    p.add_argument("--matrix", required=True, help='entries "a,b,c,d"')
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-4n", dest="max_4n", type=int, default=64,
                   help="refuse commutant enumeration above this 4N")
    p.set_defaults(func=_cmd_hecke)

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification sweep")
    p.add_argument("what", choices=VERIFY_CHOICES)
    p.add_argument("--dims", default=None,
                   help='dimensions: "8", "1,2,4" or "1..16"')
    p.add_argument("--max-beta", dest="max_beta", type=int, default=40,
                   help="parameter box for the Gauss-sum oracle sweep")
    p.add_argument("--max-4n", dest="max_4n", type=int, default=64,
                   help="refuse commutant enumeration above this 4N")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
