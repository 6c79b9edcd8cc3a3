"""Command-line entry point: ``zcz generate | profile | verify``."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .analysis import verify_paper_claims
from .construction import MAX_N, build_frank_sequence, build_zcz_sequence
from .correlation import auto_profile
from .fileio import SequenceFile, SequenceFileError, dumps_csv, dumps_json, load_sequence, profile_csv

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def cmd_generate(args) -> int:
    if args.construction == "zcz":
        if args.n is None:
            raise ValueError("--n is required for the zcz construction")
        seq = build_zcz_sequence(args.n, args.variant)
        meta = {"construction": "zcz", "n": args.n, "variant": args.variant}
    else:
        if args.d is None or args.d < 1:
            raise ValueError("--d must be a positive integer for the frank construction")
        seq = build_frank_sequence(args.d)
        meta = {"construction": "frank", "d": args.d}
    sf = SequenceFile(seq, meta)
    _emit(dumps_json(sf) if args.format == "json" else dumps_csv(sf), args.out)
    return EXIT_OK


def cmd_profile(args) -> int:
    sf = load_sequence(args.input, args.modulus)
    prof = auto_profile(sf.sequence, args.method, tol=args.tol)
    _emit(profile_csv(prof), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_min < 0 or args.n_max < args.n_min:
        raise ValueError("need 0 <= --n-min <= --n-max")
    if args.n_max > MAX_N:
        raise ValueError(f"--n-max exceeds supported maximum {MAX_N}")
    results = [verify_paper_claims(n, args.variant, args.tol)
               for n in range(args.n_min, args.n_max + 1)]
    ok = all(r.passed for r in results)
    report = {
        "variant": args.variant,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "tol": args.tol,
        "passed": ok,
        "results": [r.to_dict() for r in results],
    }
    _emit(json.dumps(report, indent=2) + "\n", args.report)
    for r in results:
        failed = [k for k, v in r.checks.items() if v is False]
        status = "ok" if r.passed else "FAIL " + ",".join(failed)
        print(f"n={r.n} L={r.period} shifts={r.measured_shifts} {status}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcz", description="Periodic ZCZ sequences over roots of unity")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a sequence file")
    g.add_argument("--construction", choices=["zcz", "frank"], default="zcz")
    g.add_argument("--n", type=int, help="zcz parameter, n >= 0")
    g.add_argument("--variant", choices=["floor", "ceiling"], default="floor")
    g.add_argument("--d", type=int, help="frank parameter, d >= 1")
    g.add_argument("--format", choices=["json", "csv"], default="json")
    g.add_argument("--out", help="output path (default: stdout)")
    g.set_defaults(func=cmd_generate)

    p = sub.add_parser("profile", help="autocorrelation profile as CSV")
    p.add_argument("--in", dest="input", required=True, help="sequence file (json or csv)")
    p.add_argument("--method", choices=["direct", "transform"], default="direct")
    p.add_argument("--tol", type=float, default=None,
                   help="absolute zero tolerance (default: 1e-9 * L)")
    p.add_argument("--modulus", type=int, default=None,
                   help="modulus for CSV files without a '# modulus=' line")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_profile)

    v = sub.add_parser("verify", help="check the construction's claims over a range of n")
    v.add_argument("--n-min", type=int, default=0)
    v.add_argument("--n-max", type=int, default=5)
    v.add_argument("--variant", choices=["floor", "ceiling"], default="floor")
    v.add_argument("--tol", type=float, default=None,
                   help="absolute zero tolerance (default: 1e-9 * L per n)")
    v.add_argument("--report", help="JSON report path (default: stdout)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError, SequenceFileError) as exc:
        print(f"zcz {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"zcz {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
