"""
Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field

from .permutations import PermutationParseError, all_permutations, parse_permutation
from .schubert import build_schubert_table
from .sl2 import multiplicities
from .stanley import verify_stanley
from .verify import DEFAULT_SEED, SUITES, Check, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

MAX_N_CONSTRUCT = 8
MAX_N_VERIFY = 7
# tighter runtime guards per suite; all lifted by --max-n-override
SUITE_MAX_N = {"stanley": 6, "macdonald": 6}


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    params: dict
    items: list[dict] = field(default_factory=list)
    passed: bool = True
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        return {"command": self.command, "params": self.params, "items": self.items,
                "passed": self.passed, "elapsed_ms": round(self.elapsed_ms, 3)}


def _check_n(n: int, cap: int, override: bool, what: str):
    if n < 1:
        raise UsageError(f"--n must be at least 1, got {n}")
    if n > cap and not override:
        raise UsageError(f"{what} is capped at n={cap}; pass --max-n-override to run n={n}")


def cmd_schubert(args) -> tuple[Report, list[str]]:
    _check_n(args.n, MAX_N_CONSTRUCT, args.max_n_override, "construction")
    if args.perm is not None:
        try:
            perms = [parse_permutation(args.perm, args.n)]
        except PermutationParseError as exc:
            raise UsageError(str(exc)) from None
    else:
        perms = sorted(all_permutations(args.n), key=lambda w: (w.length(), w.values))
    table = build_schubert_table(args.n)
    report = Report("schubert", {"n": args.n, "perm": args.perm})
    lines = []
    for w in perms:
        f = table[w]
        report.items.append({"perm": list(w.values), "length": w.length(),
                             "text": str(f), "terms": f.to_json()})
        lines.append(str(f) if args.perm is not None else f"{w}\t{f}")
    return report, lines


def cmd_verify(args) -> tuple[Report, list[str]]:
    _check_n(args.n, MAX_N_VERIFY, args.max_n_override, "verification")
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    for s in suites:
        if s in SUITE_MAX_N:
            _check_n(args.n, SUITE_MAX_N[s], args.max_n_override, f"suite {s!r}")
    report = Report("verify", {"n": args.n, "suite": args.suite, "seed": args.seed})
    lines = []
    checks: list[Check] = []
    for s in suites:
        checks.extend(run_suite(s, args.n, seed=args.seed))
    for c in checks:
        report.items.append(c.to_json())
        extra = " ".join(f"{k}={v}" for k, v in c.values.items())
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status} {c.name} {c.witness}" + (f" {extra}" if extra else ""))
    report.passed = all(c.passed for c in checks)
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    return report, lines


def cmd_stanley_det(args) -> tuple[Report, list[str]]:
    _check_n(args.n, MAX_N_VERIFY, args.max_n_override, "stanley-det")
    top = math.comb(args.n, 2)
    if args.ell is None or not 0 <= args.ell <= top - args.ell:
        raise UsageError(f"--ell must satisfy 0 <= l <= C(n,2) - l = {top} - l")
    rep = verify_stanley(args.n, args.ell)
    report = Report("stanley-det", {"n": args.n, "ell": args.ell},
                    [rep.to_json()], rep.equal)
    lines = [f"n={rep.n} l={rep.ell} det_abs={rep.det_abs} rhs={rep.rhs} "
             f"equal={rep.equal} sign={rep.sign:+d}"]
    return report, lines


def cmd_multiplicities(args) -> tuple[Report, list[str]]:
    _check_n(args.n, MAX_N_CONSTRUCT, args.max_n_override, "multiplicities")
    dec = multiplicities(args.n)
    report = Report("multiplicities", {"n": args.n}, [dec.to_json()], dec.dim_check)
    lines = [f"V_{dec.highest_weight(k)} x {m}" for k, m in dec.parts]
    lines.append(f"dimension {dec.dimension} = {args.n}!: {dec.dim_check}")
    return report, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-nabla",
        description="Schubert polynomials, the nabla operator, and Stanley's determinants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=["text", "json", "json-like"], default="text")
        p.add_argument("--max-n-override", action="store_true",
                       help="lift the default caps on n")

    p = sub.add_parser("schubert", help="print Schubert polynomials")
    common(p)
    p.add_argument("--perm", help='permutation, e.g. "3,2,1" or "321"')
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stanley-det", help="compare |det M~(l)| with the product formula")
    common(p)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_stanley_det)

    p = sub.add_parser("multiplicities", help="decompose W into irreducible sl2 modules")
    common(p)
    p.set_defaults(func=cmd_multiplicities)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    start = time.perf_counter()
    try:
        report, lines = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    if args.format == "text":
        print("\n".join(lines))
    else:
        print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK if report.passed else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
