"""Batch command line: verify suites, compile generators, run finite checks.

Exit codes: 0 all non-skipped claims verified; 1 at least one failed claim;
2 configuration error; 3 I/O failure; 4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .compiler import CompilationError, Compiler, GENERATING_SETS
from .finite import BudgetExceeded, check_full_generation_mod_p, is_prime
from .verify import FAILED, SKIPPED, run_suite, SUITE_NAMES

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_BUDGET = 4


class ConfigError(ValueError):
    pass


def _parse_genus(text: str) -> list[int]:
    """Accept '8' or a sweep '3..12'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise ValueError
            values = list(range(lo, hi + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise ConfigError(f"bad --genus value {text!r}; expected INT or INT..INT") from None
    for g in values:
        if g < 3:
            raise ConfigError(f"genus {g} unsupported: the model needs genus >= 3")
    return values


def _write_out(path: str | None, payload: dict, as_json: bool) -> None:
    text = json.dumps(payload, indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    elif as_json:
        print(text)


def cmd_verify(args) -> int:
    genera = _parse_genus(args.genus)
    if args.suite not in SUITE_NAMES + ("all",):
        raise ConfigError(
            f"unknown suite {args.suite!r}; expected one of {SUITE_NAMES + ('all',)}"
        )
    jobs, worst = [], EXIT_OK
    for g in genera:
        t0 = time.time()
        cert = run_suite(g, args.suite)
        counts = cert.counts()
        print(
            f"verify suite={args.suite} genus={g}: "
            f"verified={counts['verified']} failed={counts['failed']} "
            f"skipped={counts['skipped']} pass={cert.passed} ({time.time() - t0:.2f}s)"
        )
        for rec in cert.claims:
            if rec.status == FAILED:
                print(f"  FAIL {rec.id}: {rec.anchor}")
            elif rec.status == SKIPPED:
                print(f"  skip {rec.id}: {rec.evidence.get('reason', '')}")
        jobs.append(cert.to_dict())
        if not cert.passed:
            worst = max(worst, EXIT_CLAIM_FAILED)
    payload = jobs[0] if len(jobs) == 1 else {"jobs": jobs}
    _write_out(args.out, payload, args.json)
    return worst


def cmd_compile(args) -> int:
    genera = _parse_genus(args.genus)
    if args.set not in GENERATING_SETS:
        raise ConfigError(
            f"unknown set {args.set!r}; expected one of {sorted(GENERATING_SETS)}"
        )
    gen_set = GENERATING_SETS[args.set]
    jobs, worst = [], EXIT_OK
    for g in genera:
        if g < gen_set.min_genus:
            raise ConfigError(
                f"set {args.set} requires genus >= {gen_set.min_genus} (got {g})"
            )
        t0 = time.time()
        try:
            results = Compiler(args.set, g).compile_all()
        except CompilationError as exc:
            print(f"compile set={args.set} genus={g}: FAILED ({exc})")
            jobs.append({"set": gen_set.name, "genus": g, "error": str(exc)})
            worst = max(worst, EXIT_CLAIM_FAILED)
            continue
        if args.target != "all":
            results = [r for r in results if r.target.text() == args.target]
            if not results:
                raise ConfigError(f"unknown target {args.target!r} at genus {g}")
        print(
            f"compile set={args.set} genus={g}: {len(results)} target(s) verified "
            f"({time.time() - t0:.2f}s)"
        )
        job = {"set": gen_set.name, "genus": g, "targets": []}
        for r in results:
            word = r.word(cap=args.print_cap)
            line = f"  {r.target.text()}: length={r.length} verified={r.verified}"
            if word is not None and len(word) <= 400:
                line += f" word: {word}"
            print(line)
            entry = {
                "target": r.target.text(),
                "length": str(r.length),
                "verified": r.verified,
                "trace": list(r.trace),
            }
            if word is not None:
                entry["word"] = str(word)
            job["targets"].append(entry)
        jobs.append(job)
    payload = jobs[0] if len(jobs) == 1 else {"jobs": jobs}
    _write_out(args.out, payload, args.json)
    return worst


def cmd_spcheck(args) -> int:
    genera = _parse_genus(args.genus)
    if args.set not in GENERATING_SETS:
        raise ConfigError(
            f"unknown set {args.set!r}; expected one of {sorted(GENERATING_SETS)}"
        )
    if not is_prime(args.prime):
        raise ConfigError(f"--prime {args.prime} is not prime")
    if args.method not in ("auto", "bsgs", "orbit"):
        raise ConfigError(f"unknown method {args.method!r}; expected bsgs|orbit|auto")
    jobs, worst = [], EXIT_OK
    for g in genera:
        min_genus = GENERATING_SETS[args.set].min_genus
        if g < min_genus:
            raise ConfigError(f"set {args.set} requires genus >= {min_genus} (got {g})")
        t0 = time.time()
        try:
            result = check_full_generation_mod_p(
                args.set, g, args.prime, method=args.method, budget=args.budget
            )
        except BudgetExceeded as exc:
            print(f"spcheck set={args.set} genus={g} p={args.prime}: budget exceeded")
            jobs.append({"set": args.set, "genus": g, "prime": args.prime,
                         "status": "budget-exceeded", "partial": exc.partial})
            worst = max(worst, EXIT_BUDGET)
            continue
        numbers = []
        if result.order is not None:
            numbers.append(f"order={result.order}")
        if result.orbit is not None:
            numbers.append(f"orbit={result.orbit}")
        print(
            f"spcheck set={args.set} genus={g} p={args.prime} method={result.method}: "
            f"{result.status} {' '.join(numbers)} ({time.time() - t0:.2f}s)"
        )
        jobs.append(result.as_dict())
        if result.status != "verified":
            worst = max(worst, EXIT_CLAIM_FAILED)
    payload = jobs[0] if len(jobs) == 1 else {"jobs": jobs}
    _write_out(args.out, payload, args.json)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistcert",
        description="Exact verification of twist-word identities and involution generating sets",
    )
    parser.add_argument("--version", action="version", version=f"twistcert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a claim suite and write a certificate")
    p_verify.add_argument("--genus", required=True, help="INT or INT..INT")
    p_verify.add_argument("--suite", default="all", help="|".join(SUITE_NAMES + ("all",)))
    p_verify.add_argument("--out", default=None, help="write the certificate JSON here")
    p_verify.add_argument("--json", action="store_true", help="print the certificate JSON")
    p_verify.set_defaults(func=cmd_verify)

    p_compile = sub.add_parser("compile", help="compile twist generators over a set")
    p_compile.add_argument("--genus", required=True, help="INT or INT..INT")
    p_compile.add_argument("--set", required=True, help="|".join(sorted(GENERATING_SETS)))
    p_compile.add_argument("--target", default="all", help="A3, B1, ... or all")
    p_compile.add_argument("--print-cap", type=int, default=100_000,
                           help="max letters to materialize per word")
    p_compile.add_argument("--out", default=None)
    p_compile.add_argument("--json", action="store_true")
    p_compile.set_defaults(func=cmd_compile)

    p_sp = sub.add_parser("spcheck", help="finite symplectic quotient checks")
    p_sp.add_argument("--genus", required=True, help="INT or INT..INT")
    p_sp.add_argument("--set", required=True)
    p_sp.add_argument("--prime", type=int, required=True)
    p_sp.add_argument("--method", default="auto", help="bsgs|orbit|auto")
    p_sp.add_argument("--budget", type=int, default=None, help="work-unit budget")
    p_sp.add_argument("--out", default=None)
    p_sp.add_argument("--json", action="store_true")
    p_sp.set_defaults(func=cmd_spcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is not None and args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
