"""Command-line front end.

Subcommands: trace, verify, check, attain, region.  Identical inputs and
seeds produce byte-identical output.  Exit codes: 0 success, 1 parse or
configuration error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .engine import TraceEngine
from .region import TracePoint, in_region
from .surjectivity import (
    METHOD_ATTAINS,
    SearchParams,
    SurjectivityCertificate,
    VERDICT_CERTIFIED,
    VERDICT_NO_WITNESS,
    VERDICT_NUMERIC,
    attains_minus_two,
    check_family,
    find_witness,
    DEFAULT_STEP,
    DEFAULT_TOL,
)
from .verify import run_all
from .words import WordSyntaxError, parse_word, render


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract reserves 2 for
    # verification failures and 1 for parse/config problems
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="su2words", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("trace", parents=[], help="Fricke trace polynomial of a word")
    t.add_argument("word", help="word text, e.g. '[a,b]' or 'a^3 b^-2'")
    _common_flags(t)

    v = sub.add_parser("verify", help="run the identity cross-check suite")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--samples", type=int, default=1000)
    _common_flags(v)

    c = sub.add_parser("check", help="surjectivity certificates for [[a,b],[a^m,b^n]]")
    c.add_argument("--m", type=int, required=True)
    group = c.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--n-max", type=int)
    _search_flags(c)
    _common_flags(c)

    a = sub.add_parser("attain", help="find a point where the trace map reaches -2")
    a.add_argument("word")
    a.add_argument("--dump-residuals", metavar="CSV",
                   help="write the grid values of the trace map to a CSV file")
    _search_flags(a)
    _common_flags(a)

    r = sub.add_parser("region", help="membership of (x, y, z) in the trace region")
    r.add_argument("x")
    r.add_argument("y")
    r.add_argument("z")
    r.add_argument("--tol", type=float, default=0.0)
    _common_flags(r)
    return p


def _common_flags(p):
    p.add_argument("--format", choices=("table", "json"), default="table")


def _search_flags(p):
    p.add_argument("--step", type=float, default=DEFAULT_STEP)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)


def cmd_trace(args) -> int:
    w = parse_word(args.word)
    poly = TraceEngine().trace_poly(w)
    if args.format == "json":
        out = {"word": render(w), "text": poly.to_text()}
        out.update(poly.to_json_dict())
        print(json.dumps(out))
    else:
        print(poly.to_text())
        print(json.dumps(poly.to_json_dict()))
    return 0


def cmd_verify(args) -> int:
    results = run_all(seed=args.seed, samples=args.samples)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "seed": args.seed,
                    "samples": args.samples,
                    "checks": [
                        {
                            "name": r.name,
                            "passed": r.passed,
                            "max_error": r.max_error,
                            "threshold": r.threshold,
                        }
                        for r in results
                    ],
                    "passed": not failed,
                }
            )
        )
    else:
        for r in results:
            print(r.line())
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 2 if failed else 0


def cmd_check(args) -> int:
    if args.m < 1:
        raise SystemExit(1)
    n_values = [args.n] if args.n is not None else list(range(1, args.n_max + 1))
    certs = check_family(
        args.m, n_values, step=args.step, tol=args.tol, jobs=args.jobs
    )
    if args.format == "json":
        for cert in certs:
            print(json.dumps(cert.to_json_dict()))
    else:
        print(f"{'n':>4} {'n%3':>4} {'verdict':22} {'witness':34} {'residual':>10}")
        for cert in certs:
            wtxt = _witness_text(cert.witness)
            res = "-" if cert.verdict == VERDICT_NO_WITNESS else f"{cert.residual:.1e}"
            print(
                f"{cert.n:>4} {cert.n % 3:>4} {cert.verdict:22} {wtxt:34} {res:>10}"
            )
    return 0


def _witness_text(witness: TracePoint | None) -> str:
    if witness is None:
        return "-"
    vals = []
    for v in witness:
        vals.append(str(v) if witness.exact else f"{float(v):.6f}")
    return "(" + ", ".join(vals) + ")"


def cmd_attain(args) -> int:
    w = parse_word(args.word)
    engine = TraceEngine()
    if args.dump_residuals:
        _dump_residuals(engine, w, args.step, args.jobs, args.dump_residuals)
    point = attains_minus_two(w, step=args.step, tol=args.tol, engine=engine,
                              jobs=args.jobs)
    params = SearchParams(step=args.step, tol=args.tol, jobs=args.jobs)
    if point is None:
        verdict, residual = VERDICT_NO_WITNESS, float("inf")
    else:
        f_w = engine.trace_poly(w)
        residual = abs(float((f_w + 2).eval_exact(*(Fraction(v) for v in point))))
        verdict = VERDICT_CERTIFIED if point.exact else VERDICT_NUMERIC
    cert = SurjectivityCertificate(
        word=w,
        verdict=verdict,
        witness=point,
        residual=residual,
        method=METHOD_ATTAINS,
        params=params,
    )
    if args.format == "json":
        print(json.dumps(cert.to_json_dict()))
    else:
        print(f"word     {render(w)}")
        print(f"verdict  {cert.verdict}")
        print(f"witness  {_witness_text(point)}")
        print(f"residual {cert.residual}")
    return 0


def _dump_residuals(engine, w, step, jobs, path):
    """Optional CSV dump of the trace-map landscape over the dilated grid."""
    from .surjectivity import _oracle_grid

    f_grid = _oracle_grid(step, jobs)
    values = f_grid.word_traces(w)
    with open(path, "w") as fh:
        fh.write("x,y,z,trace\n")
        for i in range(len(values)):
            fh.write(
                f"{f_grid.x[i]!r},{f_grid.y[i]!r},{f_grid.z[i]!r},{values[i]!r}\n"
            )


def _parse_coordinate(text: str):
    try:
        if "/" in text or "." not in text:
            return Fraction(text)
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise WordSyntaxError(f"bad coordinate {text!r}", 0) from exc


def cmd_region(args) -> int:
    coords = tuple(_parse_coordinate(t) for t in (args.x, args.y, args.z))
    point = TracePoint(*coords)
    member = in_region(point, args.tol)
    kap = point.kappa()
    if args.format == "json":
        out = {"point": point.to_json_dict(), "kappa": str(kap) if point.exact else kap,
               "tol": args.tol, "in_region": member}
        print(json.dumps(out))
    else:
        print(f"point     {_witness_text(point)}")
        print(f"kappa     {kap}")
        print(f"in_region {str(member).lower()}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "trace": cmd_trace,
        "verify": cmd_verify,
        "check": cmd_check,
        "attain": cmd_attain,
        "region": cmd_region,
    }
    try:
        code = handlers[args.command](args)
    except WordSyntaxError as exc:
        print(f"su2words: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"su2words: {exc}", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
