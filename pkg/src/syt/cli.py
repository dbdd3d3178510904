"""``syt`` command line.

Exit codes: 0 success, 1 a checked property failed, 2 usage or parse error,
3 enumeration limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import checks, csp, descent, dynamics, embedding
from .core import (
    DEFAULT_ENUMERATION_LIMIT,
    EnumerationLimitError,
    ShapeError,
    TableauError,
    parse_shape,
    parse_tableau,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

OPS = ["promote", "dual-promote", "evacuate", "dual-evacuate", "transpose"]
ORBIT_OPS = ["promote", "dual-promote", "evacuate", "dual-evacuate"]


class UsageError(Exception):
    pass


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _tableau(text: str):
    try:
        return parse_tableau(text)
    except (TableauError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad tableau: {exc}") from None


def _shape(text: str):
    try:
        return parse_shape(text)
    except ShapeError as exc:
        raise UsageError(f"bad shape: {exc}") from None


def cmd_apply(args) -> int:
    t = _tableau(args.tableau)
    path = None
    if args.op in ("promote", "dual-promote"):
        if args.show_path and args.power != 1:
            raise UsageError("--show-path needs --power 1")
        if args.show_path:
            fn = dynamics.promote if args.op == "promote" else dynamics.dual_promote
            result, path = fn(t)
        else:
            result = dynamics.apply_power(t, args.op, args.power)
    else:
        if args.show_path:
            raise UsageError(f"{args.op} has no sliding path")
        # every remaining operator is an involution
        result = t
        for _ in range(abs(args.power) % 2):
            result = dynamics.apply_operator(result, args.op)
    lines = [str(result)] + ([str(path)] if path else [])
    payload = {"tableau": result.to_json()}
    if path:
        payload["path"] = [list(c) for c in path.cells]
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_embed(args) -> int:
    s = _tableau(args.tableau)
    try:
        r = embedding.embed_wide(s) if args.wide else embedding.embed(s)
    except ShapeError as exc:
        raise UsageError(str(exc)) from None
    payload = {"rect": r.to_json()}
    if not args.wide:
        payload = embedding.project(r).to_json()
    _emit(args, str(r), payload)
    return EXIT_OK


def cmd_desc(args) -> int:
    t = _tableau(args.tableau)
    try:
        v = descent.extended_descent(t)
    except ShapeError as exc:
        raise UsageError(str(exc)) from None
    dots = sorted(v.dots)
    text = f"{v}\ndots: {{{','.join(map(str, dots))}}}\nperiod: {v.period()}"
    _emit(args, text, {"vector": str(v), "length": v.length, "dots": dots, "period": v.period()})
    return EXIT_OK


def _structure(args):
    shape = _shape(args.shape)
    try:
        return shape, csp.cycle_structure(shape, args.op, limit=args.limit)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_orbits(args) -> int:
    shape, cs = _structure(args)
    lines = [f"shape: {shape}", f"op: {args.op}", f"N: {cs.order}" + ("" if cs.proven else " (empirical lcm)"),
             f"total: {cs.size}"]
    lines += [f"cycles of length {c}: {m}" for c, m in sorted(cs.multiplicities.items(), reverse=True)]
    payload = dict(cs.to_json(), total=cs.size, shape=list(shape.parts), op=args.op)
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_csp(args) -> int:
    if (args.stat is None) == (args.factors is None):
        raise UsageError("give exactly one of --stat or --factors")
    shape, cs = _structure(args)
    canonical = csp.canonical_csp_polynomial(cs)
    if args.factors is not None:
        try:
            factors = csp.parse_factors(args.factors)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        ok = csp.verify_cyclotomic_product(factors, shape, args.op, cs)
        text = f"N: {cs.order}\ncanonical: {canonical}\nproduct is a CSP polynomial: {'yes' if ok else 'no'}"
        _emit(args, text, {"N": cs.order, "canonical": list(canonical.coeffs), "factors": factors, "csp": ok})
        return EXIT_OK if ok else EXIT_FAIL
    if args.stat == "qhook":
        reduced, raw = csp.q_hook_length(shape, cs.order)
    else:
        reduced, raw = csp.statistic_generating_function(shape, csp.STATISTICS[args.stat], cs.order, args.limit)
    shifts = csp.csp_shifts(reduced, cs)
    from .polynomial import format_poly

    text = "\n".join([
        f"N: {cs.order}",
        f"generating function: {format_poly(raw)}",
        f"reduced: {reduced}",
        f"canonical: {canonical}",
        f"is a CSP polynomial: {'yes' if 0 in shifts else 'no'}",
        f"certifying shifts: {' '.join(map(str, shifts)) or 'none'}",
        f"b(shape) mod N: {csp.b_number(shape) % cs.order}",
    ])
    payload = {"N": cs.order, "raw": raw, "reduced": list(reduced.coeffs), "canonical": list(canonical.coeffs),
               "shifts": shifts, "csp": 0 in shifts, "b": csp.b_number(shape)}
    _emit(args, text, payload)
    return EXIT_OK


WORKED_EXAMPLES = [
    # (argv, expected stdout)
    (["apply", "--op", "promote", "--tableau", "1 4 5/2 6 8/3 7 13/9 10 15/11 14/12", "--show-path"],
     "1 2 6/3 5 7/4 8 9/10 11 14/12 15/13\n(4,3) (3,3) (2,3) (2,2) (1,2) (1,1)"),
    (["apply", "--op", "dual-promote", "--tableau", "1 4 5/2 6 8/3 7 13/9 10 15/11 14/12", "--show-path"],
     "1 3 4/2 5 7/6 9 12/8 13 14/10 15/11\n(1,1) (2,1) (3,1) (3,2) (4,2) (5,2)"),
    (["apply", "--op", "evacuate", "--tableau", "1 3 8/2 4/5 9/6 10/7"], "1 3 8/2 5/4 6/7 10/9"),
    (["apply", "--op", "dual-evacuate", "--tableau", "1 3 8/2 4/5 9/6 10/7"], "1 4 9/2 5/3 6/7 10/8"),
    (["embed", "--tableau", "1 2 6/3 5/4"], "1 2 6/3 5 10/4 7 11/8 9 12"),
    (["embed", "--wide", "--tableau", "1 2 6/3 5/4"], "1 2 6 10/3 5 7 11/4 8 9 12"),
    (["apply", "--op", "evacuate", "--tableau", "1 2 6/3 5/4"], "1 4 5/2 6/3"),
    (["apply", "--op", "promote", "--tableau", "1 3 6/2 5 7/4 9 11/8 10 12"], "1 2 7/3 4 8/5 6 10/9 11 12"),
    (["apply", "--op", "promote", "--tableau", "1 2 4/3 5 9/6 8 11/7 10 12"], "1 3 5/2 4 6/7 9 10/8 11 12"),
    (["apply", "--op", "evacuate", "--tableau", "1 3 5/2 4 6/7 9 10/8 11 12"], "1 2 5/3 4 6/7 9 11/8 10 12"),
    (["apply", "--op", "evacuate", "--tableau", "1 2 4/3 6/5"], "1 3 5/2 4/6"),
    (["apply", "--op", "dual-evacuate", "--tableau", "1 2 4/3 6/5"], "1 2 6/3 4/5"),
    (["desc", "--tableau", "1 3 6/2 5 7/4 9 11/8 10 12"], "x.x..xx.x.x.\ndots: {1,3,6,7,9,11}\nperiod: 12"),
    (["desc", "--tableau", "1 2 4/3 5 9/6 8 11/7 10 12"], ".x.xxx..x.xx\ndots: {2,4,5,6,9,11,12}\nperiod: 12"),
    (["desc", "--tableau", "1 3 5/2 4 6/7 9 10/8 11 12"], "x.x.xxx..x.x\ndots: {1,3,5,6,7,10,12}\nperiod: 12"),
    (["desc", "--tableau", "1 2 5/3 4 6/7 9 11/8 10 12"], ".x..xxx.x.xx\ndots: {2,5,6,7,9,11,12}\nperiod: 12"),
    (["desc", "--tableau", "1 5 9/2 6 10/3 7 11/4 8 12"], "xxx.xxx.xxx.\ndots: {1,2,3,5,6,7,9,10,11}\nperiod: 4"),
    (["desc", "--tableau", "1 3 5/2 7 9/4 8 11/6 10 12"], "x.x.x.x.x.x.\ndots: {1,3,5,7,9,11}\nperiod: 2"),
    (["desc", "--tableau", "1 4 5/2 6/3"], "xx..xx..xx..\ndots: {1,2,5,6,9,10}\nperiod: 4"),
    (["desc", "--tableau", "1 2 5/3 6/4"], ".xx.x.x..x.x\ndots: {2,3,5,7,10,12}\nperiod: 12"),
    (["desc", "--tableau", "1 2 4/3 6/5"], ".x.x..x.x.xx\ndots: {2,4,7,9,11,12}\nperiod: 12"),
    (["desc", "--tableau", "1 3 5/2 4/6"], "x.x.x..x.x.x\ndots: {1,3,5,8,10,12}\nperiod: 12"),
    (["desc", "--tableau", "1 2 6/3 4/5"], ".x.x.xx.x.x.\ndots: {2,4,6,7,9,11}\nperiod: 12"),
    (["desc", "--tableau", "1 4 6/2 5/3"], "xx.x.x..x.x.\ndots: {1,2,4,6,9,11}\nperiod: 12"),
]


def run_worked_examples() -> list[tuple[str, bool, str]]:
    import contextlib
    import io

    results = []
    for argv, expected in WORKED_EXAMPLES:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(argv)
        got = buf.getvalue().rstrip("\n")
        results.append((" ".join(argv), code == 0 and got == expected, got))
    return results


def cmd_verify(args) -> int:
    rows = []
    if args.worked_examples:
        for label, ok, got in run_worked_examples():
            rows.append({"check": f"example: {label}", "passed": ok, "checked": 1, "failures": [] if ok else [got]})
    else:
        for r in checks.run_checks(args.max_cells, args.include_k5, args.skip):
            rows.append({"check": r.key, "statement": r.statement, "passed": r.passed, "checked": r.checked,
                         "failures": r.failures[:5], "seconds": round(r.seconds, 3)})
    failed = [r for r in rows if not r["passed"]]
    if args.format == "json":
        print(json.dumps({"results": rows, "failed": len(failed)}, sort_keys=True))
    else:
        width = max(len(r["check"]) for r in rows)
        for r in rows:
            status = "pass" if r["passed"] else "FAIL"
            extra = f"  {r['statement']}" if "statement" in r else ""
            print(f"{status}  {r['check']:<{width}}  {r['checked']:>7}{extra}")
            for f in r["failures"]:
                print(f"        counterexample: {f}")
        print(f"{len(rows) - len(failed)}/{len(rows)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="syt", description="Promotion, evacuation and cyclic sieving on SYT.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.set_defaults(func=fn)
        return p

    p = add("apply", cmd_apply, "apply an operator to a tableau")
    p.add_argument("--op", required=True, choices=OPS)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--tableau", required=True)
    p.add_argument("--show-path", action="store_true")

    p = add("embed", cmd_embed, "embed a staircase tableau into a rectangle")
    p.add_argument("--wide", action="store_true")
    p.add_argument("--tableau", required=True)

    p = add("desc", cmd_desc, "extended descent vector of a rectangular or staircase tableau")
    p.add_argument("--tableau", required=True)

    for name, fn, help in [("orbits", cmd_orbits, "orbit structure of an operator on SYT(shape)"),
                           ("csp", cmd_csp, "check CSP polynomials for an operator on SYT(shape)")]:
        p = add(name, fn, help)
        p.add_argument("--shape", required=True)
        p.add_argument("--op", required=True, choices=ORBIT_OPS)
        p.add_argument("--limit", type=int, default=DEFAULT_ENUMERATION_LIMIT)
        if name == "csp":
            p.add_argument("--stat", choices=["maj", "comaj", "qhook"])
            p.add_argument("--factors", help='cyclotomic indices with exponents, e.g. "2,4^2,6,8,12"')

    p = add("verify", cmd_verify, "run the exhaustive identity checks")
    p.add_argument("--max-cells", type=int, default=10)
    p.add_argument("--include-k5", action="store_true", help="also check sc_5 (about 300k tableaux)")
    p.add_argument("--skip", action="append", default=[], metavar="KEY")
    p.add_argument("--worked-examples", "--paper-examples", dest="worked_examples", action="store_true",
                   help="run the golden worked examples instead")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"syt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationLimitError as exc:
        print(f"syt: error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
