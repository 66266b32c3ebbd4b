"""Command-line front end: JSON documents in, JSON reports out.

Exit codes
    classify   0 canonical shape, 1 not canonical, 2 invalid input
    solve      0 solved, 1 no solution / unresolved, 2 invalid input,
               3 constructed solution failed certification (internal)
    verify     0 residual check passed, 1 failed, 2 mismatch or invalid input
    eval       0 ok, 2 invalid input
    periods    0 ok, 1 degenerate invariants, 2 invalid input
    generate   0 ok, 2 invalid input
    selftest   0 all criteria pass, 1 otherwise

Reports go to stdout, diagnostics to stderr; SCHWARZIAN_LOG sets verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import documents as docs
from .certify import certify_solution
from .equations import NotCanonical, classify
from .errors import (
    CertificationError,
    DegenerateLatticeError,
    DocumentError,
    NoTranscendentalSolutionError,
    PoleProximityError,
    SchwarzianError,
)
from .selftest import run_selftest
from .solver import NoSolution, Unresolved, generate_type1, solve_equation
from .weierstrass import half_periods

log = logging.getLogger("schwarzian")

FAMILY_FOR_KIND = {
    "I": "elliptic-fractional",
    "II": "wp-rational-II",
    "III": "wp-rational-III",
    "IV": "wp-rational-IV",
    "V": "trig",
    "VI": "exp",
}


def _configure_logging():
    level_name = os.environ.get("SCHWARZIAN_LOG", "warning").upper()
    level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _emit(doc, output: str | None):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_complex(text: str, name: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise DocumentError(f"{name}: expected 'RE' or 'RE,IM', got {text!r}")


def cmd_classify(args) -> int:
    eq = docs.equation_from_dict(_read_json(args.input))
    result = classify(eq)
    if isinstance(result, NotCanonical):
        _emit(docs.not_canonical_to_dict(result), args.output)
        return 1
    out = docs.canonical_form_to_dict(result)
    out["canonical"] = True
    _emit(out, args.output)
    return 0


def cmd_solve(args) -> int:
    eq = docs.equation_from_dict(_read_json(args.input))
    z0 = _parse_complex(args.z0, "--z0")
    beta = _parse_complex(args.beta, "--beta")
    anchor = _parse_complex(args.anchor, "--anchor") if args.anchor else None
    try:
        form, outcome = solve_equation(eq, z0=z0, beta=beta, branch=args.branch,
                                       anchor=anchor)
    except NoTranscendentalSolutionError as exc:
        print(f"no solution: {exc}", file=sys.stderr)
        return 1
    if isinstance(outcome, NoSolution):
        print(f"no solution: {outcome.reason}", file=sys.stderr)
        if outcome.diagnostics:
            for key, value in sorted(outcome.diagnostics.items()):
                print(f"  tau index {key}: {value}", file=sys.stderr)
        return 1
    if isinstance(outcome, Unresolved):
        print(f"unresolved: {outcome.reason}", file=sys.stderr)
        return 1
    log.info("solved as kind %s -> %s", getattr(form, "kind", "?"), outcome.family)
    _emit(docs.solution_to_dict(outcome), args.output)
    return 0


def cmd_verify(args) -> int:
    eq = docs.equation_from_dict(_read_json(args.equation))
    solution = docs.solution_from_dict(_read_json(args.solution))
    form = classify(eq)
    if not isinstance(form, NotCanonical):
        expected = FAMILY_FOR_KIND[form.kind]
        if solution.family != expected:
            print(
                f"family/equation mismatch: equation is kind {form.kind} "
                f"(expects {expected}), solution is {solution.family}",
                file=sys.stderr,
            )
            return 2
    report = certify_solution(
        solution, eq.p, eq.rational,
        samples=args.samples, tolerance=args.tol, seed=args.seed,
    )
    _emit(docs.report_to_dict(report), args.output)
    return 0 if report.passed else 1


def cmd_eval(args) -> int:
    solution = docs.solution_from_dict(_read_json(args.input))
    points = [_parse_complex(text, "--at") for text in args.at or []]
    if args.points:
        points.extend(
            docs.pair_to_complex(v, f"points[{k}]")
            for k, v in enumerate(_read_json(args.points))
        )
    if not points:
        raise DocumentError("no evaluation points given (use --at or --points)")
    rows = []
    for z in points:
        row = {"z": docs.complex_to_pair(z)}
        try:
            jet = solution.jet(z)
            row["status"] = "ok"
        except PoleProximityError as exc:
            jet = exc.limit_value
            if jet is None:
                row["status"] = "pole"
            else:
                row["status"] = "pole-proximity"  # removable: limit jet reported
        except ZeroDivisionError:
            jet = None
            row["status"] = "pole"
        if jet is None:
            row.update({"u": None, "u1": None, "u2": None, "u3": None})
        else:
            row.update({
                "u": docs.complex_to_pair(jet.f),
                "u1": docs.complex_to_pair(jet.f1),
                "u2": docs.complex_to_pair(jet.f2),
                "u3": docs.complex_to_pair(jet.f3),
            })
        rows.append(row)
    _emit({"values": rows}, args.output)
    return 0


def cmd_periods(args) -> int:
    inv = docs.invariants_from_dict(_read_json(args.input), "input")
    try:
        lattice = half_periods(inv)
    except DegenerateLatticeError as exc:
        print(f"degenerate invariants: {exc}", file=sys.stderr)
        return 1
    _emit(docs.lattice_to_dict(lattice), args.output)
    return 0


def cmd_generate(args) -> int:
    doc = _read_json(args.input)
    if not isinstance(doc, dict):
        raise DocumentError("generate input must be an object")
    tau = [docs.pair_to_complex(v, f"tau[{k}]") for k, v in enumerate(doc.get("tau", []))]
    if len(tau) != 4:
        raise DocumentError(f"generate needs 4 tau values, got {len(tau)}")
    index = doc.get("i")
    if not isinstance(index, int) or isinstance(index, bool) or not 1 <= index <= 4:
        raise DocumentError(f"'i' must be an integer in 1..4, got {index!r}")
    b = docs.pair_to_complex(doc.get("b"), "b")
    z0 = docs.pair_to_complex(doc.get("z0", [0.0, 0.0]), "z0")
    try:
        coeffs, solution = generate_type1(tau, index, b, z0=z0)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    _emit(
        {
            "equation": docs.equation_to_dict(coeffs.equation()),
            "coefficients": {
                "r": [docs.complex_to_pair(v) for v in coeffs.r],
                "tau": [docs.complex_to_pair(v) for v in coeffs.tau],
            },
            "solution": docs.solution_to_dict(solution),
        },
        args.output,
    )
    return 0


def cmd_selftest(args) -> int:
    results = run_selftest(samples=args.samples, seed=args.seed)
    all_passed = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        all_passed &= res.passed
        sys.stdout.write(f"{status} {res.index:2d} {res.name}: {res.detail}\n")
    sys.stdout.write("selftest: " + ("all criteria passed\n" if all_passed
                                     else "FAILURES present\n"))
    return 0 if all_passed else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schwarzian",
        description="Exact solutions of autonomous Schwarzian differential "
                    "equations, with numerical certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", help="write the JSON report here instead of stdout")

    p = sub.add_parser("classify", help="detect the canonical shape of an equation")
    p.add_argument("input", help="equation JSON file ('-' for stdin)")
    add_output(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("solve", help="construct the exact solution of a canonical equation")
    p.add_argument("input", help="equation JSON file ('-' for stdin)")
    p.add_argument("--z0", default="0", help="translation parameter, 'RE[,IM]' (default 0)")
    p.add_argument("--beta", default="0", help="phase for sine solutions, 'RE[,IM]'")
    p.add_argument("--branch", type=int, default=0,
                   help="rotate the principal root choice by this many steps")
    p.add_argument("--anchor", default=None,
                   help="for the quartic shape: pick the branch whose value at "
                        "the p poles equals this tau, 'RE[,IM]'")
    add_output(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="residual-check a solution against an equation")
    p.add_argument("equation", help="equation JSON file")
    p.add_argument("solution", help="solution JSON file")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=42)
    add_output(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("eval", help="evaluate a solution and its derivatives")
    p.add_argument("input", help="solution JSON file")
    p.add_argument("--at", action="append", help="point 'RE[,IM]' (repeatable)")
    p.add_argument("--points", help="JSON file with an array of [re, im] points")
    add_output(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("periods", help="half-periods and stationary values of (g2, g3)")
    p.add_argument("input", help="invariants JSON file {'g2': [re,im], 'g3': [re,im]}")
    add_output(p)
    p.set_defaults(fn=cmd_periods)

    p = sub.add_parser("generate",
                       help="forward construction from (tau, i, b) for the quartic shape")
    p.add_argument("input", help="JSON file {'tau': [...], 'i': 1..4, 'b': [re,im]}")
    add_output(p)
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("selftest", help="run the acceptance checklist")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(fn=cmd_selftest)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DocumentError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except CertificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except SchwarzianError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
