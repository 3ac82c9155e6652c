"""Command-line front end.

Subcommands: ``sympow`` (symbolic power of a monomial ideal from a
file), ``bounds`` (degree-bound reports), ``growth`` (degree sequence),
``verify-paper`` (replay the built-in reference cases).

Exit codes: 0 success; 2 parse/lookup error; 3 method precondition
failure; 4 internal invariant violation; 5 a verify-paper claim failed;
6 the verify-paper time budget ran out. Only the report goes to stdout;
progress and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import counterexamples as cx
from .bounds import degree_sequence, huneke_check, lcm_bound, lcm_check, sum_degree_bound, sumdeg_check
from .cases import case_ex31, case_ex32
from .decomp import NotSquarefreeError, minimal_variable_primes, symbolic_power, symbolic_power_from_decomposition, symbolic_power_squarefree
from .groebner import InternalInvariantError
from .ideal_files import ParseError, format_generators, monomial_ideal_from_poly, parse_ideal_file

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4
EXIT_VERIFY_FAIL = 5
EXIT_BUDGET = 6

VERIFY_CASES = ("ex31", "ex32", "lemma41", "lemma42", "ex43", "ex44")

SYMPOW_SCHEMA = {
    "type": "object",
    "required": ["ideal", "n", "generators", "degrees"],
    "properties": {
        "ideal": {"type": "string"},
        "n": {"type": "integer"},
        "generators": {"type": "array", "items": {"type": "string"}},
        "degrees": {
            "type": "object",
            "required": ["max", "beg", "count"],
            "properties": {
                "max": {"type": ["integer", "null"]},
                "beg": {"type": ["integer", "null"]},
                "count": {"type": "integer"},
            },
        },
    },
}

BOUNDS_SCHEMA = {
    "type": "object",
    "required": ["ideal", "n", "reports"],
    "properties": {
        "ideal": {"type": "string"},
        "n": {"type": "integer"},
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["bound_kind", "n", "d_In", "bound", "satisfied"],
                "properties": {
                    "bound_kind": {"type": "string"},
                    "n": {"type": "integer"},
                    "d_In": {"type": "integer"},
                    "bound": {"type": "integer"},
                    "satisfied": {"type": "boolean"},
                },
            },
        },
    },
}

GROWTH_SCHEMA = {
    "type": "object",
    "required": ["ideal", "N", "entries", "slope_estimate", "is_linear_within", "slack", "complete"],
    "properties": {
        "ideal": {"type": "string"},
        "N": {"type": "integer"},
        "entries": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"},
                      "minItems": 2, "maxItems": 2},
        },
        "slope_estimate": {"type": ["string", "null"]},
        "is_linear_within": {"type": "boolean"},
        "slack": {"type": "integer"},
        "complete": {"type": "boolean"},
    },
}

VERIFY_SCHEMA = {
    "type": "object",
    "required": ["cases", "all_pass", "budget_exhausted"],
    "properties": {
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["case", "claims"],
                "properties": {
                    "case": {"type": "string"},
                    "claims": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["claim", "pass", "seconds"],
                            "properties": {
                                "claim": {"type": "string"},
                                "pass": {"type": "boolean"},
                                "seconds": {"type": "number"},
                                "detail": {"type": "string"},
                            },
                        },
                    },
                    "notes": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
        "all_pass": {"type": "boolean"},
        "budget_exhausted": {"type": "boolean"},
    },
}


def thread_cap() -> int:
    """Upper bound on library parallelism from SYMPOW_THREADS (default 1).

    The current implementation runs sequentially, which respects any cap.
    """
    raw = os.environ.get("SYMPOW_THREADS", "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympow",
        description="Exact symbolic powers of ideals and degree-bound audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sympow", help="symbolic power of a monomial ideal")
    p.add_argument("--file", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--n", required=True, type=_positive_int)
    p.add_argument("--method", choices=("squarefree", "decomposition", "saturation"),
                   default="saturation")
    p.add_argument("--primes", choices=("min", "ass"), default="min")
    p.add_argument("--decomposition")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bounds", help="degree-bound reports for a monomial ideal")
    p.add_argument("--file", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--n", required=True, type=_positive_int)
    p.add_argument("--D", type=int)
    p.add_argument("--bound", choices=("huneke", "lcm", "sumdeg", "all"), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("growth", help="degree sequence of symbolic powers")
    p.add_argument("--file", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--N", required=True, type=_positive_int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify-paper", help="replay the built-in reference cases")
    p.add_argument("--case", choices=VERIFY_CASES + ("all",), default="all")
    p.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _load_ideal(args):
    with open(args.file, "r", encoding="utf-8") as handle:
        text = handle.read()
    parsed = parse_ideal_file(text)
    return parsed, parsed.ideal(args.ideal)


def _cmd_sympow(args) -> int:
    parsed, poly = _load_ideal(args)
    if args.method == "decomposition":
        if not args.decomposition:
            raise ValueError("--method decomposition needs --decomposition NAME")
        components = [
            monomial_ideal_from_poly(c)
            for c in parsed.decomposition_components(args.decomposition)
        ]
        result = symbolic_power_from_decomposition(components, args.n)
    else:
        ideal = monomial_ideal_from_poly(poly)
        result = symbolic_power(ideal, args.n, method=args.method, primes=args.primes)
    stats = result.degree_stats()
    if args.format == "json":
        payload = {
            "ideal": args.ideal,
            "n": args.n,
            "generators": [str(g) for g in result.generators],
            "degrees": {"max": stats.max_gen_degree, "beg": stats.beg, "count": stats.count},
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"ideal {args.ideal}, n = {args.n}, method = {args.method}")
        print(f"generators ({stats.count}):")
        for g in result.generators:
            print(f"  {g}")
        print(f"degrees: beg = {stats.beg}, max = {stats.max_gen_degree}, count = {stats.count}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    _, poly = _load_ideal(args)
    ideal = monomial_ideal_from_poly(poly)
    reports = []
    extras = {}
    if args.bound in ("huneke", "all"):
        reports.append(huneke_check(ideal, args.n, D=args.D))
    if args.bound in ("lcm", "all"):
        f, per_n = lcm_bound(ideal)
        extras["lcm_monomial"] = str(f)
        extras["lcm_degree"] = per_n
        reports.append(lcm_check(ideal, args.n))
    if args.bound in ("sumdeg", "all"):
        extras["sum_of_degrees_E"] = sum_degree_bound(ideal)
        reports.append(sumdeg_check(ideal, args.n))
    if args.format == "json":
        payload = {
            "ideal": args.ideal,
            "n": args.n,
            "reports": [
                {
                    "bound_kind": r.bound_kind,
                    "n": r.n,
                    "d_In": r.d_in,
                    "bound": r.bound,
                    "satisfied": r.satisfied,
                }
                for r in reports
            ],
        }
        payload.update(extras)
        print(json.dumps(payload, indent=2))
    else:
        print(f"ideal {args.ideal}, n = {args.n}")
        for key, value in extras.items():
            print(f"{key} = {value}")
        for r in reports:
            verdict = "pass" if r.satisfied else "VIOLATED"
            print(f"{r.bound_kind}: d(I^({r.n})) = {r.d_in} vs bound {r.bound} -> {verdict}")
    return EXIT_OK


def _cmd_growth(args) -> int:
    _, poly = _load_ideal(args)
    ideal = monomial_ideal_from_poly(poly)
    seq = degree_sequence(ideal, args.N)
    slope = None if seq.slope_estimate is None else str(seq.slope_estimate)
    if args.format == "json":
        payload = {
            "ideal": args.ideal,
            "N": args.N,
            "entries": [[n, d] for n, d in seq.entries],
            "slope_estimate": slope,
            "is_linear_within": seq.is_linear_within,
            "slack": seq.slack,
            "complete": seq.complete,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"ideal {args.ideal}, N = {args.N}")
        for n, d in seq.entries:
            print(f"  n = {n}: d = {d}")
        print(f"slope estimate = {slope}, linear within slack {seq.slack}: "
              f"{seq.is_linear_within}, complete: {seq.complete}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-paper claims


def _claims_ex31():
    case = case_ex31()
    sq = symbolic_power_from_decomposition(case.components, 2)
    yield ("decomposition path reproduces the 6 recorded generators",
           sq == case.expected_square, format_generators(sq))
    sat = symbolic_power(case.ideal, 2, method="saturation", primes="min")
    yield ("saturation path (minimal primes) agrees", sat == case.expected_square, "")
    sat_ass = symbolic_power(case.ideal, 2, method="saturation", primes="ass")
    yield ("saturation path (associated primes) agrees", sat_ass == case.expected_square, "")
    stats = sq.degree_stats()
    yield (f"beg = {case.expected_beg} and max degree = {case.expected_max_degree}",
           (stats.beg, stats.max_gen_degree) == (case.expected_beg, case.expected_max_degree),
           f"beg = {stats.beg}, max = {stats.max_gen_degree}")
    rep = huneke_check(case.ideal, 2, D=case.generator_degree,
                       method="decomposition", components=case.components)
    yield (f"generated in degrees <= {case.generator_degree}*2 with equality",
           rep.satisfied and rep.d_in == rep.bound,
           f"d = {rep.d_in}, bound = {rep.bound}")


def _claims_ex32():
    case = case_ex32()
    sq = symbolic_power_squarefree(case.ideal, 2)
    yield ("squarefree path reproduces the 31 recorded generators",
           sq == case.expected_square, f"{len(sq.generators)} generators")
    primes = minimal_variable_primes(case.ideal)
    dec = symbolic_power_from_decomposition([p.ideal() for p in primes], 2)
    yield ("decomposition path (minimal primes) agrees", dec == case.expected_square, "")
    sat = symbolic_power(case.ideal, 2, method="saturation")
    yield ("saturation path agrees", sat == case.expected_square, "")
    stats = sq.degree_stats()
    yield (f"beg = {case.expected_beg} and max degree = {case.expected_max_degree}",
           (stats.beg, stats.max_gen_degree) == (case.expected_beg, case.expected_max_degree),
           f"beg = {stats.beg}, max = {stats.max_gen_degree}")
    rep = huneke_check(case.ideal, 2, D=case.generator_degree, method="squarefree")
    yield (f"generated in degrees <= {case.generator_degree}*2",
           rep.satisfied, f"d = {rep.d_in}, bound = {rep.bound}")


def _claims_lemma41():
    case = cx.builtin_case_A6()
    ok = cx.verify_colon(case)
    colon = cx.colon_ideal(case)
    yield ("(M^2 : f) = (x, y, z)", ok,
           "basis: " + ", ".join(str(g) for g in colon.groebner_basis()))
    yield ("the 12 listed primes intersect to M (M is radical)",
           cx.verify_radical_intersection(case), "")
    heights = all(len(p.generators) == 2 for p in case.primes)
    yield ("all 12 primes have height 2 (two generators)", heights, "")


def _claims_lemma42(progress):
    case = cx.builtin_case_A6()
    yield ("every generator of M^2 + (f) lies in every squared prime",
           cx.verify_symbolic_square_containment(case), "")
    ok = cx.verify_symbolic_square(case, progress=progress)
    yield ("intersection of the 12 squared primes equals M^2 + (f)", ok, "")


def _claims_ex43():
    case = cx.builtin_case_A6()
    yield ("f is not in M^2", cx.witness_not_in_square(case), "")
    deg = case.witness.total_degree()
    yield ("deg f = 9", deg == case.expected_witness_degree, f"deg f = {deg}")
    rep = cx.degree_violation_report(case)
    yield ("d(M^(2)) = 9 > 8 = 2*4: the D*n bound fails at n = 2",
           not rep.satisfied and rep.d_in == 9 and rep.bound == 8,
           f"d = {rep.d_in}, bound = {rep.bound}")


def _claims_ex44():
    case = cx.builtin_case_A7()
    chosen = None
    details = []
    for which in ("recorded", "alternate"):
        ok = cx.verify_colon(case, which)
        f = case.pick_witness(which)
        details.append(f"{which} witness {f}: {'colon = (x, y, z)' if ok else 'colon differs'}")
        if ok and chosen is None:
            chosen = which
    yield ("(I^2 : f) = (x, y, z) for at least one witness candidate",
           chosen is not None,
           f"chosen witness: {chosen}; " + "; ".join(details))
    if chosen is not None:
        deg = case.pick_witness(chosen).total_degree()
        yield ("the working witness has degree 9", deg == 9, f"deg = {deg}")
        rep = cx.degree_violation_report(case, chosen)
        yield ("d(I^(2)) = 9 > 8 = 2*4: the D*n bound fails at n = 2",
               not rep.satisfied and rep.d_in == 9 and rep.bound == 8,
               f"d = {rep.d_in}, bound = {rep.bound}")
    yield ("the derived height-2 primes intersect to I (I is radical)",
           cx.verify_radical_intersection(case), "derived prime list, 12 entries")


_EX44_NOTES = (
    "binomiality and Cohen-Macaulayness of the 7-variable ideal are not "
    "verified here (out of scope); the radical claim is evidenced only by "
    "the derived prime intersection",
)


def _cmd_verify_paper(args) -> int:
    selected = VERIFY_CASES if args.case == "all" else (args.case,)
    start = time.monotonic()
    budget = args.time_budget

    def progress(message):
        print(f"[{time.monotonic() - start:7.1f}s] {message}", file=sys.stderr)

    claim_sources = {
        "ex31": _claims_ex31,
        "ex32": _claims_ex32,
        "lemma41": _claims_lemma41,
        "lemma42": lambda: _claims_lemma42(progress),
        "ex43": _claims_ex43,
        "ex44": _claims_ex44,
    }

    results = []
    all_pass = True
    exhausted = False
    for name in selected:
        if budget is not None and time.monotonic() - start > budget:
            exhausted = True
            break
        case_entry = {"case": name, "claims": []}
        if name == "ex44":
            case_entry["notes"] = list(_EX44_NOTES)
        claims = claim_sources[name]()
        while True:
            t0 = time.monotonic()
            try:
                claim, passed, detail = next(claims)
            except StopIteration:
                break
            seconds = round(time.monotonic() - t0, 3)
            case_entry["claims"].append(
                {"claim": claim, "pass": bool(passed), "seconds": seconds,
                 "detail": detail}
            )
            all_pass = all_pass and bool(passed)
            if budget is not None and time.monotonic() - start > budget:
                exhausted = True
                break
        results.append(case_entry)
        if exhausted:
            break

    payload = {"cases": results, "all_pass": all_pass, "budget_exhausted": exhausted}
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for entry in results:
            print(f"case {entry['case']}:")
            for claim in entry["claims"]:
                mark = "PASS" if claim["pass"] else "FAIL"
                line = f"  {mark}  {claim['claim']}  ({claim['seconds']:.2f}s)"
                if claim["detail"]:
                    line += f"  [{claim['detail']}]"
                print(line)
            for note in entry.get("notes", ()):
                print(f"  NOTE  {note}")
        if exhausted:
            print("time budget exhausted; partial report")
        print("result: " + ("ALL PASS" if all_pass and not exhausted else
                            "BUDGET EXHAUSTED" if exhausted else "FAILURES"))
    if exhausted:
        return EXIT_BUDGET
    return EXIT_OK if all_pass else EXIT_VERIFY_FAIL


def main(argv=None) -> int:
    thread_cap()  # validate the environment variable early
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "sympow": _cmd_sympow,
        "bounds": _cmd_bounds,
        "growth": _cmd_growth,
        "verify-paper": _cmd_verify_paper,
    }
    try:
        return handlers[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (NotSquarefreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
