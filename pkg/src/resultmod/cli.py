"""Command-line front end.

Exit codes: 0 success, 1 property/self-test failure, 2 input error,
3 cross-engine disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Sequence

from . import __version__
from .linalg import INF
from .lucas import LucasParams, check_corollary2, check_theorem4, survey_section31, survey_section32
from .modular import IdenticallyZeroModQ, ModAnalysis, analyze
from .parser import ParseError, parse_poly
from .poly import format_poly
from .primes import NotPrimeError, isprime, odd_primes_upto
from .reports import CongruenceReport
from .resultants import Engine, all_engines, resultant

EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3
SURVEY_PRIME_MAX = 10**5

ENGINE_FLAGS = {
    "sylvester": Engine.SYLVESTER,
    "remainder": Engine.REMAINDER_MATRIX,
    "euclid": Engine.EUCLIDEAN,
}


class InputError(Exception):
    pass


def _big(n: int) -> str:
    return str(n)


def _val(v: int | float) -> int | str:
    return "inf" if v == INF else int(v)


def analysis_payload(a: ModAnalysis) -> dict[str, Any]:
    return {
        "q": a.q,
        "n": a.n,
        "m": a.m,
        "roots_f": list(a.roots_f),
        "roots_g": list(a.roots_g),
        "common_roots": list(a.common_roots),
        "ell": a.ell,
        "rank_p": a.rank_p,
        "resultant": _big(a.resultant),
        "v_q": _val(a.v_q),
        "bound_theorem1": a.bound_theorem1,
        "bound_corollary1": a.bound_corollary1,
        "ell_vs_rank": a.ell_vs_rank,
        "remainder_denominator": _big(a.remainder_denominator),
        "triangular_zero_rows": a.triangular_zero_rows,
    }


def _jsonable(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return _big(v)
    if isinstance(v, float):
        return "inf" if math.isinf(v) else v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return str(v)


def report_payload(r: CongruenceReport) -> dict[str, Any]:
    return {
        "label": r.label,
        "q": r.q,
        "modulus_power": r.modulus_power,
        "lhs": _big(r.lhs),
        "rhs": _big(r.rhs),
        "holds": r.holds,
        "preconditions_met": r.preconditions_met,
        "reason": r.reason,
        "details": _jsonable(r.details),
    }


def document(command: str, inputs: dict, results: dict) -> dict[str, Any]:
    return {"command": command, "inputs": inputs, "results": results, "version": __version__}


def _parse(text: str):
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise InputError(str(exc)) from exc


def _prime(q: int, *, odd: bool = False) -> int:
    if not isprime(q) or (odd and q == 2):
        kind = "an odd prime" if odd else "a prime"
        raise InputError(f"--prime must be {kind}, got {q}")
    return q


# -- commands -----------------------------------------------------------------

def cmd_resultant(args) -> tuple[dict, int]:
    f, g = _parse(args.f), _parse(args.g)
    inputs = {"f": format_poly(f), "g": format_poly(g), "engine": args.engine}
    if args.engine == "all":
        values = {eng.value: v for eng, v in all_engines(f, g).items()}
        agree = len(set(values.values())) == 1
        results = {
            "value": _big(values[Engine.SYLVESTER.value]),
            "engines": {k: _big(v) for k, v in values.items()},
            "agreement": agree,
        }
        return document("resultant", inputs, results), EXIT_OK if agree else EXIT_DISAGREE
    res = resultant(f, g, ENGINE_FLAGS[args.engine])
    results = {"value": _big(res.value), "engine": res.engine.value, "degenerate": res.degenerate}
    return document("resultant", inputs, results), EXIT_OK


def cmd_analyze(args) -> tuple[dict, int]:
    f, g = _parse(args.f), _parse(args.g)
    q = _prime(args.prime)
    try:
        a = analyze(f, g, q)
    except IdenticallyZeroModQ as exc:
        raise InputError(str(exc)) from exc
    inputs = {"f": format_poly(f), "g": format_poly(g), "prime": q}
    results = analysis_payload(a)
    results["violations"] = a.violations()
    code = EXIT_FAILURE if args.strict and a.violations() else EXIT_OK
    return document("analyze", inputs, results), code


def cmd_lucas(args) -> tuple[dict, int]:
    q = _prime(args.prime, odd=True)
    params = LucasParams(args.p, args.q_param)
    inputs = {"P": _big(params.P), "Q": _big(params.Q), "prime": q, "k": args.k}
    if args.k is None:
        reports = check_theorem4(params, q)
    else:
        reports = check_corollary2(args.k, params, q)
    results = {
        "discriminant": _big(params.discriminant),
        "reports": [report_payload(r) for r in reports],
    }
    failed = any(r.violated for r in reports)
    return document("lucas", inputs, results), EXIT_FAILURE if args.strict and failed else EXIT_OK


def cmd_survey(args) -> tuple[dict, int]:
    if args.prime_max > SURVEY_PRIME_MAX:
        raise InputError(f"--prime-max must be <= {SURVEY_PRIME_MAX}")
    if args.family == "lucas":
        residues, modulus, run = (1, 4), 5, survey_section31
    else:
        residues, modulus, run = (1, 7), 8, survey_section32
    primes = [q for q in odd_primes_upto(args.prime_max) if q % modulus in residues]
    checked = skipped = 0
    violations = []
    for q in primes:
        for r in run(q):
            if not r.preconditions_met:
                skipped += 1
            elif r.holds:
                checked += 1
            else:
                violations.append(report_payload(r))
    inputs = {"family": args.family, "prime_max": args.prime_max}
    results = {
        "primes": primes,
        "checked": checked,
        "skipped_preconditions": skipped,
        "violations": violations,
    }
    return document("survey", inputs, results), EXIT_FAILURE if violations else EXIT_OK


def cmd_selftest(args) -> tuple[dict, int]:
    from .selftest import run_all

    suites = run_all()
    results = {
        "suites": [
            {"name": s.name, "passed": s.passed, "cases": s.cases, "failure": s.failure}
            for s in suites
        ],
        "passed": all(s.passed for s in suites),
    }
    return document("selftest", {}, results), EXIT_OK if results["passed"] else EXIT_FAILURE


# -- output -------------------------------------------------------------------

def _text_lines(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, list) and not any(isinstance(x, (dict, list)) for x in v):
                lines.append(f"{pad}{k}: [{', '.join(_scalar_text(x) for x in v)}]")
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines += _text_lines(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                sub = _text_lines(item, indent + 1)
                lines.append(f"{pad}-" + sub[0][len(pad) + 1:] if sub else f"{pad}-")
                lines += sub[1:]
            else:
                lines.append(f"{pad}- {_scalar_text(item)}")
    else:
        lines.append(f"{pad}{_scalar_text(value)}")
    return lines


def _scalar_text(v: Any) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    lines = [f"{doc['command']} (resultmod {doc['version']})"]
    if doc["inputs"]:
        lines += _text_lines({"inputs": doc["inputs"]})
    lines += _text_lines(doc["results"])
    return "\n".join(line.rstrip() for line in lines)


def _common_flags() -> argparse.ArgumentParser:
    # a fresh copy per parser: set_defaults on one would otherwise leak into shared actions
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resultmod",
        description="Exact resultants and prime-power congruence checks.",
        parents=[_common_flags()],
    )
    parser.set_defaults(format="text", strict=False)
    parser.add_argument("--version", action="version", version=f"resultmod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resultant", parents=[_common_flags()], help="compute R(f, g)")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--engine", choices=(*ENGINE_FLAGS, "all"), default="sylvester")
    p.set_defaults(func=cmd_resultant)

    p = sub.add_parser("analyze", parents=[_common_flags()], help="common roots, rank and bounds mod q")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lucas", parents=[_common_flags()], help="Lucas-sequence congruences mod q^2")
    p.add_argument("--p", type=int, required=True, help="sequence parameter P")
    p.add_argument("--q-param", type=int, required=True, help="sequence parameter Q")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="shift (P, Q) -> (P+2k, k^2+Pk+Q)")
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser("survey", parents=[_common_flags()], help="sweep Lucas or Pell-Lucas congruences")
    p.add_argument("family", choices=("lucas", "pell-lucas"))
    p.add_argument("--prime-max", type=int, required=True)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("selftest", parents=[_common_flags()], help="run the property suites")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = args.func(args)
    except (InputError, NotPrimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
