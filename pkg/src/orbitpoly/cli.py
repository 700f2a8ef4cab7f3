"""Command line front end. Results go to stdout as JSON, a one-line summary
goes to stderr.

Exit codes: 0 success, 1 a requested identity failed, 2 usage error,
3 malformed input, 4 unknown element name, 5 group degree mismatch,
6 relation is not a partial order, 7 group does not act by automorphisms,
8 internal consistency failure, 9 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import formats
from .counting import default_budget, orbit_count_oracle, orbital_order_polynomial, verify_reciprocity
from .errors import ActionError, InputError, OrbitPolyError
from .formats import dumps, fmt
from .graph import (
    acyclic_orientations,
    chromatic_oracle,
    even_chromatic_formula,
    even_chromatic_polynomial,
    even_proper_coloring_orbits,
    is_graph_action,
    orbital_chromatic_polynomial,
    verify_graph_reciprocity,
)
from .polynomial import RationalPolynomial, evaluate, from_values, parse_rational
from .poset import is_order_action, order_polynomial

EXIT_VERIFY_FAILED = 1

COMMANDS = (
    "order-poly",
    "orbital-order-poly",
    "chromatic",
    "verify-reciprocity",
    "verify-graph-reciprocity",
    "acyclic-orientations",
    "eval",
)


@dataclass
class JobSpec:
    command: str
    inputs: list[str] = field(default_factory=list)
    group: str | None = None
    strict: bool = False
    even: bool = False
    verify: bool = False
    max_n: int | None = None
    budget: int = 0
    coeffs: str | None = None
    at: int | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise OrbitPolyError(f"unknown command {self.command!r}")
        if self.max_n is not None and self.max_n < 1:
            raise InputError("--max-n must be at least 1")
        if self.budget < 1:
            raise InputError("--budget must be at least 1")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitpoly",
        description="Order polynomials and orbital chromatic polynomials in exact arithmetic.",
    )
    parser.add_argument(
        "--budget",
        type=_positive_int,
        default=None,
        help="maximum number of objects any enumeration may visit (env ORBITPOLY_BUDGET, default 2000000)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order-poly", help="order polynomial of a poset")
    p.add_argument("poset")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--max-n", type=_positive_int)

    p = sub.add_parser("orbital-order-poly", help="orbit count of order preserving maps under a group")
    p.add_argument("poset")
    p.add_argument("--group", required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--verify", action="store_true", help="compare against orbit enumeration")
    p.add_argument("--max-n", type=_positive_int)

    p = sub.add_parser("verify-reciprocity", help="check the orbital order reciprocity laws")
    p.add_argument("poset")
    p.add_argument("--group", required=True)
    p.add_argument("--max-n", type=_positive_int)

    p = sub.add_parser("chromatic", help="orbital chromatic polynomial of a graph")
    p.add_argument("graph")
    p.add_argument("--group", help="group file; trivial group when omitted")
    p.add_argument("--even", action="store_true", help="count orbits of even proper colorings")
    p.add_argument("--verify", action="store_true", help="compare against Burnside enumeration")
    p.add_argument("--max-n", type=_positive_int)

    p = sub.add_parser("acyclic-orientations", help="list acyclic orientations of a graph")
    p.add_argument("graph")

    p = sub.add_parser("verify-graph-reciprocity", help="check the graph reciprocity laws")
    p.add_argument("graph")
    p.add_argument("--group", help="group file; trivial group when omitted")
    p.add_argument("--max-n", type=_positive_int)

    p = sub.add_parser("eval", help="evaluate a polynomial given by ascending coefficients")
    p.add_argument("--coeffs", required=True, help="comma separated rationals, constant term first")
    p.add_argument("--at", required=True, type=int)
    return parser


def job_from_args(args) -> JobSpec:
    inputs = [getattr(args, k) for k in ("poset", "graph") if getattr(args, k, None)]
    return JobSpec(
        command=args.command,
        inputs=inputs,
        group=getattr(args, "group", None),
        strict=getattr(args, "strict", False),
        even=getattr(args, "even", False),
        verify=getattr(args, "verify", False),
        max_n=getattr(args, "max_n", None),
        budget=args.budget if args.budget is not None else default_budget(),
        coeffs=getattr(args, "coeffs", None),
        at=getattr(args, "at", None),
    )


def parse_inputs(job: JobSpec):
    """Load the structure and group named by ``job``; the action is validated here."""
    if job.command in ("order-poly", "orbital-order-poly", "verify-reciprocity"):
        named = formats.load_poset(job.inputs[0])
        G = formats.load_group(job.group, named.names)
        check = is_order_action(named.obj, G)
    else:
        named = formats.load_graph(job.inputs[0])
        G = formats.load_group(job.group, named.names)
        check = is_graph_action(named.obj, G)
    if not check:
        g, a, b = check.witness
        names = named.names
        raise ActionError(
            f"{g.cycle_notation(names)} does not preserve the relation {names[a]} -> {names[b]}",
            {"element": g.cycle_notation(names), "pair": [names[a], names[b]]},
        )
    return named, G


def _values(poly, max_n):
    return [{"n": n, "value": fmt(evaluate(poly, n))} for n in range(1, max_n + 1)]


def _group_json(G):
    return {"order": G.order, "degree": G.m}


def cmd_order_poly(job, named, G):
    P = named.obj
    poly = order_polynomial(P, job.strict)
    max_n = job.max_n or P.size + 1
    return {
        "command": job.command,
        "size": P.size,
        "strict": job.strict,
        "polynomial": poly.to_json(),
        "values": _values(poly, max_n),
    }, True


def cmd_orbital_order_poly(job, named, G):
    P = named.obj
    result = orbital_order_polynomial(P, G, job.strict)
    max_n = job.max_n or P.size + 1
    out = {
        "command": job.command,
        "size": P.size,
        "strict": job.strict,
        "group": _group_json(G),
        "polynomial": result.polynomial.to_json(),
        "per_element": [
            {
                "element": s.element.cycle_notation(named.names),
                "cycle_count": s.cycle_count,
                "polynomial": s.polynomial.to_json(),
            }
            for s in result.per_element
        ],
    }
    ok = True
    rows = []
    for n in range(1, max_n + 1):
        row = {"n": n, "formula": fmt(evaluate(result.polynomial, n))}
        if job.verify:
            oracle = orbit_count_oracle(P, G, n, job.strict, job.budget)
            row["oracle"] = fmt(oracle)
            row["pass"] = evaluate(result.polynomial, n) == oracle
            ok &= row["pass"]
        rows.append(row)
    out["values"] = rows
    if job.verify:
        out["verified"] = ok
    return out, ok


def cmd_verify_reciprocity(job, named, G):
    P = named.obj
    max_n = job.max_n or P.size + 1
    report = verify_reciprocity(P, G, max_n, job.budget)
    rows = [
        {
            "n": r.n,
            "weak_at_minus_n": fmt(r.weak_at_minus_n),
            "signed_even_strict_orbits": fmt(r.signed_even_strict_orbits),
            "strict_at_minus_n": fmt(r.strict_at_minus_n),
            "signed_even_weak_orbits": fmt(r.signed_even_weak_orbits),
            "pass": r.passed,
        }
        for r in report.rows
    ]
    return {
        "command": job.command,
        "size": P.size,
        "group": _group_json(G),
        "weak": report.weak.to_json(),
        "strict": report.strict.to_json(),
        "rows": rows,
        "passed": report.passed,
    }, report.passed


def cmd_chromatic(job, named, G):
    graph = named.obj
    max_n = job.max_n or graph.vertex_count + 1
    out = {
        "command": job.command,
        "vertices": graph.vertex_count,
        "edges": len(graph.edges),
        "even": job.even,
        "group": _group_json(G),
    }
    ok = True
    if job.even:
        poly = even_chromatic_formula(graph, G)
        oracle = lambda n: even_proper_coloring_orbits(graph, G, n, job.budget)
        if job.verify:
            interp = even_chromatic_polynomial(graph, G, job.budget)
            out["interpolant_matches"] = interp == poly
            ok &= interp == poly
    else:
        result = orbital_chromatic_polynomial(graph, G, verify=False)
        poly = result.polynomial
        oracle = lambda n: chromatic_oracle(graph, G, n, job.budget)
        out["per_element"] = [
            {
                "element": s.element.cycle_notation(named.names),
                "cycle_count": s.cycle_count,
                "fixed_acyclic_orientations": s.fixed_orientations,
                "polynomial": s.polynomial.to_json(),
            }
            for s in result.per_element
        ]
        if job.verify:
            interp = from_values([oracle(n) for n in range(1, graph.vertex_count + 2)])
            out["interpolant_matches"] = interp == poly
            ok &= interp == poly
    out["polynomial"] = poly.to_json()
    rows = []
    for n in range(1, max_n + 1):
        row = {"n": n, "formula": fmt(evaluate(poly, n))}
        if job.verify:
            count = oracle(n)
            row["oracle"] = fmt(count)
            row["pass"] = evaluate(poly, n) == count
            ok &= row["pass"]
        rows.append(row)
    out["values"] = rows
    if job.verify:
        out["verified"] = ok
    return out, ok


def cmd_acyclic_orientations(job, named, G):
    graph = named.obj
    names = named.names
    sigmas = acyclic_orientations(graph)
    listed = []
    for s in sigmas:
        arcs = [[names[u if h == v else v], names[h]] for (u, v), h in zip(graph.edges, s)]
        listed.append(arcs)
    return {"command": job.command, "count": len(sigmas), "orientations": listed}, True


def cmd_verify_graph_reciprocity(job, named, G):
    graph = named.obj
    max_n = job.max_n or graph.vertex_count + 1
    report = verify_graph_reciprocity(graph, G, max_n, job.budget)
    rows = [
        {
            "n": r.n,
            "chromatic_at_minus_n": fmt(r.chromatic_at_minus_n),
            "signed_even_pair_orbits": fmt(r.signed_even_pair_orbits),
            "even_chromatic_at_minus_n": fmt(r.even_chromatic_at_minus_n),
            "signed_pair_orbits": fmt(r.signed_pair_orbits),
            "pass": r.passed,
        }
        for r in report.rows
    ]
    return {
        "command": job.command,
        "vertices": graph.vertex_count,
        "group": _group_json(G),
        "chromatic": report.chromatic.to_json(),
        "even_chromatic": report.even_chromatic.to_json(),
        "rows": rows,
        "passed": report.passed,
    }, report.passed


def cmd_eval(job):
    poly = RationalPolynomial(tuple(parse_rational(c) for c in job.coeffs.split(",")))
    return {
        "command": "eval",
        "polynomial": poly.to_json(),
        "at": job.at,
        "value": fmt(evaluate(poly, job.at)),
    }, True


HANDLERS = {
    "order-poly": cmd_order_poly,
    "orbital-order-poly": cmd_orbital_order_poly,
    "verify-reciprocity": cmd_verify_reciprocity,
    "chromatic": cmd_chromatic,
    "acyclic-orientations": cmd_acyclic_orientations,
    "verify-graph-reciprocity": cmd_verify_graph_reciprocity,
}


def run(job: JobSpec) -> tuple[dict, int]:
    if job.command == "eval":
        report, ok = cmd_eval(job)
    else:
        named, G = parse_inputs(job)
        report, ok = HANDLERS[job.command](job, named, G)
    return report, 0 if ok else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = job_from_args(args)
        report, code = run(job)
    except OrbitPolyError as exc:
        error = {"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
        witness = getattr(exc, "witness", None)
        if isinstance(witness, dict):
            error["witness"] = witness
        print(dumps(error))
        print(f"orbitpoly: {exc}", file=sys.stderr)
        return exc.exit_code
    print(dumps(report))
    status = "ok" if code == 0 else "FAILED"
    print(f"orbitpoly {job.command}: {status}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
