"""Command-line front end.

Exit codes: 0 success/valid/zero, 1 invalid/nonzero, 2 inconclusive,
3 usage error (bad arguments, unreadable or malformed input files).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import exact_linalg as la
from .diagram import validate_diagram
from .finite_hopf import haar_integral, kappa
from .formats import (
    FormatError,
    algebra_from_dict,
    comodule_from_dict,
    diagram_from_dict,
    graph_from_dict,
    hopf_from_dict,
    load_json,
    point_from_dict,
    presentation_from_dict,
)
from .measured_algebra import invertible_decomposition, validate
from .ncrewrite import NCPolynomial, PolynomialSyntaxError, Verdict
from .presentation import (
    UnsupportedDiagram,
    check_hopf_wellformedness,
    classical_point_failures,
    classical_points,
    present,
)

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _parse_coords(text: str) -> tuple:
    text = text.strip()
    if text.startswith("["):
        items = json.loads(text)
    else:
        items = [t for t in text.replace(",", " ").split() if t]
    try:
        return la.vector(str(x) for x in items)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse coordinates {text!r}: {e}") from e


# subcommands ---------------------------------------------------------------------


def cmd_validate_algebra(args) -> int:
    z = algebra_from_dict(load_json(args.algebra))
    report = validate(z)
    _emit(args, report.to_dict(), str(report))
    return EXIT_OK if report else EXIT_INVALID


def _present_and_check(args, diagram) -> int:
    report = validate_diagram(diagram)
    if not report:
        _emit(args, report.to_dict(), str(report))
        return EXIT_INVALID
    pres = present(diagram)
    payload = pres.to_dict()
    text = [f"objects: {pres.objects}", f"generators ({len(pres.generators)}): {' '.join(pres.generators)}",
            f"relations ({len(pres.relations)}):"]
    text += [f"  {r.label}: {r.polynomial.format(pres.generators)} = 0" for r in pres.relations]
    text.append("antipode:")
    for x, mat in payload["antipode"].items():
        for i, row in enumerate(mat, 1):
            for j, s in enumerate(row, 1):
                text.append(f"  S(u{x}_{i}{j}) = {s}")
    code = EXIT_OK
    if not args.skip_checks:
        check = check_hopf_wellformedness(pres, args.degree_cap, coproduct=not args.skip_coproduct)
        payload["checks"] = check.summary()
        s = check.summary()
        text.append(f"checks (degree cap {s['degree_cap']}, rewrite status {s['status']}, tensor square {s['tensor_status']}):")
        text.append(f"  counit kills relations: {s['counit']['checked'] - s['counit']['failed']}/{s['counit']['checked']}")
        text.append(f"  coproduct: {s['coproduct']}")
        text.append(f"  antipode:  {s['antipode']}")
        if check.failed:
            code = EXIT_INVALID
            text.append(f"  FAILED: {', '.join(check.failed)}")
        elif check.inconclusive:
            code = EXIT_INCONCLUSIVE
            text.append(f"  inconclusive: {', '.join(check.inconclusive)}")
        else:
            text.append("  all checks Zero")
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
        text.append(f"presentation written to {args.out}")
    _emit(args, payload, "\n".join(text))
    return code


def cmd_present(args) -> int:
    diagram = diagram_from_dict(load_json(args.diagram), Path(args.diagram).parent)
    return _present_and_check(args, diagram)


def cmd_present_graph(args) -> int:
    return _present_and_check(args, graph_from_dict(load_json(args.graph)))


def cmd_aut(args) -> int:
    diagram = diagram_from_dict(load_json(args.diagram), Path(args.diagram).parent)
    report = validate_diagram(diagram)
    if not report:
        _emit(args, report.to_dict(), str(report))
        return EXIT_INVALID
    try:
        points = classical_points(diagram)
    except UnsupportedDiagram as e:
        raise UsageError(str(e)) from e
    payload = {
        "count": len(points),
        "points": [{x: [[str(v) for v in row] for row in m] for x, m in p.items()} for p in points],
    }
    lines = [f"{len(points)} classical points"]
    for k, p in enumerate(points, 1):
        parts = []
        for x, m in p.items():
            # e_i -> e_sigma(i): read the permutation off the columns
            sigma = [next(r for r in range(len(m)) if m[r][c]) + 1 for c in range(len(m))]
            parts.append(f"{x}: {sigma}")
        lines.append(f"  #{k}  " + "  ".join(parts))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify_point(args) -> int:
    pres = presentation_from_dict(load_json(args.presentation))
    point = point_from_dict(load_json(args.point))
    try:
        failures = classical_point_failures(pres, point)
    except (ValueError, la.DimensionError) as e:
        raise FormatError(str(e)) from e
    ok = not failures
    _emit(args, {"valid": ok, "violated": failures},
          "true" if ok else "false\nviolated: " + ", ".join(failures))
    return EXIT_OK if ok else EXIT_INVALID


def cmd_haar(args) -> int:
    h = hopf_from_dict(load_json(args.hopf))
    res = haar_integral(h, side=args.side)
    payload = {
        "side": res.side,
        "integral": [str(x) for x in res.integral] if res.integral else None,
        "is_measure": res.is_measure,
        "cosemisimple": res.cosemisimple,
        "solution_dimension": res.solution_dimension,
        "anomaly": res.anomaly or None,
    }
    if res.integral is None:
        _emit(args, payload, f"no unique Haar measure: {res.anomaly}")
        return EXIT_INVALID
    _emit(args, payload, "\n".join([
        f"J = {_fmt_vec(res.integral)}  ({res.side} colinear)",
        f"measure: {str(res.is_measure).lower()}",
        f"cosemisimple: {str(res.cosemisimple).lower()}",
    ]))
    return EXIT_OK


def cmd_kappa(args) -> int:
    h = hopf_from_dict(load_json(args.hopf))
    v = comodule_from_dict(load_json(args.comodule), h)
    comod = v.validate()
    if not comod:
        _emit(args, comod.to_dict(), str(comod))
        return EXIT_INVALID
    res = kappa(v)
    n = len(res.forward)
    payload = {"size": n, "invertible": res.ok, "report": res.report.to_dict()}
    _emit(args, payload, f"kappa on V (x) A of dimension {n}: " +
          ("inverse verified (both composites are the identity)" if res.ok else str(res.report)))
    return EXIT_OK if res.ok else EXIT_INVALID


def cmd_nf(args) -> int:
    pres = presentation_from_dict(load_json(args.presentation))
    try:
        p = NCPolynomial.parse(args.poly)
    except PolynomialSyntaxError as e:
        raise UsageError(f"--poly: {e}") from e
    unknown = p.generators() - set(pres.generators)
    if unknown:
        raise UsageError(f"--poly uses unknown generators: {sorted(unknown)}")
    system = pres.system(args.degree_cap)
    m = system.membership(p)
    nf = m.normal_form.format(pres.generators)
    payload = {"verdict": m.verdict.value, "normal_form": nf, "status": m.status,
               "degree_cap": system.degree_cap, "rules": len(system)}
    if m.verdict is Verdict.ZERO:
        text = "Zero"
    elif m.verdict is Verdict.NONZERO:
        text = f"NonzeroWitness: {nf}"
    else:
        text = f"Inconclusive (rewrite system {m.status} at degree cap {system.degree_cap}): {nf}"
    _emit(args, payload, text)
    return {Verdict.ZERO: EXIT_OK, Verdict.NONZERO: EXIT_INVALID, Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE}[m.verdict]


def cmd_decompose_invertible(args) -> int:
    z = algebra_from_dict(load_json(args.algebra))
    a = _parse_coords(args.element)
    if len(a) != z.dim:
        raise UsageError(f"--element has {len(a)} coordinates, algebra has dimension {z.dim}")
    parts = invertible_decomposition(z, a)
    payload = {"terms": [{"coefficient": str(c), "element": [str(x) for x in e]} for c, e in parts]}
    lines = [f"{len(parts)} term(s)"] + [f"  {c} * {_fmt_vec(e)}" for c, e in parts]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qaut", description="Quantum automorphism Hopf algebras of diagrams of measured algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("--format", choices=("text", "json"), default="text", help="output format")
        p.set_defaults(func=func)
        return p

    p = add("validate-algebra", cmd_validate_algebra, "check associativity, unit and nondegeneracy of a measured algebra")
    p.add_argument("algebra", help="algebra JSON file")

    for name, func, arg, help_ in (
        ("present", cmd_present, "diagram", "present the quantum automorphism Hopf algebra of a diagram"),
        ("present-graph", cmd_present_graph, "graph", "present the quantum automorphism Hopf algebra of a graph"),
    ):
        p = add(name, func, help_)
        p.add_argument(arg, help=f"{arg} JSON file")
        p.add_argument("--degree-cap", type=int, default=None, help="completion degree cap (default 2 x max relation degree)")
        p.add_argument("--out", help="write the presentation JSON here")
        p.add_argument("--skip-checks", action="store_true", help="do not run the Hopf well-formedness checks")
        p.add_argument("--skip-coproduct", action="store_true", help="skip the tensor-square coproduct check")

    p = add("aut", cmd_aut, "enumerate classical points (diagram automorphisms) of a diagram of function algebras")
    p.add_argument("diagram", help="diagram JSON file")

    p = add("verify-point", cmd_verify_point, "check that a scalar matrix per object satisfies every relation")
    p.add_argument("presentation", help="presentation JSON (from present --out)")
    p.add_argument("point", help="point JSON: {object id: matrix}")

    p = add("haar", cmd_haar, "Haar measure of a finite-dimensional Hopf algebra")
    p.add_argument("hopf", help="Hopf algebra JSON file")
    p.add_argument("--side", choices=("right", "left"), default="right", help="colinearity convention")

    p = add("kappa", cmd_kappa, "build kappa_V and its explicit inverse and verify both composites")
    p.add_argument("hopf", help="Hopf algebra JSON file")
    p.add_argument("comodule", help="comodule JSON file")

    p = add("nf", cmd_nf, "normal form of a polynomial modulo a presentation")
    p.add_argument("presentation", help="presentation JSON (from present --out)")
    p.add_argument("--poly", required=True, help='polynomial, e.g. "u0_11*u0_22 - u0_22*u0_11"')
    p.add_argument("--degree-cap", type=int, default=None)

    p = add("decompose-invertible", cmd_decompose_invertible, "write an element as a combination of invertible elements")
    p.add_argument("algebra", help="algebra JSON file")
    p.add_argument("--element", required=True, help='coordinates, e.g. "0,1" or "[\\"1/2\\", 0]"')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, UsageError) as e:
        print(f"qaut {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
