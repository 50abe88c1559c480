"""Command-line interface: solve, eval, and verify tropical problem files.

Problem files are JSON objects with a ``kind`` discriminator
(``two_sided``, ``matrix_lower``, ``locate``, ``approximate``,
``best_under``), kind-specific payload vectors/matrices, and optional
``name``/``description`` metadata.  Scalars are JSON numbers, with the
string ``"-inf"`` standing in for the tropical zero.

Exit codes: 0 success, 1 unreadable input (I/O or JSON syntax), 2 invalid
or infeasible problem (a machine-readable ``reason`` accompanies it),
3 verification grid over the size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .applications import (
    ApproximationProblem,
    LocationProblem,
    approximate,
    locate,
    reduced_two_sided,
)
from .linalg import (
    NotColumnRegularError,
    NotRegularError,
    ShapeMismatchError,
    TropMatrix,
    TropVector,
    ZeroVectorError,
    conjugate,
    mat_mul,
    vec_leq,
)
from .oracle import (
    BestUnderObjective,
    GridSpec,
    GridTooLargeError,
    MatrixLowerObjective,
    OracleReport,
    VerificationFailedError,
    best_under_box,
    matrix_lower_box,
    verify_interval,
    verify_point,
)
from .semifield import (
    NEG_INF,
    InvalidScalarError,
    TropicalError,
    UndefinedPowerError,
    ZeroInverseError,
)
from .solvers import (
    InfeasibleBoundsError,
    IntervalSolution,
    MatrixLowerProblem,
    TwoSidedProblem,
    best_underestimator,
    matrix_lower_terms,
    objective_matrix,
    objective_two_sided,
    solve_matrix_lower,
    solve_two_sided,
    two_sided_terms,
)


class ProblemFormatError(TropicalError):
    """Input does not match the problem-file schema."""


# subclass entries must precede their base class
_REASONS: tuple[tuple[type[TropicalError], str], ...] = (
    (ProblemFormatError, "parse_error"),
    (InfeasibleBoundsError, "infeasible_bounds"),
    (NotColumnRegularError, "not_column_regular"),
    (NotRegularError, "not_regular"),
    (ShapeMismatchError, "shape_mismatch"),
    (ZeroVectorError, "zero_vector"),
    (InvalidScalarError, "invalid_scalar"),
    (ZeroInverseError, "zero_inverse"),
    (UndefinedPowerError, "undefined_power"),
    (VerificationFailedError, "verification_failed"),
    (GridTooLargeError, "grid_too_large"),
    (TropicalError, "invalid_problem"),
)


def _reason(exc: TropicalError) -> str:
    for cls, reason in _REASONS:
        if isinstance(exc, cls):
            return reason
    return "invalid_problem"


@dataclass(frozen=True)
class BestUnderProblem:
    A: TropMatrix
    p: TropVector


@dataclass(frozen=True)
class LoadedProblem:
    kind: str
    problem: object
    name: str | None = None
    description: str | None = None


def _scalar_in(token, where: str) -> float:
    if token == "-inf":
        return NEG_INF
    if isinstance(token, bool) or not isinstance(token, (int, float)):
        raise ProblemFormatError(f'{where}: expected a number or "-inf", got {token!r}')
    return float(token)


def _scalar_out(v: float):
    if v == NEG_INF:
        return "-inf"
    return int(v) if float(v).is_integer() else v


def _vector_in(obj, where: str) -> TropVector:
    if not isinstance(obj, list) or not obj:
        raise ProblemFormatError(f"{where}: expected a nonempty array of scalars")
    return TropVector(tuple(_scalar_in(t, where) for t in obj))


def _matrix_in(obj, where: str) -> TropMatrix:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ProblemFormatError(f"{where}: expected an array of row arrays")
    return TropMatrix(
        tuple(tuple(_scalar_in(t, where) for t in row) for row in obj)
    )


def _vector_out(v: TropVector) -> list:
    return [_scalar_out(e) for e in v]


def _matrix_out(a: TropMatrix) -> list:
    return [[_scalar_out(e) for e in row] for row in a.entries]


_FIELDS = {
    "two_sided": ({"p", "q"}, {"g", "h"}),
    "matrix_lower": ({"A", "p", "q", "g"}, set()),
    "locate": ({"r", "s"}, {"g", "h"}),
    "approximate": ({"A", "p", "g"}, set()),
    "best_under": ({"A", "p"}, set()),
}


def parse_problem(doc) -> LoadedProblem:
    """Build a problem from a decoded JSON document, validating the schema."""
    if not isinstance(doc, dict):
        raise ProblemFormatError("problem file must be a JSON object")
    kind = doc.get("kind")
    if kind not in _FIELDS:
        raise ProblemFormatError(f"unknown problem kind {kind!r}")
    required, optional = _FIELDS[kind]
    allowed = required | optional | {"kind", "name", "description"}
    unknown = set(doc) - allowed
    if unknown:
        raise ProblemFormatError(f"unexpected fields for kind {kind}: {sorted(unknown)}")
    missing = required - set(doc)
    if missing:
        raise ProblemFormatError(f"missing fields for kind {kind}: {sorted(missing)}")

    def vec(key):
        return _vector_in(doc[key], key) if key in doc else None

    if kind == "two_sided":
        problem = TwoSidedProblem(p=vec("p"), q=vec("q"), g=vec("g"), h=vec("h"))
    elif kind == "matrix_lower":
        problem = MatrixLowerProblem(
            A=_matrix_in(doc["A"], "A"), p=vec("p"), q=vec("q"), g=vec("g")
        )
    elif kind == "locate":
        problem = LocationProblem(r=vec("r"), s=vec("s"), g=vec("g"), h=vec("h"))
    elif kind == "approximate":
        problem = ApproximationProblem(A=_matrix_in(doc["A"], "A"), p=vec("p"), g=vec("g"))
    else:
        problem = BestUnderProblem(A=_matrix_in(doc["A"], "A"), p=vec("p"))
        if problem.p.orientation != "col" or problem.A.rows != problem.p.dim:
            raise ShapeMismatchError("A and p dimensions do not conform")
    name = doc.get("name")
    description = doc.get("description")
    for meta, label in ((name, "name"), (description, "description")):
        if meta is not None and not isinstance(meta, str):
            raise ProblemFormatError(f"{label} must be a string")
    return LoadedProblem(kind=kind, problem=problem, name=name, description=description)


def problem_to_dict(lp: LoadedProblem) -> dict:
    """Serialize back to the file schema (round-trips with parse_problem)."""
    out: dict = {"kind": lp.kind}
    if lp.name is not None:
        out["name"] = lp.name
    if lp.description is not None:
        out["description"] = lp.description
    pr = lp.problem
    if lp.kind == "two_sided":
        out["p"], out["q"] = _vector_out(pr.p), _vector_out(pr.q)
        if pr.g is not None:
            out["g"] = _vector_out(pr.g)
        if pr.h is not None:
            out["h"] = _vector_out(pr.h)
    elif lp.kind == "matrix_lower":
        out["A"] = _matrix_out(pr.A)
        out["p"], out["q"], out["g"] = _vector_out(pr.p), _vector_out(pr.q), _vector_out(pr.g)
    elif lp.kind == "locate":
        out["r"], out["s"] = _vector_out(pr.r), _vector_out(pr.s)
        if pr.g is not None:
            out["g"] = _vector_out(pr.g)
        if pr.h is not None:
            out["h"] = _vector_out(pr.h)
    elif lp.kind == "approximate":
        out["A"] = _matrix_out(pr.A)
        out["p"], out["g"] = _vector_out(pr.p), _vector_out(pr.g)
    else:
        out["A"] = _matrix_out(pr.A)
        out["p"] = _vector_out(pr.p)
    return out


def solve_loaded(lp: LoadedProblem):
    if lp.kind == "two_sided":
        return solve_two_sided(lp.problem)
    if lp.kind == "matrix_lower":
        return solve_matrix_lower(lp.problem)
    if lp.kind == "locate":
        return locate(lp.problem)
    if lp.kind == "approximate":
        return approximate(lp.problem)
    return best_underestimator(lp.problem.A, lp.problem.p)


def _diagnostics(lp: LoadedProblem, sol) -> dict:
    if lp.kind in ("two_sided", "locate"):
        prob = lp.problem if lp.kind == "two_sided" else reduced_two_sided(lp.problem)
        terms = two_sided_terms(prob)
        out = {"delta_term": _scalar_out(terms["delta"])}
        if terms["g_term"] is not None:
            out["g_term"] = _scalar_out(terms["g_term"])
        if terms["h_term"] is not None:
            out["h_term"] = _scalar_out(terms["h_term"])
        return out
    if lp.kind in ("matrix_lower", "approximate"):
        prob = (
            lp.problem
            if lp.kind == "matrix_lower"
            else MatrixLowerProblem(lp.problem.A, lp.problem.p, lp.problem.p, lp.problem.g)
        )
        terms = matrix_lower_terms(prob)
        return {
            "delta_term": _scalar_out(terms["delta"]),
            "g_term": _scalar_out(terms["g_term"]),
        }
    return {"delta_term": _scalar_out(sol.delta)}


def solution_to_dict(lp: LoadedProblem, sol) -> dict:
    out: dict = {"kind": lp.kind}
    if lp.name is not None:
        out["name"] = lp.name
    out["mu"] = _scalar_out(sol.mu)
    out["delta"] = _scalar_out(sol.delta)
    if isinstance(sol, IntervalSolution):
        out["solution"] = {"lower": _vector_out(sol.lower), "upper": _vector_out(sol.upper)}
    else:
        out["solution"] = {"x": _vector_out(sol.x)}
    out["diagnostics"] = _diagnostics(lp, sol)
    return out


def objective_at(lp: LoadedProblem, x: TropVector) -> float:
    if lp.kind == "two_sided":
        return objective_two_sided(lp.problem, x)
    if lp.kind == "locate":
        return objective_two_sided(reduced_two_sided(lp.problem), x)
    if lp.kind == "matrix_lower":
        return objective_matrix(lp.problem, x)
    if lp.kind == "approximate":
        return objective_matrix(
            MatrixLowerProblem(lp.problem.A, lp.problem.p, lp.problem.p, lp.problem.g), x
        )
    ax = mat_mul(lp.problem.A, x)
    return mat_mul(conjugate(ax), lp.problem.p)


def is_feasible(lp: LoadedProblem, x: TropVector) -> bool:
    if lp.kind in ("two_sided", "locate"):
        g, h = lp.problem.g, lp.problem.h
        return (g is None or vec_leq(g, x)) and (h is None or vec_leq(x, h))
    if lp.kind in ("matrix_lower", "approximate"):
        return vec_leq(lp.problem.g, x)
    return vec_leq(mat_mul(lp.problem.A, x), lp.problem.p)


def verify_loaded(lp: LoadedProblem, sol, *, step: float, samples: int) -> OracleReport:
    if lp.kind in ("two_sided", "locate"):
        prob = lp.problem if lp.kind == "two_sided" else reduced_two_sided(lp.problem)
        return verify_interval(prob, sol, samples, step=step)
    if lp.kind in ("matrix_lower", "approximate"):
        prob = (
            lp.problem
            if lp.kind == "matrix_lower"
            else MatrixLowerProblem(lp.problem.A, lp.problem.p, lp.problem.p, lp.problem.g)
        )
        if not vec_leq(prob.g, sol.x):
            raise VerificationFailedError(
                "returned vector violates the lower bound", counterexample=sol.x
            )
        lo, hi = matrix_lower_box(prob, pads=(sol.x,))
        return verify_point(MatrixLowerObjective(prob), sol, GridSpec(lo, hi, step))
    A, p = lp.problem.A, lp.problem.p
    if not vec_leq(mat_mul(A, sol.x), p):
        raise VerificationFailedError(
            "returned vector violates the underestimation constraint", counterexample=sol.x
        )
    lo, hi = best_under_box(A, p, pads=(sol.x,))
    return verify_point(BestUnderObjective(A, p), sol, GridSpec(lo, hi, step))


def report_to_dict(lp: LoadedProblem, sol, report: OracleReport) -> dict:
    return {
        "kind": lp.kind,
        "mu": _scalar_out(sol.mu),
        "min_value": _scalar_out(report.min_value),
        "argmin": _vector_out(report.argmin),
        "points_evaluated": report.points_evaluated,
        "agrees_with_solver": report.agrees_with_solver,
        "max_discrepancy": report.max_discrepancy,
    }


def _reject_constant(token: str) -> float:
    raise ProblemFormatError(f"non-numeric scalar token {token!r} is not accepted")


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text, parse_constant=_reject_constant)


def _write_json(path: str, obj, pretty: bool) -> None:
    text = json.dumps(obj, indent=2 if pretty else None) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _error_payload(exc: TropicalError) -> dict:
    return {"error": {"reason": _reason(exc), "message": str(exc)}}


def solve_command(args: argparse.Namespace) -> int:
    try:
        doc = _read_json(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read problem: {exc}", file=sys.stderr)
        return 1
    except TropicalError as exc:
        _write_json(args.output, _error_payload(exc), args.pretty)
        return 2
    try:
        lp = parse_problem(doc)
        sol = solve_loaded(lp)
    except TropicalError as exc:
        _write_json(args.output, _error_payload(exc), args.pretty)
        return 2
    _write_json(args.output, solution_to_dict(lp, sol), args.pretty)
    return 0


def eval_command(args: argparse.Namespace) -> int:
    try:
        doc = _read_json(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read problem: {exc}", file=sys.stderr)
        return 1
    except TropicalError as exc:
        _write_json("-", _error_payload(exc), args.pretty)
        return 2
    try:
        lp = parse_problem(doc)
        try:
            point_doc = json.loads(args.point, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise ProblemFormatError(f"--point is not valid JSON: {exc}") from exc
        x = _vector_in(point_doc, "--point")
        value = objective_at(lp, x)
        feasible = is_feasible(lp, x)
    except TropicalError as exc:
        _write_json("-", _error_payload(exc), args.pretty)
        return 2
    _write_json(
        "-",
        {"kind": lp.kind, "value": _scalar_out(value), "feasible": feasible},
        args.pretty,
    )
    return 0


def verify_command(args: argparse.Namespace) -> int:
    try:
        doc = _read_json(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read problem: {exc}", file=sys.stderr)
        return 1
    except TropicalError as exc:
        _write_json("-", _error_payload(exc), args.pretty)
        return 2
    try:
        lp = parse_problem(doc)
        sol = solve_loaded(lp)
    except TropicalError as exc:
        _write_json("-", _error_payload(exc), args.pretty)
        return 2
    try:
        report = verify_loaded(lp, sol, step=args.step, samples=args.samples)
    except GridTooLargeError as exc:
        _write_json("-", _error_payload(exc), args.pretty)
        return 3
    except VerificationFailedError as exc:
        payload = _error_payload(exc)
        payload["agrees_with_solver"] = False
        if exc.counterexample is not None:
            payload["counterexample"] = _vector_out(exc.counterexample)
        _write_json("-", payload, args.pretty)
        return 2
    _write_json("-", report_to_dict(lp, sol, report), args.pretty)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tropopt",
        description="Solve constrained max-plus optimization problems in closed form.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve a problem file and write the solution")
    sp.add_argument("input", help='problem JSON path, or "-" for stdin')
    sp.add_argument("output", nargs="?", default="-", help='solution path, or "-" for stdout')
    sp.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sp.set_defaults(func=solve_command)

    ep = sub.add_parser("eval", help="evaluate the objective at a point")
    ep.add_argument("input", help='problem JSON path, or "-" for stdin')
    ep.add_argument("--point", required=True, help='JSON array, e.g. "[0, 0, 0]"')
    ep.add_argument("--pretty", action="store_true", help="indent the JSON output")
    ep.set_defaults(func=eval_command)

    vp = sub.add_parser("verify", help="solve, then check against the brute-force oracle")
    vp.add_argument("input", help='problem JSON path, or "-" for stdin')
    vp.add_argument("--step", type=float, default=0.5, help="oracle lattice step (default 0.5)")
    vp.add_argument("--samples", type=int, default=1000, help="sample count (default 1000)")
    vp.add_argument("--pretty", action="store_true", help="indent the JSON output")
    vp.set_defaults(func=verify_command)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
