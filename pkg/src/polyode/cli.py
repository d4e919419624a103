"""Command-line interface.

Commands
--------
check        decide whether a numeric equation has a degree-n polynomial
             solution (determinant criterion, iteration criterion, or both)
             and construct it; --max-n sweeps all degrees up to a cap
constraints  for an equation with one unknown parameter, emit the degree
             condition, the determinant constraint polynomial, its real
             roots, and verified solutions at every exact rational root
demo         run a named case study end to end
heun         map a Heun-family equation onto the generic form and emit its
             polynomial-solution conditions

Machine-readable JSON goes to stdout; a short human summary goes to stderr
unless --json is given.  Exact values are serialized as strings ("p/q");
only refined root approximations are floats.  Exit codes: 0 when a verified
solution (or admissible parameter value) exists, 2 when not, 1 on input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import applications as apps
from . import heun as heun_mod
from .aim import NotSecondOrderError, aim_test_polynomial, default_iteration_cap
from .criteria import (
    AmbiguousNullspaceError,
    EquationSpec,
    NoNullspaceError,
    PolySolution,
    classical_polynomials,
    classical_tau,
    construct_solution,
    degree_condition_effective,
    delta_determinant,
    embed_classical,
    verify_solution,
)
from .exactalg import UPoly
from .solve import DEFAULT_TOLERANCE, analyze_roots

DEMO_NAMES = (
    "davidson",
    "coulomb",
    "krylov",
    "chhajlany",
    "hyper",
    "bessel",
    "heun-confluent",
    "heun-biconfluent",
    "heun-general",
)


class CliError(Exception):
    """Input problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyode")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="suppress the human summary on stderr")
        p.add_argument("--tolerance", type=_fraction, default=DEFAULT_TOLERANCE,
                       help="root refinement tolerance (default 1e-12)")

    p_check = sub.add_parser("check", parents=[], help="test one equation")
    p_check.add_argument("input", help="equation JSON file, or - for stdin")
    p_check.add_argument("--n", type=int, help="target polynomial degree")
    p_check.add_argument("--max-n", type=int, dest="max_n",
                         help="sweep degrees 0..max-n instead of a single n")
    p_check.add_argument("--method", choices=("determinant", "aim", "both"),
                         default="both")
    p_check.add_argument("--unknown", help="name of the unknown parameter")
    common(p_check)

    p_con = sub.add_parser("constraints", help="solve for the unknown parameter")
    p_con.add_argument("input", help="equation JSON file, or - for stdin")
    p_con.add_argument("--n", type=int, required=True)
    p_con.add_argument("--unknown", help="name of the unknown parameter")
    common(p_con)

    p_demo = sub.add_parser("demo", help="run a named case study")
    p_demo.add_argument("name")
    p_demo.add_argument("--n", type=int, default=1)
    p_demo.add_argument("--max-n", type=int, dest="max_n")
    p_demo.add_argument("--mu", type=_fraction, default=Fraction(0))
    p_demo.add_argument("--eps", type=_fraction)
    p_demo.add_argument("--tau00", type=_fraction)
    p_demo.add_argument("--Z", type=_fraction, default=Fraction(1))
    p_demo.add_argument("--d", type=int, default=3)
    p_demo.add_argument("--l", type=int, default=0)
    p_demo.add_argument("--beta", type=_fraction)
    p_demo.add_argument("--alpha", type=_fraction, default=Fraction(1))
    p_demo.add_argument("--p", type=_fraction, default=Fraction(1))
    p_demo.add_argument("--m", type=int, default=1)
    p_demo.add_argument("--a", type=_fraction, default=Fraction(1))
    p_demo.add_argument("--b", type=_fraction, default=Fraction(1))
    p_demo.add_argument("--params", help="JSON parameter object (heun demos)")
    common(p_demo)

    p_heun = sub.add_parser("heun", help="Heun-family polynomial conditions")
    p_heun.add_argument("family", choices=("confluent", "biconfluent", "general"))
    p_heun.add_argument("--params", required=True,
                        help="JSON object of family parameters")
    p_heun.add_argument("--n", type=int, required=True)
    common(p_heun)

    return parser


# ---------------------------------------------------------------------------
# shared report pieces

def _solution_dict(sol: PolySolution) -> dict:
    return {
        "coefficients": [str(c) for c in sol.coefficients],
        "degree": sol.reported_degree,
        "verified": sol.residual_is_zero,
        "polynomial": sol.polynomial().format(),
    }


def _construct_solutions(eq: EquationSpec, n: int, notes: list[str]) -> list[PolySolution]:
    try:
        return [construct_solution(eq, n)]
    except AmbiguousNullspaceError as exc:
        notes.append("nullspace dimension exceeds one; reporting the whole basis")
        return list(exc.solutions)
    except NoNullspaceError:
        notes.append("determinant vanished but no nullspace vector was found")
        return []


def analyze_check(eq: EquationSpec, n: int, method: str,
                  tolerance: Fraction = DEFAULT_TOLERANCE) -> dict:
    start = time.monotonic()
    notes: list[str] = []
    level, cond = degree_condition_effective(eq, n)
    cond_holds = cond == 0
    report: dict = {
        "equation": eq.to_json_dict(),
        "n": n,
        "degree_condition": {
            "level": level,
            "polynomial": cond.to_strings(),
            "holds": cond_holds,
        },
    }
    solutions: list[PolySolution] = []
    det_exists = False
    if method in ("determinant", "both"):
        det = delta_determinant(eq, n)
        report["determinant"] = {
            "coefficients": det.to_strings(),
            "is_zero": not det,
        }
        if cond_holds and not det:
            solutions = _construct_solutions(eq, n, notes)
            det_exists = any(s.residual_is_zero for s in solutions)
    aim_index = None
    if method in ("aim", "both"):
        cap = default_iteration_cap(n)
        try:
            aim_index = aim_test_polynomial(eq, cap)
        except NotSecondOrderError as exc:
            raise CliError(str(exc)) from exc
        report["aim"] = {"found_index": aim_index, "cap": cap}
    if method == "aim":
        exists = aim_index is not None
    else:
        exists = det_exists
        if method == "both" and det_exists != (aim_index is not None):
            notes.append(
                "criterion paths disagree at this degree; the iteration index "
                "tracks the solution degree, not the requested one"
            )
    report["solutions"] = [_solution_dict(s) for s in solutions]
    report["exists"] = exists
    report["notes"] = notes
    report["timing_seconds"] = time.monotonic() - start
    return report


def analyze_constraints(eq: EquationSpec, n: int,
                        tolerance: Fraction = DEFAULT_TOLERANCE) -> dict:
    start = time.monotonic()
    notes: list[str] = []
    level, cond = degree_condition_effective(eq, n)
    det = delta_determinant(eq, n)
    report: dict = {
        "equation": eq.to_json_dict(),
        "n": n,
        "unknown": eq.unknown,
        "degree_condition": {"level": level, "polynomial": cond.to_strings()},
        "determinant": det.to_strings(),
    }
    roots_dict = {"intervals": [], "roots": [], "exact": [], "nonreal_count": 0}
    exact_roots: list[Fraction] = []
    exists = False
    if cond == 0:
        if not det:
            notes.append("determinant vanishes identically; every parameter value works")
            exists = True
        elif det.is_constant:
            notes.append("determinant is a nonzero constant; no parameter value works")
        else:
            root_report = analyze_roots(det, tolerance=tolerance)
            roots_dict = root_report.to_json_dict()
            exact_roots = list(root_report.exact_rational_roots)
            exists = bool(root_report.intervals)
    elif isinstance(cond.degree, int) and cond.degree == 1:
        required = -cond.coeffs[0] / cond.coeffs[1]
        report["degree_condition"]["required_value"] = str(required)
        if det(required) == 0:
            root_report = analyze_roots(cond, tolerance=tolerance)
            roots_dict = root_report.to_json_dict()
            exact_roots = [required]
            exists = True
        else:
            notes.append(
                "the degree condition pins the parameter but the determinant "
                "does not vanish there"
            )
    else:
        notes.append("degree condition cannot be satisfied for any parameter value")
    report["roots"] = roots_dict
    solutions = []
    for root in exact_roots:
        fixed = eq.substitute(root)
        for sol in _construct_solutions(fixed, n, notes):
            entry = _solution_dict(sol)
            entry[eq.unknown] = str(root)
            solutions.append(entry)
    report["solutions"] = solutions
    report["exists"] = exists
    report["notes"] = notes
    report["timing_seconds"] = time.monotonic() - start
    return report


# ---------------------------------------------------------------------------
# input plumbing

def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _parse_equation(text: str, unknown_flag) -> EquationSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(
            f"malformed JSON at line {exc.lineno} column {exc.colno} "
            f"(char {exc.pos}): {exc.msg}"
        ) from exc
    if unknown_flag and "unknown" not in data:
        data["unknown"] = unknown_flag
    try:
        return EquationSpec.from_json_dict(data)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _scalar_from_json(value, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise CliError(
            f"{where}: use exact strings like \"1/2\", not floats"
        )
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"{where}: not an exact rational: {value!r}") from exc
    if isinstance(value, list):
        return UPoly([_scalar_from_json(v, where) for v in value])
    if isinstance(value, dict) and len(value) == 1:
        (_, coeffs), = value.items()
        return UPoly([_scalar_from_json(v, where) for v in coeffs])
    raise CliError(f"{where}: bad scalar {value!r}")


def _params_dict(args) -> dict:
    if not args.params:
        raise CliError("this command needs --params with a JSON object")
    try:
        data = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise CliError(
            f"malformed JSON at line {exc.lineno} column {exc.colno} "
            f"(char {exc.pos}): {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise CliError("--params must be a JSON object")
    return {k: _scalar_from_json(v, f"params[{k!r}]") for k, v in data.items()}


# ---------------------------------------------------------------------------
# commands

def cmd_check(args) -> tuple[dict, int]:
    eq = _parse_equation(_read_input(args.input), args.unknown)
    if not eq.is_numeric:
        raise CliError(
            "check needs a fully numeric equation; use `constraints` to solve "
            "for the unknown parameter"
        )
    if args.max_n is not None:
        reports = [
            analyze_check(eq, n, args.method, args.tolerance)
            for n in range(args.max_n + 1)
        ]
        exists = any(r["exists"] for r in reports)
        report = {
            "sweep": reports,
            "degrees_with_solutions": [r["n"] for r in reports if r["exists"]],
            "exists": exists,
        }
        return report, 0 if exists else 2
    if args.n is None:
        raise CliError("check needs --n or --max-n")
    report = analyze_check(eq, args.n, args.method, args.tolerance)
    return report, 0 if report["exists"] else 2


def cmd_constraints(args) -> tuple[dict, int]:
    eq = _parse_equation(_read_input(args.input), args.unknown)
    if eq.is_numeric:
        raise CliError("constraints needs exactly one unknown parameter")
    report = analyze_constraints(eq, args.n, args.tolerance)
    return report, 0 if report["exists"] else 2


def _heun_equation(family: str, params: dict) -> EquationSpec:
    try:
        if family == "confluent":
            return heun_mod.confluent_to_spec(
                heun_mod.ConfluentHeunParams(**params)
            )
        if family == "biconfluent":
            return heun_mod.biconfluent_to_spec(
                heun_mod.BiconfluentHeunParams(**params)
            )
        return heun_mod.general_to_spec(heun_mod.GeneralHeunParams(**params))
    except TypeError as exc:
        raise CliError(f"bad parameters for {family}: {exc}") from exc
    except heun_mod.FuchsianViolationError as exc:
        raise CliError(str(exc)) from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_heun(args) -> tuple[dict, int]:
    eq = _heun_equation(args.family, _params_dict(args))
    if eq.is_numeric:
        report = analyze_check(eq, args.n, "both", args.tolerance)
    else:
        report = analyze_constraints(eq, args.n, args.tolerance)
    report["family"] = args.family
    return report, 0 if report["exists"] else 2


def cmd_demo(args) -> tuple[dict, int]:
    name = args.name
    if name not in DEMO_NAMES:
        raise CliError(
            f"unknown demo {name!r}; valid names: {', '.join(DEMO_NAMES)}"
        )
    if name == "davidson":
        return _demo_davidson(args)
    if name == "coulomb":
        return _demo_coulomb(args)
    if name == "krylov":
        return _demo_krylov(args)
    if name == "chhajlany":
        return _demo_chhajlany(args)
    if name == "hyper":
        return _demo_hyper(args)
    if name == "bessel":
        return _demo_bessel(args)
    family = name.removeprefix("heun-")
    args.family = family
    report, code = cmd_heun(args)
    return report, code


def _demo_davidson(args) -> tuple[dict, int]:
    mu, n = args.mu, args.n
    eps = args.eps if args.eps is not None else apps.davidson_eigenvalue(mu, n)
    degree = 2 * n
    eq = apps.davidson_spec(mu, eps)
    report = analyze_check(eq, degree, "both", args.tolerance)
    report.update({
        "name": "davidson",
        "mu": str(mu),
        "node_count": n,
        "degree": degree,
        "eigenvalue": str(eps),
    })
    return report, 0 if report["exists"] else 2


def _demo_coulomb(args) -> tuple[dict, int]:
    try:
        beta = args.beta
        n = args.n
        problem_beta = beta if beta is not None else Fraction(1)
        problem = apps.CoulombProblem(Z=args.Z, beta=problem_beta, d=args.d, l=args.l)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    alpha = apps.coulomb_alpha(problem, n)
    constraint = apps.coulomb_constraint(problem, n)
    roots = analyze_roots(constraint, tolerance=args.tolerance)
    report = {
        "name": "coulomb",
        "Z": str(problem.Z),
        "d": problem.d,
        "l": problem.l,
        "k": str(problem.k),
        "n": n,
        "alpha": str(alpha),
        "energy": str(apps.coulomb_energy(problem, n)),
        "constraint": constraint.to_strings(),
        "roots": roots.to_json_dict(),
        "beta_values": [str(r / alpha) for r in roots.exact_rational_roots],
        "solutions": [],
        "notes": [],
    }
    for root in roots.exact_rational_roots:
        beta_value = root / alpha
        if beta_value <= 0:
            continue
        fixed = apps.CoulombProblem(Z=args.Z, beta=beta_value, d=args.d, l=args.l)
        eq = apps.coulomb_spec(fixed, n)
        for sol in _construct_solutions(eq, n, report["notes"]):
            entry = _solution_dict(sol)
            entry["beta"] = str(beta_value)
            report["solutions"].append(entry)
    report["exists"] = bool(roots.intervals)
    return report, 0 if report["exists"] else 2


def _demo_krylov(args) -> tuple[dict, int]:
    beta, constraint = apps.krylov_robnik_analyze(args.alpha, args.n)
    roots = analyze_roots(constraint, tolerance=args.tolerance)
    report = {
        "name": "krylov",
        "alpha": str(args.alpha),
        "n": args.n,
        "beta": str(beta),
        "constraint": constraint.to_strings(),
        "roots": roots.to_json_dict(),
        "solutions": [],
        "notes": [],
    }
    for root in roots.exact_rational_roots:
        eq = apps.krylov_robnik_spec(args.alpha, beta, root)
        for sol in _construct_solutions(eq, args.n, report["notes"]):
            entry = _solution_dict(sol)
            entry["gamma"] = str(root)
            report["solutions"].append(entry)
    report["exists"] = bool(roots.intervals)
    return report, 0 if report["exists"] else 2


def _demo_chhajlany(args) -> tuple[dict, int]:
    constraint = apps.chhajlany_analyze(args.p, args.n)
    roots = analyze_roots(constraint, tolerance=args.tolerance)
    report = {
        "name": "chhajlany",
        "p": str(args.p),
        "n": args.n,
        "delta": str(2 * args.n),
        "constraint": constraint.to_strings(),
        "roots": roots.to_json_dict(),
        "solutions": [],
        "notes": [],
    }
    for root in roots.exact_rational_roots:
        eq = apps.chhajlany_spec(args.p, 2 * args.n, root)
        for sol in _construct_solutions(eq, args.n, report["notes"]):
            entry = _solution_dict(sol)
            entry["alpha"] = str(root)
            report["solutions"].append(entry)
    report["exists"] = bool(roots.intervals)
    return report, 0 if report["exists"] else 2


def _demo_hyper(args) -> tuple[dict, int]:
    try:
        sol = apps.hyper_build(args.m, args.n, args.l, args.a, args.b)
    except (apps.BadDegreeError, apps.DegenerateParametersError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    verified = apps.hyper_verify(sol)
    report = {
        "name": "hyper",
        "m": args.m,
        "n": args.n,
        "l": args.l,
        "a": str(sol.a),
        "b": str(sol.b),
        "prefactor_exponent": sol.prefactor_exponent,
        "series": [str(c) for c in sol.series],
        "polynomial": sol.polynomial().format(),
        "coefficients": [str(c) for c in sol.polynomial().coeffs],
        "verified": verified,
        "exists": verified,
    }
    return report, 0 if verified else 2


def _demo_bessel(args) -> tuple[dict, int]:
    n = args.n
    tau00 = args.tau00 if args.tau00 is not None else classical_tau(1, 2, n)
    eq = embed_classical((1, 0, 0), (2, 2), tau00)
    report = analyze_check(eq, n, "both", args.tolerance)
    report.update({"name": "bessel", "tau00": str(tau00)})
    ladder = classical_polynomials((1, 0, 0), (2, 2), n + 1)
    ladder_poly = ladder[n]
    report["ladder_polynomial"] = ladder_poly.format()
    report["ladder_solves_equation"] = (
        tau00 == classical_tau(1, 2, n)
        and verify_solution(eq, list(ladder_poly.coeffs))
    )
    return report, 0 if report["exists"] else 2


# ---------------------------------------------------------------------------
# human summaries

def _summarize(report: dict) -> list[str]:
    lines = []
    if "sweep" in report:
        degrees = report["degrees_with_solutions"]
        lines.append(
            f"degrees admitting polynomial solutions: {degrees or 'none'}"
        )
        return lines
    if "degree_condition" in report:
        cond = report["degree_condition"]
        if "holds" in cond:
            lines.append(f"degree condition: {'holds' if cond['holds'] else 'fails'}")
        elif "required_value" in cond:
            lines.append(f"degree condition requires parameter = {cond['required_value']}")
    if "determinant" in report and isinstance(report["determinant"], dict):
        lines.append(
            "criterion determinant: "
            + ("zero" if report["determinant"]["is_zero"] else "nonzero")
        )
    if "roots" in report and report["roots"].get("roots"):
        lines.append(f"parameter roots: {report['roots']['roots']}")
    if report.get("aim"):
        idx = report["aim"]["found_index"]
        lines.append(
            "iteration criterion: "
            + (f"vanishes at index {idx}" if idx is not None else "not found")
        )
    for sol in report.get("solutions", []):
        lines.append(f"solution: {sol['polynomial']} (verified={sol['verified']})")
    if "polynomial" in report and "verified" in report:
        lines.append(
            f"solution: {report['polynomial']} (verified={report['verified']})"
        )
    if "exists" in report:
        lines.append(f"exists: {report['exists']}")
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "check":
            report, code = cmd_check(args)
        elif args.command == "constraints":
            report, code = cmd_constraints(args)
        elif args.command == "demo":
            report, code = cmd_demo(args)
        else:
            report, code = cmd_heun(args)
    except CliError as exc:
        print(f"polyode: error: {exc}", file=sys.stderr)
        return 1
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if not args.json:
        for line in _summarize(report):
            print(line, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
