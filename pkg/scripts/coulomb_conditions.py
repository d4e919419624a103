#!/usr/bin/env python3
"""Tabulate the shifted-Coulomb polynomial-solution conditions.

First the constraint polynomials in t = alpha*beta with the angular constant
k carried symbolically, then a fully numeric example: admissible shifts and
the exact energy for a chosen (Z, d, l).
"""

import argparse
from fractions import Fraction

from polyode.applications import (
    CoulombProblem,
    coulomb_alpha,
    coulomb_constraint,
    coulomb_constraint_for_k,
    coulomb_energy,
    coulomb_spec,
)
from polyode.criteria import construct_solution
from polyode.exactalg import UPoly
from polyode.solve import analyze_roots


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--Z", type=Fraction, default=Fraction(1))
    parser.add_argument("--d", type=int, default=3)
    parser.add_argument("--l", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=4)
    args = parser.parse_args()

    print("symbolic constraints in t = alpha*beta (coefficients in k):")
    for n in range(1, args.max_n + 1):
        constraint = coulomb_constraint_for_k(UPoly([0, 1]), n)
        terms = ", ".join(
            f"t^{i}: {c.format(var='k')}" for i, c in enumerate(constraint.coeffs)
        )
        print(f"  n={n}: {terms}")

    problem = CoulombProblem(Z=args.Z, beta=1, d=args.d, l=args.l)
    print(f"\nnumeric case Z={args.Z} d={args.d} l={args.l} (k={problem.k}):")
    for n in range(1, args.max_n + 1):
        alpha = coulomb_alpha(problem, n)
        constraint = coulomb_constraint(problem, n)
        report = analyze_roots(constraint)
        energy = coulomb_energy(problem, n)
        print(f"  n={n}: alpha={alpha}, E={energy}, "
              f"constraint={constraint.format(var='t')}")
        print(f"        real roots ~ {[round(r, 9) for r in report.refined]}")
        for root in report.exact_rational_roots:
            beta = root / alpha
            if beta <= 0:
                continue
            fixed = CoulombProblem(Z=args.Z, beta=beta, d=args.d, l=args.l)
            sol = construct_solution(coulomb_spec(fixed, n), n)
            print(f"        beta={beta}: f(r) = {sol.polynomial().format(var='r')} "
                  f"(verified={sol.residual_is_zero})")


if __name__ == "__main__":
    main()
