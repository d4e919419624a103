"""Physics case studies wired through the generic polynomial-solution criteria.

Covered here:

* the Davidson-potential radial equation
      x f'' - (2x^2 - 2(mu+1)) f' - (2 mu + 3 - eps) x f = 0,
  whose even-degree polynomial solutions exist at eps = 2 mu + 3 + 2 N;

* the d-dimensional shifted Coulomb problem with potential -Z/(r+beta),
  reduced (after factoring out r^(k+1) e^(-alpha r), k = (2l+d-3)/2 and
  alpha = Z/(n+k+1)) to
      r(r+beta) f'' + (-2 alpha r^2 + 2(k+1-alpha beta) r + 2 beta(k+1)) f'
        + ((2Z - 2 alpha(k+1)) r - 2 alpha beta (k+1)) f = 0,
  whose criterion matrix is tridiagonal and yields constraint polynomials
  in the product t = alpha beta;

* two quartic/cubic oscillator equations from the literature,
      x^3 y'' + alpha (x^2 - 1) y' + (beta x + gamma) y = 0    (krylov_robnik)
      y'' + (p - 2x^2) y' + (delta x + alpha) y = 0            (chhajlany)
  solved for the parameter constraints at each degree;

* a two-parameter exactly solvable class
      x^2 (b(m+n) + a x^(l-1)) y'' - (m+n) a x^l y' - (m+n) m (m+1) b y = 0
  whose solutions are x^(m+1) times a terminating Gauss hypergeometric
  series in the variable -a x^(l-1) / (b(m+n)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Union

from .criteria import (
    EquationSpec,
    ScalarLike,
    as_scalar,
    build_criterion_matrix,
    degree_condition,
    delta_determinant,
    verify_solution,
)
from .exactalg import UPoly, poly_gcd, tridiagonal_continuant


class BadDegreeError(ValueError):
    """The series degree is incompatible with the power step l-1."""


class DegenerateParametersError(ValueError):
    """b = 0 or m + n = 0 leaves the equation undefined."""


# ---------------------------------------------------------------------------
# Davidson potential

def davidson_spec(mu: ScalarLike, eps: ScalarLike) -> EquationSpec:
    mu_s, eps_s = as_scalar(mu), as_scalar(eps)
    one = UPoly.one()
    return EquationSpec(
        a3=(0, 0, 1, 0),
        a2=(-2, 0, 2 * (mu_s + one)),
        tau=(2 * mu_s + 3 * one - eps_s, 0),
    )


def davidson_eigenvalue(mu: ScalarLike, n: int):
    """eps_n = 2 mu + 3 + 4 n; the node count n targets degree N = 2n."""
    if n < 0:
        raise ValueError("node count must be nonnegative")
    value = 2 * as_scalar(mu) + UPoly.constant(3 + 4 * n)
    return value.constant_value() if value.is_constant else value


# ---------------------------------------------------------------------------
# shifted Coulomb potential

@dataclass(frozen=True)
class CoulombProblem:
    """Charge Z, positive shift beta, dimension d >= 2, angular momentum l."""

    Z: Fraction
    beta: Fraction
    d: int
    l: int

    def __post_init__(self):
        object.__setattr__(self, "Z", Fraction(self.Z))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.beta <= 0:
            raise ValueError("shift beta must be positive")
        if self.d < 2:
            raise ValueError("dimension must be at least 2")
        if self.l < 0:
            raise ValueError("angular momentum must be nonnegative")

    @property
    def k(self) -> Fraction:
        return Fraction(2 * self.l + self.d - 3, 2)


def coulomb_alpha(p: CoulombProblem, n: int) -> Fraction:
    """Exponential falloff rate fixed by the degree condition."""
    return p.Z / (n + p.k + 1)


def coulomb_energy(p: CoulombProblem, n: int) -> Fraction:
    """E = -Z^2 / (2 (n+k+1)^2), exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    denom = n + p.k + 1
    return -p.Z * p.Z / (2 * denom * denom)


def coulomb_spec(p: CoulombProblem, n: int) -> EquationSpec:
    """Equation for the polynomial factor, with alpha = Z/(n+k+1) applied.

    The criterion matrix of the result is tridiagonal; its entries are
    asserted against the closed forms
        diagonal       2 alpha beta (k+j+1) - j (j+2k+1)
        subdiagonal    2 alpha (j-n-1)
        superdiagonal  -(j+1) beta (j+2k+2)
    on every build.
    """
    k = p.k
    alpha = coulomb_alpha(p, n)
    beta = p.beta
    eq = EquationSpec(
        a3=(0, 1, beta, 0),
        a2=(-2 * alpha, 2 * (k + 1 - alpha * beta), 2 * beta * (k + 1)),
        tau=(2 * alpha * (k + 1) - 2 * p.Z, 2 * alpha * beta * (k + 1)),
    )
    matrix = build_criterion_matrix(eq, n)
    t = alpha * beta
    for j in range(n + 1):
        assert matrix.entry(j, j) == 2 * t * (k + j + 1) - j * (j + 2 * k + 1)
        if j >= 1:
            assert matrix.entry(j, j - 1) == 2 * alpha * (j - n - 1)
        if j + 1 <= n:
            assert matrix.entry(j, j + 1) == -(j + 1) * beta * (j + 2 * k + 2)
    return eq


def coulomb_constraint_for_k(k: Union[Fraction, int, UPoly], n: int) -> UPoly:
    """Constraint polynomial in t = alpha beta for a given k.

    k may be a rational number or a polynomial (pass UPoly([0, 1]) to carry
    k symbolically; coefficients of the result are then polynomials in k).
    The raw tridiagonal determinant always carries the inadmissible root
    t = 0 and a k-dependent constant factor; both are stripped so the result
    is the primitive constraint polynomial.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    symbolic = isinstance(k, UPoly) and not k.is_constant
    if isinstance(k, UPoly) and k.is_constant:
        k = k.constant_value()
    if symbolic:
        const = UPoly.constant
    else:
        k = Fraction(k)
        const = Fraction
    diagonal = []
    for j in range(n + 1):
        c0 = -(const(j * (j + 1)) + (2 * j) * k)
        c1 = const(2 * (j + 1)) + 2 * k
        diagonal.append(UPoly([c0, c1]))
    products = []
    for j in range(n):
        slope = (-2 * (j - n) * (j + 1)) * (const(j + 2) + 2 * k)
        products.append(UPoly([const(0), slope]))
    determinant = tridiagonal_continuant(diagonal, products)
    return _reduce_constraint(determinant, symbolic)


def coulomb_constraint(p: CoulombProblem, n: int) -> UPoly:
    """Primitive constraint polynomial in t = alpha beta; its positive real
    roots give the admissible shifts beta = t / alpha."""
    return coulomb_constraint_for_k(p.k, n)


def _reduce_constraint(det: UPoly, symbolic: bool) -> UPoly:
    coeffs = list(det.coeffs)
    low = 0
    while low < len(coeffs) and not coeffs[low]:
        low += 1
    coeffs = coeffs[low:]
    if not coeffs:
        return UPoly()
    if not symbolic:
        return UPoly(coeffs).primitive_part()
    content = None
    for c in coeffs:
        content = c if content is None else poly_gcd(content, c)
    if content and not content.is_constant:
        coeffs = [c / content for c in coeffs]
    inner = [f for c in coeffs for f in c.coeffs]
    scale = Fraction(
        lcm(*(f.denominator for f in inner)), gcd(*(f.numerator for f in inner))
    )
    if coeffs[-1].coeffs[-1] < 0:
        scale = -scale
    return UPoly([c * scale for c in coeffs])


# ---------------------------------------------------------------------------
# two literature oscillator examples

def krylov_robnik_spec(
    alpha: ScalarLike, beta: ScalarLike, gamma: ScalarLike
) -> EquationSpec:
    """x^3 y'' + alpha (x^2 - 1) y' + (beta x + gamma) y = 0."""
    alpha_s = as_scalar(alpha)
    return EquationSpec(
        a3=(1, 0, 0, 0),
        a2=(alpha_s, 0, -alpha_s),
        tau=(-as_scalar(beta), -as_scalar(gamma)),
    )


def krylov_robnik_analyze(alpha: ScalarLike, n: int) -> tuple[Fraction, UPoly]:
    """The degree-n value beta = -n^2 - (alpha-1) n together with the
    constraint polynomial in the unknown t = gamma."""
    if n < 1:
        raise ValueError("n must be at least 1")
    alpha_f = Fraction(alpha)
    beta = -Fraction(n * n) - (alpha_f - 1) * n
    eq = krylov_robnik_spec(alpha_f, beta, UPoly([0, 1]))
    return beta, delta_determinant(eq, n)


def chhajlany_spec(
    p: ScalarLike, delta: ScalarLike, alpha: ScalarLike
) -> EquationSpec:
    """y'' + (p - 2x^2) y' + (delta x + alpha) y = 0."""
    return EquationSpec(
        a3=(0, 0, 0, 1),
        a2=(-2, 0, as_scalar(p)),
        tau=(-as_scalar(delta), -as_scalar(alpha)),
    )


def chhajlany_analyze(p: ScalarLike, n: int) -> UPoly:
    """Constraint polynomial in the unknown t = alpha, with the degree-n
    value delta = 2n substituted."""
    if n < 1:
        raise ValueError("n must be at least 1")
    eq = chhajlany_spec(p, 2 * n, UPoly([0, 1]))
    return delta_determinant(eq, n)


# ---------------------------------------------------------------------------
# terminating hypergeometric class

@dataclass(frozen=True)
class HyperSolution:
    """x^prefactor_exponent times a terminating series in x^(l-1).

    series[j] multiplies x^(prefactor_exponent + j (l-1)); series[0] = 1.
    """

    m: int
    n: int
    l: int
    a: Fraction
    b: Fraction
    prefactor_exponent: int
    series: tuple[Fraction, ...]

    def polynomial(self) -> UPoly:
        top = self.prefactor_exponent + (len(self.series) - 1) * (self.l - 1)
        coeffs = [Fraction(0)] * (top + 1)
        for j, c in enumerate(self.series):
            coeffs[self.prefactor_exponent + j * (self.l - 1)] = c
        return UPoly(coeffs)


def hyper_build(m: int, n: int, l: int, a, b) -> HyperSolution:
    """Terminating-series solution for given m >= 1, n >= 0, l >= 2.

    The series is the Gauss hypergeometric sum with parameters
    (-n/(l-1), (m+1)/(l-1); (2m+l)/(l-1)) in the variable
    -a x^(l-1) / (b(n+m)); termination requires n to be a multiple of l-1.
    The prefactor exponent m+1 is the indicial root at x = 0 (the series
    substitution variable is proportional to x^(l-1), whose (m+1)/(l-1)
    power is exactly x^(m+1)).
    """
    if m < 1 or n < 0 or l < 2:
        raise ValueError("need m >= 1, n >= 0, l >= 2")
    a, b = Fraction(a), Fraction(b)
    if not b or m + n == 0:
        raise DegenerateParametersError("b must be nonzero and m + n positive")
    if l > 2 and n % (l - 1):
        raise BadDegreeError(f"degree {n} is not a multiple of {l - 1}")
    nu = n // (l - 1)
    pa = Fraction(-nu)
    pb = Fraction(m + 1, l - 1)
    pc = Fraction(2 * m + l, l - 1)
    w = -a / (b * (n + m))
    series = [Fraction(1)]
    for j in range(nu):
        series.append(series[j] * (pa + j) * (pb + j) / ((pc + j) * (j + 1)) * w)
    return HyperSolution(
        m=m, n=n, l=l, a=a, b=b, prefactor_exponent=m + 1, series=tuple(series)
    )


def hyper_equation_spec(m: int, n: int, l: int, a, b) -> EquationSpec:
    """The cleared equation as an EquationSpec; only l = 2 fits the cubic
    coefficient template."""
    if l != 2:
        raise ValueError("only l = 2 maps onto the generic equation form")
    a, b = Fraction(a), Fraction(b)
    s = m + n
    return EquationSpec(
        a3=(a, b * s, 0, 0),
        a2=(-s * a, 0, 0),
        tau=(0, s * m * (m + 1) * b),
    )


def hyper_verify(sol: HyperSolution) -> bool:
    """Exact residual test in the cleared form

        x^2 (b(m+n) + a x^(l-1)) y'' - (m+n) a x^l y' - (m+n) m(m+1) b y.

    For l = 2 the same coefficients form a cubic-template equation and the
    generic residual checker must agree; both verdicts are combined.
    """
    m, n, l, a, b = sol.m, sol.n, sol.l, sol.a, sol.b
    y = sol.polynomial()
    s = m + n
    x = UPoly.x()
    front = (x ** 2) * (UPoly.constant(b * s) + a * x ** (l - 1))
    residual = (
        front * y.derivative().derivative()
        - (s * a) * (x ** l) * y.derivative()
        - (s * m * (m + 1) * b) * y
    )
    ok = not residual
    if l == 2:
        eq = hyper_equation_spec(m, n, l, a, b)
        ok = ok and verify_solution(eq, y.coeffs)
        ok = ok and degree_condition(eq, n + m + 1) == 0
    return ok
