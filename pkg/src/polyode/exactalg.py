"""Exact rational scalars, dense univariate polynomials, and determinant kernels.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), always in
lowest terms with a positive denominator, so structural equality is
mathematical equality.  ``Rational`` is re-exported here as the canonical
scalar type for the whole package; its string form is ``"p/q"`` (or ``"p"``
when the denominator is 1), which is also the serialization format.

``UPoly`` is a dense univariate polynomial given by its coefficient tuple in
ascending power order.  The zero polynomial is canonically the empty tuple,
so again structural equality is mathematical equality.  Coefficients are
normally ``Fraction``; they may instead be ``UPoly`` themselves, giving
polynomials over a polynomial coefficient ring (used when a determinant has
to carry a second symbolic parameter).  Every operation is a pure function
of immutable values, so all types here are safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction

#: Degree reported for the zero polynomial.
NEG_INFINITY = float("-inf")

Scalar = Union[int, Fraction]
Coefficient = Union[Fraction, "UPoly"]


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division was requested but the remainder is nonzero."""


def _coerce(value) -> Coefficient:
    if isinstance(value, (Fraction, UPoly)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"unsupported coefficient type: {type(value).__name__}")


class UPoly:
    """Immutable univariate polynomial, coefficients in ascending power order."""

    __slots__ = ("coeffs",)

    def __init__(self, coefficients: Iterable = ()) -> None:
        cs = [_coerce(c) for c in coefficients]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "UPoly":
        return cls(())

    @classmethod
    def one(cls) -> "UPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UPoly":
        """The identity polynomial p(x) = x."""
        return cls((0, 1))

    @classmethod
    def constant(cls, value) -> "UPoly":
        return cls((value,))

    @classmethod
    def from_strings(cls, strings: Sequence[str]) -> "UPoly":
        """Parse the serialized form: a list of rational strings, ascending."""
        return cls(Fraction(s) for s in strings)

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self):
        """Degree of the polynomial; ``NEG_INFINITY`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading(self) -> Coefficient:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if len(self.coeffs) > 1:
            raise ValueError(f"{self!r} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Coefficient:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    def __sub__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "UPoly":
        return UPoly(-c for c in self.coeffs)

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            if not self.coeffs or not other.coeffs:
                return UPoly()
            out: list = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    p = a * b
                    out[i + j] = p if out[i + j] is None else out[i + j] + p
            return UPoly(out)
        if isinstance(other, (int, Fraction)):
            return UPoly(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        if exponent == 0:
            return UPoly.one()
        result = self
        for _ in range(exponent - 1):
            result = result * self
        return result

    def __divmod__(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        """Polynomial long division.  Coefficient divisions must be exact
        (always true over the rationals)."""
        if not isinstance(other, UPoly):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return UPoly(), UPoly()
        zero = self.coeffs[-1] * 0
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quo = [zero] * max(0, len(rem) - d)
        while True:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d or not rem:
                break
            f = rem[-1] / lead
            pos = len(rem) - 1 - d
            quo[pos] = f
            for i, c in enumerate(other.coeffs):
                rem[pos + i] = rem[pos + i] - c * f
        return UPoly(quo), UPoly(rem)

    def __mod__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[1]

    def __truediv__(self, other) -> "UPoly":
        """Exact division.  Scalars divide coefficientwise; for a polynomial
        divisor the remainder must vanish, else ``NotDivisibleError``."""
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return UPoly(c / other for c in self.coeffs)
        if isinstance(other, UPoly):
            if other.is_constant:
                return self / other.constant_value()
            quotient, remainder = divmod(self, other)
            if remainder:
                raise NotDivisibleError(f"{self!r} is not divisible by {other!r}")
            return quotient
        return NotImplemented

    # -- calculus and evaluation --------------------------------------------

    def derivative(self) -> "UPoly":
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, value):
        """Evaluate by Horner's rule at a rational point."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * value + c
        return value * 0 if acc is None else acc

    # -- normal forms --------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients.

        Only defined for Fraction coefficients and nonzero polynomials.
        """
        if not self.coeffs:
            raise ValueError("zero polynomial has no content")
        num = gcd(*(c.numerator for c in self.coeffs))
        den = lcm(*(c.denominator for c in self.coeffs))
        return Fraction(num, den)

    def primitive_part(self) -> "UPoly":
        """self divided by its content, sign-fixed to a positive leading term."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return self / c

    # -- comparison / misc ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        """Human-readable rendering, highest power first."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if isinstance(c, UPoly):
                body = f"({c.format(var='k')})"
                sign = "+"
            else:
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = "" if (mag == 1 and i > 0) else str(mag)
            if i == 0:
                term = body or "1"
            elif i == 1:
                term = f"{body}*{var}" if body else var
            else:
                term = f"{body}*{var}^{i}" if body else f"{var}^{i}"
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """Monic greatest common divisor over the rationals (Euclid)."""
    a, b = p, q
    while b:
        a, b = b, a % b
    if not a:
        return a
    return a / a.leading


def squarefree_part(p: UPoly) -> UPoly:
    """p with repeated factors collapsed to multiplicity one."""
    g = poly_gcd(p, p.derivative())
    if g.is_constant:
        return p
    return p / g


def bareiss_determinant(rows: Sequence[Sequence]) -> UPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate division is exact in the entry ring, so the result is
    exact for polynomial entries without any rational-function arithmetic.
    Row swaps are tracked with a sign flip; a fully zero pivot column short
    circuits to the zero result.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    a = [list(r) for r in rows]
    for row in a:
        if len(row) != n:
            raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return a[0][0] * 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def banded_determinant(rows: Sequence[Sequence]) -> UPoly:
    """Determinant of a matrix with one subdiagonal and two superdiagonals.

    Uses the order-3 recurrence on leading principal minors implied by the
    band (expansion along the last column), so it needs only ring operations.
    Entries outside the band are assumed zero and never read.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    dets: list = []
    for m in range(1, n + 1):
        k = m - 1
        term = rows[k][k] * dets[-1] if m >= 2 else rows[k][k]
        if m >= 2:
            p = rows[k][k - 1] * rows[k - 1][k]
            term = term - (p * dets[-2] if m >= 3 else p)
        if m >= 3:
            p = rows[k][k - 1] * rows[k - 1][k - 2] * rows[k - 2][k]
            term = term + (p * dets[-3] if m >= 4 else p)
        dets.append(term)
    return dets[-1]


def tridiagonal_continuant(diagonal: Sequence, offdiagonal_products: Sequence):
    """Determinant of a tridiagonal matrix from its diagonal entries and the
    products of paired off-diagonal entries.

    ``offdiagonal_products[i]`` must equal (row i+1, col i) * (row i, col i+1).
    Only products of off-diagonal pairs enter a tridiagonal determinant, so
    this works even when the individual factors live outside the coefficient
    ring of the result.
    """
    n = len(diagonal)
    if n == 0:
        raise ValueError("empty matrix")
    if len(offdiagonal_products) != n - 1:
        raise ValueError("need exactly n-1 off-diagonal products")
    prev2 = None
    prev = diagonal[0]
    for i in range(1, n):
        cross = offdiagonal_products[i - 1]
        if prev2 is not None:
            cross = cross * prev2
        cur = diagonal[i] * prev - cross
        prev2, prev = prev, cur
    return prev
