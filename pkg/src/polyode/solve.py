"""Certified real-root isolation and refinement for constraint polynomials.

The workflow is Sturm-chain counting plus interval bisection, so every step
is exact rational arithmetic; floating point appears only in the final
refined output values.  Complex roots are out of scope; their number is
reported as the square-free degree minus the count of distinct real roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactalg import UPoly, poly_gcd, squarefree_part

DEFAULT_TOLERANCE = Fraction(1, 10**12)
DEFAULT_RANGE = Fraction(10**6)


class ZeroPolynomialError(ValueError):
    """Root finding on the zero polynomial is meaningless."""


class NotIsolatingError(ValueError):
    """The supplied interval does not contain exactly one root."""


@dataclass(frozen=True)
class RootReport:
    """Isolation and refinement summary for one polynomial.

    Each interval (lo, hi] contains exactly one distinct real root, certified
    by Sturm counts; ``refined`` holds one float per interval, accurate to
    the requested tolerance, and ``exact_rational_roots`` lists the subset of
    roots that are exactly rational.
    """

    polynomial: UPoly
    intervals: tuple[tuple[Fraction, Fraction], ...]
    refined: tuple[float, ...]
    exact_rational_roots: tuple[Fraction, ...]
    nonreal_count: int

    def to_json_dict(self) -> dict:
        return {
            "intervals": [[str(lo), str(hi)] for lo, hi in self.intervals],
            "roots": list(self.refined),
            "exact": [str(r) for r in self.exact_rational_roots],
            "nonreal_count": self.nonreal_count,
        }


def sturm_chain(p: UPoly) -> list[UPoly]:
    """Sturm sequence p, p', then negated remainders until termination.

    Remainders are rescaled by their (positive) content to tame coefficient
    growth; positive scaling preserves every sign and hence all counts.
    """
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    chain = [p]
    if len(p.coeffs) > 1:
        chain.append(p.derivative())
        while chain[-1]:
            rem = -(chain[-2] % chain[-1])
            if not rem:
                break
            chain.append(rem / rem.content())
    return chain


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _variations(signs: Sequence[int]) -> int:
    flips = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            flips += 1
        last = s
    return flips


def _variations_at(chain: Sequence[UPoly], x: Fraction) -> int:
    return _variations([_sign(f(x)) for f in chain])


def _variations_at_infinity(chain: Sequence[UPoly], positive: bool) -> int:
    signs = []
    for f in chain:
        s = _sign(f.leading)
        if not positive and f.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_real_roots(p: UPoly, lo: Optional[Fraction] = None,
                     hi: Optional[Fraction] = None) -> int:
    """Number of distinct real roots in (lo, hi]; whole line by default."""
    chain = sturm_chain(p)
    v_lo = (
        _variations_at_infinity(chain, positive=False)
        if lo is None
        else _variations_at(chain, lo)
    )
    v_hi = (
        _variations_at_infinity(chain, positive=True)
        if hi is None
        else _variations_at(chain, hi)
    )
    return v_lo - v_hi


def root_bound(p: UPoly) -> Fraction:
    """Cauchy bound 1 + max |c_i| / |lead|: all real roots are inside."""
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs) / lead


def _nonzero_split(p: UPoly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    step = (hi - lo) / 4
    candidate = mid
    while p(candidate) == 0:
        candidate = mid + step
        step /= 2
    return candidate


def isolate_real_roots(
    p: UPoly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None
) -> RootReport:
    """Disjoint intervals each holding exactly one distinct real root.

    The default search range is (-10^6, 10^6), widened to the Cauchy root
    bound when that is larger, so no root is ever missed by default.
    Endpoints that happen to be roots are nudged outward first.
    """
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    if len(p.coeffs) == 1:
        return RootReport(p, (), (), (), 0)
    bound = root_bound(p)
    if lo is None:
        lo = -max(DEFAULT_RANGE, bound)
    if hi is None:
        hi = max(DEFAULT_RANGE, bound)
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    nudge = (hi - lo) / 1024
    while p(lo) == 0:
        lo -= nudge
    while p(hi) == 0:
        hi += nudge

    chain = sturm_chain(p)
    intervals: list[tuple[Fraction, Fraction]] = []
    total = _variations_at(chain, lo) - _variations_at(chain, hi)
    stack = [(lo, hi, total)]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            intervals.append((a, b))
            continue
        mid = _nonzero_split(p, a, b)
        left = _variations_at(chain, a) - _variations_at(chain, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, count - left))
    intervals.sort()
    assert len(intervals) == total

    sf = squarefree_part(p)
    nonreal = int(sf.degree) - count_real_roots(p)
    return RootReport(
        polynomial=p,
        intervals=tuple(intervals),
        refined=(),
        exact_rational_roots=(),
        nonreal_count=nonreal,
    )


def refine_root(
    p: UPoly,
    interval: tuple[Fraction, Fraction],
    tolerance: Fraction = DEFAULT_TOLERANCE,
) -> float:
    """Bisect an isolating interval down to the tolerance; exact endpoint
    arithmetic throughout, float conversion only at the end.

    Multiple roots are handled by deflating to the square-free part first;
    an interval whose Sturm count is not exactly one raises
    ``NotIsolatingError``.
    """
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    work = squarefree_part(p)
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if count_real_roots(work, lo, hi) != 1:
        raise NotIsolatingError(f"interval ({lo}, {hi}] does not isolate one root")
    if work(hi) == 0:
        return float(hi)
    if work(lo) == 0:
        # lo itself is an excluded root; move it inward without crossing
        # the isolated root (work is square-free, so no other root lies
        # between lo and the isolated one)
        step = (hi - lo) / 2
        while True:
            candidate = lo + step
            if work(candidate) != 0 and count_real_roots(work, candidate, hi) == 1:
                lo = candidate
                break
            step /= 2
    sign_lo = _sign(work(lo))
    while hi - lo >= tolerance:
        mid = (lo + hi) / 2
        value = work(mid)
        if value == 0:
            return float(mid)
        if _sign(value) == sign_lo:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def rational_roots(p: UPoly) -> tuple[Fraction, ...]:
    """All rational roots, found exactly via the rational-root theorem on
    the primitive integer form."""
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    roots = []
    coeffs = list(p.primitive_part().coeffs)
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if len(coeffs) > 1:
        tail = abs(int(coeffs[0]))
        lead = abs(int(coeffs[-1]))
        q = UPoly(coeffs)
        for num in _divisors(tail):
            for den in _divisors(lead):
                for candidate in (Fraction(num, den), Fraction(-num, den)):
                    if candidate not in roots and q(candidate) == 0:
                        roots.append(candidate)
    return tuple(sorted(roots))


def _divisors(value: int) -> list[int]:
    out = []
    d = 1
    while d * d <= value:
        if value % d == 0:
            out.append(d)
            if d != value // d:
                out.append(value // d)
        d += 1
    return sorted(out)


def analyze_roots(
    p: UPoly,
    lo: Optional[Fraction] = None,
    hi: Optional[Fraction] = None,
    tolerance: Fraction = DEFAULT_TOLERANCE,
) -> RootReport:
    """Isolate, refine, and detect exact rational roots in one report."""
    report = isolate_real_roots(p, lo, hi)
    refined = tuple(
        refine_root(p, interval, tolerance) for interval in report.intervals
    )
    exacts = rational_roots(p)
    exact_in_range = tuple(
        r for r in exacts
        if any(a < r <= b for a, b in report.intervals)
    )
    return RootReport(
        polynomial=report.polynomial,
        intervals=report.intervals,
        refined=refined,
        exact_rational_roots=exact_in_range,
        nonreal_count=report.nonreal_count,
    )
