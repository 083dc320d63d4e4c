"""Exact real algebraic numbers given by a polynomial and an isolating interval.

:class:`BoundConstant` is the threshold ``a`` the classifier compares
against; its defining polynomial is irreducible, so "is ``a`` a root of p"
reduces to divisibility.  :class:`RootEnclosure` wraps a root of an
arbitrary square-free polynomial (component indices) and decides vanishing
through a gcd instead.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Union

from .intpoly import (
    IntPoly,
    X,
    bisect_root,
    count_roots_above,
    divides,
    gcd,
    primitive_part,
    root_bound,
    sign_at_rational,
    squarefree_part,
    sturm_count,
    sturm_sequence,
    variations_at,
    variations_at_inf,
)

DEFAULT_BUDGET = 512


class RefinementBudgetExceeded(RuntimeError):
    pass


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def _check_irreducible(p: IntPoly) -> None:
    # multiplicities are found by dividing out the defining polynomial, so it
    # must be minimal; degrees 1 and 2 are the ones we can certify cheaply
    if p.degree > 2:
        raise ValueError("bound constants of degree > 2 are not supported; use RootEnclosure")
    if p.degree == 2:
        c, b, a = p.coeffs
        disc = b * b - 4 * a * c
        if _is_square(disc):
            raise ValueError(f"{p} is reducible over the rationals")


@dataclass(frozen=True)
class _Point:
    """Shared interval machinery for a real root of ``poly`` in (lo, hi]."""

    poly: IntPoly
    lo: Fraction
    hi: Fraction

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def approx(self) -> float:
        lo, hi = bisect_root(self.poly, self.lo, self.hi, Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def __float__(self):
        return self.approx

    def bisect(self):
        """Halve the isolating interval."""
        mid = (self.lo + self.hi) / 2
        if sturm_count(self.poly, self.lo, mid) >= 1:
            return replace(self, hi=mid)
        return replace(self, lo=mid)

    def refine(self, width, budget: int = DEFAULT_BUDGET):
        """Same number with isolating interval no wider than ``width``."""
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        if self.width <= width:
            return self
        pt = self
        for _ in range(budget):
            pt = pt.bisect()
            if pt.width <= width:
                return pt
        raise RefinementBudgetExceeded(f"could not refine {self} to width {width}")

    def vanishes(self, p: IntPoly) -> bool:
        raise NotImplementedError

    def away_from_roots(self, p: IntPoly, allow_self: bool = False, budget=DEFAULT_BUDGET):
        """Refine until the interval holds no root of ``p`` other than this number.

        With ``allow_self`` the number itself may be a root of ``p``; callers
        pass ``allow_self=self.vanishes(p)``.
        """
        target = 1 if allow_self else 0
        pt = self
        for _ in range(budget):
            if sturm_count(p, pt.lo, pt.hi) == target:
                return pt
            pt = pt.bisect()
        raise RefinementBudgetExceeded(
            f"roots of {p} not separated from {self} within {budget} bisections "
            "(is the defining polynomial irreducible?)"
        )

    def sign_of(self, p: IntPoly, budget: int = DEFAULT_BUDGET) -> Sign:
        """Exact sign of ``p`` at this number."""
        if p.is_zero():
            raise ValueError("sign of the zero polynomial")
        if self.vanishes(p):
            return Sign.ZERO
        pt = self.away_from_roots(p, budget=budget)
        # p has no root in (lo, hi], so its sign there is constant and hi is inside
        return Sign(sign_at_rational(p, pt.hi))

    def roots_above(self, p: IntPoly, budget: int = DEFAULT_BUDGET) -> int:
        """Distinct real roots of ``p`` strictly greater than this number."""
        pt = self.away_from_roots(p, allow_self=self.vanishes(p), budget=budget)
        return count_roots_above(p, pt.hi)

    def roots_below(self, p: IntPoly, budget: int = DEFAULT_BUDGET) -> int:
        pt = self.away_from_roots(p, allow_self=self.vanishes(p), budget=budget)
        chain = sturm_sequence(p)
        return variations_at_inf(chain, False) - variations_at(chain, pt.lo)


@dataclass(frozen=True)
class BoundConstant(_Point):
    """A real algebraic number with irreducible defining polynomial.

    ``name`` is a display label only and takes no part in equality.
    """

    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        p = primitive_part(self.poly)
        if p.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        object.__setattr__(self, "poly", p)
        if self.lo >= self.hi:
            # degenerate point representation is not used; keep (l, u] nonempty
            raise ValueError(f"empty interval ({self.lo}, {self.hi}]")
        if sturm_count(p, self.lo, self.hi) != 1:
            raise ValueError(f"({self.lo}, {self.hi}] does not isolate one root of {p}")
        _check_irreducible(p)

    def __eq__(self, other):
        if not isinstance(other, BoundConstant):
            return NotImplemented
        if self.poly != other.poly:
            return False
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return lo < hi and sturm_count(self.poly, lo, hi) == 1

    def __hash__(self):
        # equal values may carry different intervals; hash on the polynomial
        return hash(self.poly)

    @property
    def defining(self) -> IntPoly:
        return self.poly

    @property
    def is_rational(self) -> bool:
        return self.poly.degree == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        c0, c1 = self.poly.coeffs
        return Fraction(-c0, c1)

    def vanishes(self, p: IntPoly) -> bool:
        return divides(self.poly, p)

    def label(self) -> str:
        if self.name:
            return self.name
        if self.is_rational:
            return str(self.as_fraction())
        return f"root of {self.poly} in ({self.lo}, {self.hi}]"

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class RootEnclosure(_Point):
    """One root of a square-free (not necessarily irreducible) polynomial."""

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if sturm_count(self.poly, self.lo, self.hi) != 1:
            raise ValueError(f"({self.lo}, {self.hi}] does not isolate one root of {self.poly}")

    @property
    def source(self) -> IntPoly:
        return self.poly

    def vanishes(self, p: IntPoly) -> bool:
        g = gcd(self.poly, p)
        return g.degree >= 1 and sturm_count(g, self.lo, self.hi) >= 1

    def __str__(self):
        return f"{self.approx:.10g}"


Point = Union[BoundConstant, RootEnclosure]


# --- constructors -----------------------------------------------------------


def from_rational(r, name: Optional[str] = None) -> BoundConstant:
    r = Fraction(r)
    return BoundConstant(IntPoly((-r.numerator, r.denominator)), r - 1, r, name=name)


def quad_surd(p, q, d: int, name: Optional[str] = None) -> BoundConstant:
    """The number p + q*sqrt(d) for rational p, q and non-square d > 0."""
    p, q = Fraction(p), Fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    if d <= 0:
        raise ValueError("d must be positive")
    if _is_square(d):
        raise ValueError(f"{d} is a perfect square; use from_rational")
    # (x - p)^2 - q^2 d, cleared of denominators
    c1, c0 = -2 * p, p * p - q * q * d
    den = math.lcm(c1.denominator, c0.denominator)
    poly = primitive_part(IntPoly((int(c0 * den), int(c1 * den), den)))

    # bracket sqrt(d) in [s_lo, s_hi] and tighten until p + q*sqrt(d) sits
    # strictly inside one unit interval
    s_lo, s_hi = Fraction(math.isqrt(d)), Fraction(math.isqrt(d) + 1)

    def bracket():
        a, b = p + q * s_lo, p + q * s_hi
        return (a, b) if a <= b else (b, a)

    for _ in range(DEFAULT_BUDGET):
        v_lo, v_hi = bracket()
        if math.floor(v_lo) == math.floor(v_hi) and v_lo != math.floor(v_lo):
            break
        mid = (s_lo + s_hi) / 2
        if mid * mid < d:
            s_lo = mid
        else:
            s_hi = mid
    k = Fraction(math.floor(v_lo))
    lo, hi = k, k + 1
    while sturm_count(poly, lo, hi) != 1:
        mid = (lo + hi) / 2
        v_lo, v_hi = bracket()
        while v_lo <= mid <= v_hi:
            m2 = (s_lo + s_hi) / 2
            if m2 * m2 < d:
                s_lo = m2
            else:
                s_hi = m2
            v_lo, v_hi = bracket()
        if v_hi < mid:
            hi = mid
        else:
            lo = mid
    return BoundConstant(poly, lo, hi, name=name)


def sqrt_int(d: int, name: Optional[str] = None) -> BoundConstant:
    return quad_surd(0, 1, d, name=name)


def _named():
    return {
        "two": lambda: from_rational(2, name="2"),
        "sqrt3": lambda: sqrt_int(3, name="sqrt3"),
        "two_sqrt2": lambda: sqrt_int(8, name="2sqrt2"),
        "golden_conj": lambda: quad_surd(Fraction(-1, 2), Fraction(1, 2), 5, name="golden"),
        "sqrt2_minus_1": lambda: quad_surd(-1, 1, 2, name="sqrt2m1"),
        "one": lambda: from_rational(1, name="1"),
        "one_third": lambda: from_rational(Fraction(1, 3), name="1/3"),
    }


NAMED = tuple(_named())

# CLI tokens for the named constants
TOKENS = {
    "2": "two",
    "sqrt3": "sqrt3",
    "2sqrt2": "two_sqrt2",
    "golden": "golden_conj",
    "sqrt2m1": "sqrt2_minus_1",
    "1": "one",
    "1/3": "one_third",
}


def named(name: str) -> BoundConstant:
    try:
        return _named()[name]()
    except KeyError:
        raise ValueError(f"unknown named constant {name!r}") from None


def parse_bound(text: str) -> BoundConstant:
    """Parse ``rat:p/q`` | ``sqrt:d`` | ``surd:p,q,d`` | a named token."""
    text = text.strip()
    if text in TOKENS:
        return named(TOKENS[text])
    if text in NAMED:
        return named(text)
    kind, _, arg = text.partition(":")
    try:
        if kind == "rat":
            return from_rational(Fraction(arg), name=text)
        if kind == "sqrt":
            return sqrt_int(int(arg), name=text)
        if kind == "surd":
            p, q, d = arg.split(",")
            return quad_surd(Fraction(p), Fraction(q), int(d), name=text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad bound {text!r}: {exc}") from None
    raise ValueError(f"unrecognised bound {text!r}")


def is_positive(a: Point) -> bool:
    return a.sign_of(X) is Sign.POSITIVE


# --- operations ----------------------------------------------------------------


def sign_at(p: IntPoly, a: Point, budget: int = DEFAULT_BUDGET) -> Sign:
    return a.sign_of(p, budget=budget)


def refine(a: Point, width, budget: int = DEFAULT_BUDGET) -> Point:
    return a.refine(width, budget=budget)


def largest_root(p: IntPoly) -> RootEnclosure:
    """Enclosure of the largest real root of ``p`` (on its square-free part)."""
    s = squarefree_part(p)
    chain = sturm_sequence(s)
    b = Fraction(root_bound(s))
    vinf = variations_at_inf(chain, True)
    lo, hi = -b, b
    vlo = variations_at(chain, lo)
    if vlo == vinf:
        raise ValueError(f"{p} has no real roots")
    while vlo - vinf > 1:
        mid = (lo + hi) / 2
        vm = variations_at(chain, mid)
        if vm - vinf >= 1:
            lo, vlo = mid, vm
        else:
            hi = mid
    return RootEnclosure(s, lo, hi)


def compare_points(x: Point, y: Point, budget: int = 4 * DEFAULT_BUDGET) -> Order:
    """Exact order of two algebraic numbers."""
    g = gcd(x.poly, y.poly)
    for _ in range(budget):
        if x.hi <= y.lo:
            return Order.LESS
        if y.hi <= x.lo:
            return Order.GREATER
        lo, hi = max(x.lo, y.lo), min(x.hi, y.hi)
        if g.degree >= 1 and lo < hi and sturm_count(g, lo, hi) >= 1:
            # a common root inside both isolating intervals is x and y at once
            return Order.EQUAL
        x, y = x.bisect(), y.bisect()
    raise RefinementBudgetExceeded("could not order algebraic numbers")


def compare_largest_roots(p1: IntPoly, p2: IntPoly) -> Order:
    return compare_points(largest_root(p1), largest_root(p2))
