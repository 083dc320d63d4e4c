"""Exact univariate polynomials over the integers.

Coefficients are stored in ascending order of degree with no trailing
zeros.  Rational evaluation points are :class:`fractions.Fraction`.  Root
counting follows one global convention: a count "in (l, u]" includes a
root at ``u`` and excludes a root at ``l``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    pass


def _strip(cs) -> tuple[int, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Inverse of :meth:`text`: comma separated ascending coefficients."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    # --- basic properties --------------------------------------------------

    @property
    def degree(self):
        """Degree; ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            sep = "*" if body and mono else ""
            sign = "-" if c < 0 else "+"
            terms.append((sign, body + sep + mono))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out

    # --- ring operations ---------------------------------------------------

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __truediv__(self, other):
        return exact_div(self, _coerce(other))

    def __call__(self, r: RationalLike) -> Fraction:
        return eval_rational(self, r)


def _coerce(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly((p,))
    raise TypeError(f"cannot use {type(p).__name__} as IntPoly")


X = IntPoly.x()
ONE = IntPoly((1,))
ZERO = IntPoly(())


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def neg(p: IntPoly) -> IntPoly:
    return -p


def scale(p: IntPoly, c: int) -> IntPoly:
    return p.scale(c)


# --- content, division, gcd ------------------------------------------------


def content(p: IntPoly) -> int:
    """Non-negative gcd of the coefficients."""
    return math.gcd(*p.coeffs) if p.coeffs else 0


def primitive_part(p: IntPoly) -> IntPoly:
    """``p / content(p)`` with the sign adjusted so the leading coefficient is positive."""
    if not p.coeffs:
        return p
    c = content(p)
    if p.lc < 0:
        c = -c
    return IntPoly(tuple(x // c for x in p.coeffs))


def _prem(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Remainder of ``a`` by ``b`` up to a positive integer factor."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    mag = abs(lb)
    sg = 1 if lb > 0 else -1
    while len(r) - 1 >= db and r:
        lead = r[-1]
        k = len(r) - 1 - db
        f = lead * sg
        r = [x * mag for x in r]
        for i, y in enumerate(b):
            r[i + k] -= f * y
        r.pop()  # leading term cancels exactly
        while r and r[-1] == 0:
            r.pop()
    return r


def divides(d: IntPoly, p: IntPoly) -> bool:
    """Whether ``d`` divides ``p`` over the rationals."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return True
    if len(p.coeffs) < len(d.coeffs):
        return False
    return not _prem(p.coeffs, d.coeffs)


def exact_div(p: IntPoly, d: IntPoly) -> IntPoly:
    """Quotient ``q`` with ``p == d * q`` and integer coefficients.

    Raises :class:`NotDivisible` when ``d`` does not divide ``p`` over the
    rationals or the quotient is not integral.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    r = list(p.coeffs)
    b = d.coeffs
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        raise NotDivisible(f"{d} does not divide {p}")
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        lead = r[k + db]
        if lead % lb:
            raise NotDivisible(f"{d} does not divide {p} with integral quotient")
        c = lead // lb
        q[k] = c
        if c:
            for i, y in enumerate(b):
                r[i + k] -= c * y
    if any(r[:db]):
        raise NotDivisible(f"{d} does not divide {p}")
    return IntPoly(tuple(q))


def gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = primitive_part(p), primitive_part(q)
    if len(a) < len(b):
        a, b = b, a
    while b.coeffs:
        r = _prem(a.coeffs, b.coeffs)
        a, b = b, primitive_part(IntPoly(tuple(r)))
    return primitive_part(a)


def derivative(p: IntPoly, k: int = 1) -> IntPoly:
    cs = p.coeffs
    for _ in range(k):
        cs = tuple(i * c for i, c in enumerate(cs) if i)
    return IntPoly(cs)


@lru_cache(maxsize=65536)
def squarefree_part(p: IntPoly) -> IntPoly:
    """Primitive square-free part ``p / gcd(p, p')``."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    if p.degree <= 0:
        return ONE
    g = gcd(p, derivative(p))
    return primitive_part(exact_div(primitive_part(p), g))


def squarefree_layers(p: IntPoly) -> list[IntPoly]:
    """Square-free parts of p, gcd(p, p'), gcd of that with its derivative, ...

    The distinct roots of layer ``j`` are exactly the roots of ``p`` with
    multiplicity greater than ``j``, so counting distinct roots per layer
    and summing gives counts with multiplicity.
    """
    layers = []
    cur = primitive_part(p)
    while cur.degree >= 1:
        layers.append(squarefree_part(cur))
        cur = gcd(cur, derivative(cur))
    return layers


# --- evaluation -------------------------------------------------------------


def _homog(cs: tuple[int, ...], num: int, den: int) -> int:
    """den**deg * p(num/den), by Horner in homogeneous form."""
    acc = 0
    dpow = 1
    for c in reversed(cs):
        acc = acc * num + c * dpow
        dpow *= den
    return acc


def eval_rational(p: IntPoly, r: RationalLike) -> Fraction:
    r = Fraction(r)
    if not p.coeffs:
        return Fraction(0)
    deg = len(p.coeffs) - 1
    return Fraction(_homog(p.coeffs, r.numerator, r.denominator), r.denominator**deg)


def sign_at_rational(p: IntPoly, r: RationalLike) -> int:
    r = Fraction(r)
    v = _homog(p.coeffs, r.numerator, r.denominator) if p.coeffs else 0
    return (v > 0) - (v < 0)


# --- Sturm sequences ---------------------------------------------------------


@lru_cache(maxsize=65536)
def sturm_sequence(p: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm chain of the square-free part of ``p``.

    Remainders are kept up to positive factors and reduced to primitive
    parts, which preserves every sign the chain is used for.
    """
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    s0 = squarefree_part(p)
    if s0.degree <= 0:
        return (s0,)
    chain = [s0, primitive_part(derivative(s0))]
    while True:
        r = _prem(chain[-2].coeffs, chain[-1].coeffs)
        if not r:
            break
        c = math.gcd(*r)
        chain.append(IntPoly(tuple(-x // c for x in r)))
    return tuple(chain)


def _variations(signs: Iterable[int]) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def variations_at(chain: tuple[IntPoly, ...], r: RationalLike) -> int:
    r = Fraction(r)
    num, den = r.numerator, r.denominator
    signs = []
    for q in chain:
        v = _homog(q.coeffs, num, den)
        signs.append((v > 0) - (v < 0))
    return _variations(signs)


def variations_at_inf(chain: tuple[IntPoly, ...], positive: bool = True) -> int:
    signs = []
    for q in chain:
        s = 1 if q.lc > 0 else -1
        if not positive and (len(q.coeffs) - 1) % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def sturm_count(p: IntPoly, lo: RationalLike, hi: RationalLike) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    chain = sturm_sequence(p)
    return variations_at(chain, lo) - variations_at(chain, hi)


def count_roots_above(p: IntPoly, r: RationalLike) -> int:
    """Number of distinct real roots strictly greater than ``r``."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    chain = sturm_sequence(p)
    return variations_at(chain, r) - variations_at_inf(chain, True)


def count_real_roots(p: IntPoly) -> int:
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    chain = sturm_sequence(p)
    return variations_at_inf(chain, False) - variations_at_inf(chain, True)


def root_bound(p: IntPoly) -> int:
    """Integer B with every real root of ``p`` in (-B, B) (Cauchy bound)."""
    if p.degree < 1:
        return 1
    lc = abs(p.lc)
    m = max(abs(c) for c in p.coeffs[:-1])
    return 2 + -(-m // lc)


def isolate_roots(p: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (l, u], each holding one distinct real root, descending."""
    chain = sturm_sequence(p)
    b = Fraction(root_bound(p))
    out = []

    def rec(lo, hi, vlo, vhi):
        k = vlo - vhi
        if k == 0:
            return
        if k == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        vm = variations_at(chain, mid)
        rec(mid, hi, vm, vhi)
        rec(lo, mid, vlo, vm)

    rec(-b, b, variations_at(chain, -b), variations_at(chain, b))
    return out


def bisect_root(
    p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of ``p`` to width <= ``width``."""
    chain = sturm_sequence(p)
    vlo = variations_at(chain, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        vm = variations_at(chain, mid)
        if vlo - vm == 1:
            hi = mid
        else:
            lo, vlo = mid, vm
    return lo, hi
