"""Exact integer, rational and univariate-polynomial arithmetic.

Integers are Python ints and rationals are :class:`fractions.Fraction`
(always reduced, positive denominator).  ``RatPoly`` is a small immutable
dense polynomial over Q, enough to build cyclotomic polynomials and invert
elements of Q[x]/(Phi_b).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZeroPoly, NotCoprime

__all__ = [
    "Fraction",
    "RatPoly",
    "gcd_ext",
    "mod_inverse",
    "poly_divmod",
    "poly_ext_gcd",
    "cyclotomic",
    "divisors",
]


def gcd_ext(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(x, y) >= 0`` and ``u*x + v*y == g``."""
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_u, old_v


def mod_inverse(x: int, m: int) -> int:
    """Inverse of ``x`` modulo ``m`` in ``[1, m-1]`` (``[0]`` only when m == 1)."""
    g, u, _ = gcd_ext(x % m, m)
    if g != 1:
        raise NotCoprime(x, m)
    return u % m


class RatPoly:
    """Dense polynomial with Fraction coefficients, lowest degree first.

    Trailing zeros are stripped so the zero polynomial has no coefficients;
    its degree is ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "RatPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, e in enumerate(other.coeffs):
                    out[i + j] += c * e
        return RatPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "RatPoly":
        return RatPoly([c * x for x in self.coeffs])

    def monic(self) -> "RatPoly":
        return self.scale(1 / self.lc()) if self.coeffs else self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        return poly_divmod(self, _as_poly(other))

    def __mod__(self, other):
        return poly_divmod(self, _as_poly(other))[1]

    def __floordiv__(self, other):
        return poly_divmod(self, _as_poly(other))[0]


def _as_poly(x) -> RatPoly:
    return x if isinstance(x, RatPoly) else RatPoly([x])


def poly_divmod(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Euclidean division: ``f == q*g + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise DivisionByZeroPoly("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    if len(r) - 1 < dg:
        return RatPoly(), f
    inv_lc = 1 / g.lc()
    q = [Fraction(0)] * (len(r) - dg)
    gc = g.coeffs
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c * inv_lc
        q[k - dg] = c
        base = k - dg
        for i in range(dg + 1):
            if gc[i]:
                r[base + i] -= c * gc[i]
    return RatPoly(q), RatPoly(r[:dg])


def poly_ext_gcd(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Return ``(d, u, v)`` with ``u*f + v*g == d`` and ``d`` monic."""
    if f.is_zero() and g.is_zero():
        raise DivisionByZeroPoly("gcd(0, 0) is undefined")
    r0, r1 = f, g
    u0, u1 = RatPoly([1]), RatPoly()
    v0, v1 = RatPoly(), RatPoly([1])
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = 1 / r0.lc()
    return r0.scale(c), u0.scale(c), v0.scale(c)


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@lru_cache(maxsize=256)
def cyclotomic(b: int) -> RatPoly:
    """Phi_b(x), by dividing x^b - 1 by Phi_m for every proper divisor m of b."""
    if b < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {b}")
    p = RatPoly.monomial(b) - 1
    for m in divisors(b)[:-1]:
        p, r = poly_divmod(p, cyclotomic(m))
        assert r.is_zero()
    return p
