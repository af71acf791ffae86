"""Reference evaluators of the defining root-of-unity average.

``cyclo_eval`` works exactly in the field Q[x]/(Phi_b), where x stands for a
primitive b-th root of unity; ``float_eval`` sums in complex doubles.  Both
are O(b) (or worse) and exist to check the fast path.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import BoundExceeded, ImaginaryResidual, NonRationalResult
from .numeric import RatPoly, cyclotomic, poly_divmod, poly_ext_gcd

CYCLO_MAX_B = 100_000
FLOAT_MAX_B = 10_000_000


class CycloElement:
    """An element of Q[x]/(Phi_b), kept reduced (degree < phi(b))."""

    __slots__ = ("poly", "b")

    def __init__(self, poly: RatPoly, b: int):
        self.b = b
        self.poly = poly_divmod(poly, cyclotomic(b))[1]

    @classmethod
    def root_power(cls, k: int, b: int) -> "CycloElement":
        return cls(RatPoly.monomial(k % b), b)

    def __add__(self, other):
        return CycloElement(self.poly + other.poly, self.b)

    def __sub__(self, other):
        return CycloElement(self.poly - other.poly, self.b)

    def __mul__(self, other):
        return CycloElement(self.poly * other.poly, self.b)

    def inverse(self) -> "CycloElement":
        g, u, _ = poly_ext_gcd(self.poly, cyclotomic(self.b))
        if g.degree != 0:
            raise ZeroDivisionError("element is not invertible")
        return CycloElement(u, self.b)

    def is_rational(self) -> bool:
        return self.poly.degree <= 0

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise NonRationalResult(f"element has degree {self.poly.degree}")
        return self.poly[0]


def inverse_one_minus_root(m: int, b: int) -> list[int]:
    """Integer coefficients ``v`` with ``(1 - x^m) * v == -b`` modulo Phi_b, for b not dividing m.

    From (1 - z) * sum_j j z^j = -b for any b-th root of unity z != 1.
    Entry i of ``v`` is the coefficient of x^i, 0 <= i < b; all entries are >= 0.
    """
    v = [0] * b
    for j in range(b):
        v[(j * m) % b] += j
    return v


def _pack(coeffs, nbytes: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _unpack(value: int, nbytes: int) -> list[int]:
    raw = value.to_bytes((value.bit_length() + 7) // 8 or 1, "little")
    return [int.from_bytes(raw[i:i + nbytes], "little") for i in range(0, len(raw), nbytes)]


def cyclo_eval(inst, max_b: int = CYCLO_MAX_B) -> Fraction:
    """Exact value of the sum via arithmetic in the b-th cyclotomic field.

    Each summand is a product of a power of x and d inverses of (1 - x^m).
    Products are formed over Z[x] (Kronecker-packed into one big integer, all
    coefficients nonnegative), summed, folded modulo x^b - 1 and reduced modulo
    Phi_b once at the end; reduction is a ring homomorphism, so this equals
    computing in Q[x]/(Phi_b) throughout.
    """
    b = inst.b
    if b > max_b:
        raise BoundExceeded(f"b = {b} exceeds the cyclotomic oracle bound {max_b}")
    d = len(inst.a)
    # every product has L1 norm <= (b(b-1)/2)^d; the k-sum adds b of them
    nbytes = ((b * (b - 1) // 2 + 1) ** d * b).bit_length() // 8 + 1
    width = 8 * nbytes
    cache: dict[int, int] = {}

    def packed_inverse(m):
        if m not in cache:
            cache[m] = _pack(inverse_one_minus_root(m, b), nbytes)
        return cache[m]

    total = 0
    for k in range(1, b):
        term = 1 << (width * ((k * inst.n) % b))
        for aj in inst.a:
            term *= packed_inverse((k * aj) % b)
        total += term
    folded = [0] * b
    for i, c in enumerate(_unpack(total, nbytes)):
        folded[i % b] += c
    elem = CycloElement(RatPoly(folded), b)
    # each inverse carried a factor -b
    return elem.rational() / ((-b) ** d * b)


def float_eval(inst, max_b: int = FLOAT_MAX_B) -> float:
    b = inst.b
    if b > max_b:
        raise BoundExceeded(f"b = {b} exceeds the floating-point oracle bound {max_b}")
    k = np.arange(1, b, dtype=np.int64)
    theta = 2 * np.pi / b
    num = np.exp(1j * theta * ((k * (inst.n % b)) % b))
    den = np.ones(b - 1, dtype=complex)
    for aj in inst.a:
        den *= 1 - np.exp(1j * theta * ((k * (aj % b)) % b))
    val = (num / den).sum() / b
    if abs(val.imag) >= 1e-6 * (1 + abs(val.real)):
        raise ImaginaryResidual(f"imaginary part {val.imag!r} is not negligible")
    return float(val.real)
