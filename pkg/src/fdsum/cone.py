"""From an instance (n, a, b) to a full-dimensional simplicial cone.

The lattice points of the d-dimensional cone with apex ``v = (-n/b, 0, ..., 0)``
and generator matrix ``H`` (top row ``-a``, then ``b * I``) inside Z^(d+1) are
reparametrised by an integer vector ``s`` in Z^d:

    t = (B s + m0) / b,     point = v + H t = x0 + M s

where B is a basis of the congruence lattice and m0 a particular solution.
The constraint ``t >= 0`` becomes a simplicial cone in s-space over the
standard lattice, which is what the decomposition code wants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BMustExceedOne, EmptyA, NonPositiveA, NotCoprime
from .lattice import (
    Matrix,
    columns,
    congruence_lattice_basis,
    determinant,
    from_columns,
    inverse_rational,
    matmul,
    matvec,
    primitive,
)
from .numeric import mod_inverse


@dataclass(frozen=True)
class FDInstance:
    """The triple (n, a, b).  ``n`` is kept as given; see :attr:`n_reduced`."""

    n: int
    a: tuple
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.b < 2:
            raise BMustExceedOne(self.b)
        if not self.a:
            raise EmptyA()
        for j, aj in enumerate(self.a, start=1):
            if aj < 1:
                raise NonPositiveA(j, aj)
        for j, aj in enumerate(self.a, start=1):
            if gcd(aj, self.b) != 1:
                raise NotCoprime(aj, self.b, j)

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def n_reduced(self) -> int:
        return self.n % self.b

    def label(self) -> str:
        return f"s_{self.n}({','.join(map(str, self.a))};{self.b})"


@dataclass(frozen=True)
class SimplicialCone:
    """``apex + cone(generators)``; generators are the columns of a D x D matrix."""

    apex: tuple
    generators: Matrix
    sign: int = 1

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def index(self) -> int:
        return abs(determinant(self.generators))

    def rays(self) -> list[tuple]:
        return columns(self.generators)

    def contains(self, p) -> bool:
        """Closed-cone membership: generator coordinates of ``p - apex`` are >= 0."""
        inv = inverse_rational(self.generators)
        diff = [Fraction(x) - y for x, y in zip(p, self.apex)]
        return all(c >= 0 for c in matvec(inv, diff))

    def with_sign(self, sign: int) -> "SimplicialCone":
        return SimplicialCone(self.apex, self.generators, sign)


@dataclass(frozen=True)
class ExponentMap:
    """Affine map ``s -> offset + linear @ s`` into exponents of (z_0, ..., z_d)."""

    offset: tuple
    linear: Matrix

    def __call__(self, s) -> tuple:
        return tuple(o + x for o, x in zip(self.offset, matvec(self.linear, s)))

    def direction(self, g) -> tuple:
        return matvec(self.linear, g)


def identity_map(D: int) -> ExponentMap:
    return ExponentMap((0,) * D, tuple(tuple(int(i == j) for j in range(D)) for i in range(D)))


def slack_matrix(a, b: int) -> Matrix:
    d = len(a)
    top = tuple(-x for x in a)
    return (top,) + tuple(tuple(b if i == j else 0 for j in range(d)) for i in range(d))


def particular_solution(a, b: int, n: int) -> tuple:
    """``m0 = (r, 0, ..., 0)`` with ``a_1 r == -n (mod b)`` and ``0 <= r < b``."""
    if gcd(a[0], b) != 1:
        raise NotCoprime(a[0], b, 1)
    r = (-n * mod_inverse(a[0], b)) % b
    return (r,) + (0,) * (len(a) - 1)


def build_cone(inst: FDInstance) -> tuple[SimplicialCone, ExponentMap]:
    a, b, n = inst.a, inst.b, inst.n_reduced
    d = inst.d
    B = congruence_lattice_basis(a, b)
    m0 = particular_solution(a, b, n)
    B_inv = inverse_rational(B)
    apex = tuple(-x for x in matvec(B_inv, m0))
    gens = from_columns([primitive(c) for c in columns(B_inv)])

    H = slack_matrix(a, b)
    v = (Fraction(-n, b),) + (0,) * d
    x0 = tuple(vi + Fraction(hi, b) for vi, hi in zip(v, matvec(H, m0)))
    M = tuple(tuple(Fraction(x, b) for x in row) for row in matmul(H, B))
    assert all(x.denominator == 1 for x in x0), "exponent offset is not integral"
    assert all(x.denominator == 1 for row in M for x in row), "exponent map is not integral"
    emap = ExponentMap(
        tuple(int(x) for x in x0),
        tuple(tuple(int(x) for x in row) for row in M),
    )
    return SimplicialCone(apex, gens, 1), emap
