"""Short rational functions: signed sums of ``c * z^w / prod_j (1 - z^beta_j)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadDimension, DegenerateDenominator, PoleAtPoint


@dataclass(frozen=True, order=True)
class SRFTerm:
    numer_exp: tuple
    denom_exps: tuple
    sign: int = 1
    coeff: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "numer_exp", tuple(self.numer_exp))
        object.__setattr__(self, "denom_exps", tuple(tuple(b) for b in self.denom_exps))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        D = len(self.numer_exp)
        for beta in self.denom_exps:
            if len(beta) != D:
                raise BadDimension("denominator exponent has wrong dimension")
            if not any(beta):
                raise DegenerateDenominator("denominator factor 1 - z^0 vanishes identically")

    @property
    def dim(self) -> int:
        return len(self.numer_exp)

    @property
    def weight(self) -> Fraction:
        return self.sign * self.coeff

    def format(self) -> str:
        head = f"{'+' if self.sign > 0 else '-'}1*{self.coeff} * z^{_vec(self.numer_exp)}"
        if not self.denom_exps:
            return head
        return head + " / prod " + "".join(f"(1 - z^{_vec(b)})" for b in self.denom_exps)


def _vec(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


class SRF:
    """An immutable, canonically sorted list of terms of one dimension."""

    __slots__ = ("terms", "dim")

    def __init__(self, terms, dim: int | None = None):
        terms = sorted(terms)
        if dim is None:
            if not terms:
                raise BadDimension("dimension required for an empty SRF")
            dim = terms[0].dim
        if any(t.dim != dim for t in terms):
            raise BadDimension("terms of mixed dimension")
        self.terms = tuple(terms)
        self.dim = dim

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "SRF") -> "SRF":
        if other.dim != self.dim:
            raise BadDimension("cannot add SRFs of different dimension")
        return SRF(self.terms + other.terms, self.dim)

    def __eq__(self, other):
        return isinstance(other, SRF) and self.dim == other.dim and self.terms == other.terms

    def __repr__(self):
        return f"SRF(dim={self.dim}, terms={len(self.terms)})"

    def denominators(self) -> set:
        return {beta for t in self.terms for beta in t.denom_exps}

    def dump(self) -> str:
        return "\n".join(t.format() for t in self.terms)

    def specialize_to_one(self, coord: int) -> "SRF":
        """Set variable ``coord`` to 1, i.e. drop that coordinate from every exponent.

        Only legal when no denominator exponent is supported on ``coord`` alone.
        """
        def drop(v):
            return v[:coord] + v[coord + 1:]

        out = []
        for t in self.terms:
            dens = tuple(drop(b) for b in t.denom_exps)
            if any(not any(b) for b in dens):
                raise DegenerateDenominator(f"setting z_{coord}=1 creates a pole")
            out.append(SRFTerm(drop(t.numer_exp), dens, t.sign, t.coeff))
        return SRF(out, self.dim - 1)


def correction_term(inst) -> SRFTerm:
    """``-(1/b) / prod_{j=1..d} (1 - z_j)`` in the variables (z_0, ..., z_d)."""
    D = inst.d + 1
    dens = tuple(tuple(int(i == j) for i in range(D)) for j in range(1, D))
    return SRFTerm((0,) * D, dens, -1, Fraction(1, inst.b))


def _monomial(point, exps) -> Fraction:
    val = Fraction(1)
    for x, e in zip(point, exps):
        if e < 0 and x == 0:
            raise PoleAtPoint("negative power of a zero coordinate")
        val *= x ** e
    return val


def eval_at(f, point) -> Fraction:
    """Exact value of ``f`` (an SRF or an iterable of terms) at a rational point."""
    point = tuple(Fraction(x) for x in point)
    total = Fraction(0)
    for t in f:
        den = Fraction(1)
        for beta in t.denom_exps:
            factor = 1 - _monomial(point, beta)
            if factor == 0:
                raise PoleAtPoint(f"factor 1 - z^{_vec(beta)} vanishes at {point}")
            den *= factor
        total += t.weight * _monomial(point, t.numer_exp) / den
    return total
