"""Value of a short rational function at z = (1, ..., 1).

Every variable is replaced by ``z_j = (1 + t)^{c_j}`` for an integer vector
``c`` that keeps all denominator factors nonzero.  Each factor
``1 - (1+t)^m`` then has a simple zero at t = 0, so a term is a Laurent
series of valuation >= -(number of factors).  Summing the truncated series,
the negative part must cancel exactly and the t^0 coefficient is the limit.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count

from .errors import CancellationFailure
from .srf import SRF, SRFTerm


class LaurentSeries:
    """Truncated Laurent series ``sum_{k >= val} coeffs[k - val] t^k``.

    Coefficients are known exactly for exponents below ``prec`` (absolute
    precision); everything at or beyond ``prec`` is unknown.
    """

    __slots__ = ("val", "coeffs", "prec")

    def __init__(self, val: int, coeffs, prec: int):
        cs = [Fraction(c) for c in coeffs][: max(prec - val, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            val += 1
        self.val = val if cs else prec
        self.coeffs = cs
        self.prec = prec

    @classmethod
    def zero(cls, prec: int) -> "LaurentSeries":
        return cls(prec, [], prec)

    def coefficient(self, k: int) -> Fraction:
        if k >= self.prec:
            raise ValueError(f"t^{k} is beyond the truncation order {self.prec}")
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        return LaurentSeries(lo, [self._get(k) + other._get(k) for k in range(lo, prec)], prec)

    def __neg__(self):
        return LaurentSeries(self.val, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(self.val, [c * other for c in self.coeffs], self.prec)
        if self.is_zero() or other.is_zero():
            return LaurentSeries.zero(min(self.prec + other.val, other.prec + self.val))
        val = self.val + other.val
        prec = min(self.val + other.prec, other.val + self.prec)
        n = prec - val
        out = [Fraction(0)] * max(n, 0)
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j, b in enumerate(other.coeffs[: n - i]):
                    out[i + j] += a * b
        return LaurentSeries(val, out, prec)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries(self.val + k, self.coeffs, self.prec + k)

    def inverse(self) -> "LaurentSeries":
        if self.is_zero():
            raise ZeroDivisionError("series is zero within truncation")
        n = self.prec - self.val  # relative precision is preserved
        a = self.coeffs + [Fraction(0)] * (n - len(self.coeffs))
        inv = [Fraction(0)] * n
        inv[0] = 1 / a[0]
        for k in range(1, n):
            s = sum(a[i] * inv[k - i] for i in range(1, k + 1))
            inv[k] = -s * inv[0]
        return LaurentSeries(-self.val, inv, -self.val + n)

    def _get(self, k):
        i = k - self.val
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return (isinstance(other, LaurentSeries) and self.prec == other.prec
                and self.val == other.val and self.coeffs == other.coeffs)

    def __repr__(self):
        body = " + ".join(f"{c}*t^{self.val + i}" for i, c in enumerate(self.coeffs) if c)
        return f"LaurentSeries({body or '0'} + O(t^{self.prec}))"


def binomial_coefficients(N: int, order: int) -> list[int]:
    """binom(N, 0..order) for any integer N (generalized for negative N)."""
    out = [1]
    c = 1
    for i in range(1, order + 1):
        c = c * (N - i + 1) // i
        out.append(c)
    return out


def binom_series(N: int, order: int) -> LaurentSeries:
    """(1 + t)^N through t^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return LaurentSeries(0, binomial_coefficients(N, order), order + 1)


def _primes():
    found = []
    for n in count(2):
        if all(n % p for p in found if p * p <= n):
            found.append(n)
            yield n


def candidate_directions(f, dim: int | None = None):
    """Yield the valid directions (1, r, r^2, ...) for r = 2, 3, 5, 7, ... in order."""
    terms = list(f)
    dens = {b for t in terms for b in t.denom_exps}
    if dim is None:
        dim = f.dim if isinstance(f, SRF) else len(terms[0].numer_exp)
    for r in _primes():
        c = tuple(r ** i for i in range(dim))
        if all(sum(x * y for x, y in zip(c, beta)) != 0 for beta in dens):
            yield c


def generic_direction(f) -> tuple:
    return next(candidate_directions(f))


def term_series(term: SRFTerm, c, prec: int = 1) -> LaurentSeries:
    """Laurent expansion of one term after z_j = (1+t)^{c_j}, exact below t^prec."""
    k = len(term.denom_exps)
    order = prec - 1 + k  # relative order needed before dividing by t^k
    N = sum(x * y for x, y in zip(c, term.numer_exp))
    acc = binom_series(N, max(order, 0)) * term.weight
    for beta in term.denom_exps:
        m = sum(x * y for x, y in zip(c, beta))
        if m == 0:
            raise ValueError(f"direction {c} is orthogonal to denominator {beta}")
        # 1 - (1+t)^m = -t * sum_{i>=0} binom(m, i+1) t^i
        bc = binomial_coefficients(m, order + 1)
        unit = LaurentSeries(0, [-x for x in bc[1:]], order + 1)
        acc = acc * unit.inverse()
    return acc.shift(-k)


def specialization_series(f, direction=None) -> tuple[LaurentSeries, tuple]:
    """Summed expansion of all terms (exact through t^0) and the direction used."""
    terms = list(f)
    if not terms:
        return LaurentSeries.zero(1), tuple(direction or ())
    c = tuple(direction) if direction is not None else generic_direction(terms)
    total = LaurentSeries.zero(1)
    for t in terms:
        total = total + term_series(t, c)
    return total, c


def limit_at_one(f, direction=None) -> Fraction:
    """Limit of ``f`` as all its variables tend to 1.

    Raises :class:`CancellationFailure` when the summed expansion keeps a
    nonzero negative-order coefficient (the limit does not exist).
    """
    total, _ = specialization_series(f, direction)
    if total.val < 0:
        bad = {k: str(total.coefficient(k)) for k in range(total.val, 0) if total.coefficient(k)}
        raise CancellationFailure(f"negative-order coefficients survive: {bad}")
    return total.coefficient(0)
