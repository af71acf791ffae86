"""Signed unimodular decomposition of simplicial cones (polarized Barvinok).

The cone is dualized, the dual is decomposed with Barvinok's short-vector
replacement while lower-dimensional pieces are dropped, and the unimodular
dual cones are dualized back.  Dropping lower-dimensional cones on the dual
side corresponds to dropping cones that contain lines on the primal side;
those have zero rational generating function, so the identity holds for
generating functions (not for indicator functions point by point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cone import ExponentMap, SimplicialCone
from .errors import DegenerateDenominator, InternalConsistencyError
from .lattice import (
    columns,
    determinant,
    from_columns,
    inverse_rational,
    matvec,
    primitive,
    short_nonneg_combination,
)
from .srf import SRFTerm


def dualize(cone: SimplicialCone) -> SimplicialCone:
    """Dual cone: primitive columns of ``(G^{-1})^T``, apex and sign unchanged."""
    inv = inverse_rational(cone.generators)
    dual_cols = [primitive(row) for row in inv]  # rows of G^{-1} = columns of its transpose
    return SimplicialCone(cone.apex, from_columns(dual_cols), cone.sign)


@dataclass
class Decomposition:
    cones: list
    max_depth: int = 0
    nodes: int = 0
    discarded: int = 0
    index: int = 1
    stats: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)


def _canonical(cones):
    return sorted(cones, key=lambda c: (c.generators, c.sign))


def decompose_unimodular(cone: SimplicialCone, polarize: bool = True) -> Decomposition:
    """Signed list of unimodular cones whose generating functions sum to ``cone``'s.

    ``polarize=False`` runs the same replacement recursion on the primal side
    (no face bookkeeping); it is only correct up to lower-dimensional cones and
    exists for comparison in tests.
    """
    root = dualize(cone) if polarize else cone
    root_index = abs(determinant(root.generators))
    if root_index == 0:
        raise ValueError("cone is not full-dimensional")

    out = []
    discarded = 0
    nodes = 0
    max_depth = 0
    stack = [(root.generators, 1, root_index, 0)]
    while stack:
        gens, sign, index, depth = stack.pop()
        nodes += 1
        max_depth = max(max_depth, depth)
        if index == 1:
            out.append((gens, sign))
            continue
        w, alpha = short_nonneg_combination(gens, index)
        g = 0
        for x in w:
            g = math.gcd(g, x)
        if g > 1:
            w = tuple(x // g for x in w)
            alpha = tuple(x / g for x in alpha)
        cols = columns(gens)
        for j, aj in enumerate(alpha):
            if aj == 0:
                discarded += 1
                continue
            child_index = abs(aj) * index
            if child_index.denominator != 1 or not child_index < index:
                raise InternalConsistencyError("child index did not decrease")
            child = from_columns(cols[:j] + [w] + cols[j + 1:])
            stack.append((child, sign * (1 if aj > 0 else -1), int(child_index), depth + 1))

    cones = []
    for gens, sign in out:
        if abs(determinant(gens)) != 1:
            raise InternalConsistencyError("emitted cone is not unimodular")
        c = SimplicialCone(cone.apex, gens, cone.sign * sign)
        cones.append(dualize(c) if polarize else c)
    return Decomposition(
        cones=_canonical(cones),
        max_depth=max_depth,
        nodes=nodes,
        discarded=discarded,
        index=abs(determinant(cone.generators)),
    )


def fundamental_point(cone: SimplicialCone) -> tuple:
    """Unique lattice point ``sum ceil(alpha_j) g_j`` of a shifted closed unimodular cone."""
    inv = inverse_rational(cone.generators)
    alpha = matvec(inv, [Fraction(x) for x in cone.apex])
    return matvec(cone.generators, [math.ceil(x) for x in alpha])


def unimodular_term(cone: SimplicialCone, emap: ExponentMap) -> SRFTerm:
    if abs(determinant(cone.generators)) != 1:
        raise ValueError("unimodular_term needs a unimodular cone")
    w = fundamental_point(cone)
    dens = []
    for g in cone.rays():
        beta = emap.direction(g)
        if not any(beta):
            raise DegenerateDenominator(f"generator {g} maps to the zero exponent")
        dens.append(beta)
    return SRFTerm(emap(w), tuple(dens), cone.sign, Fraction(1))

