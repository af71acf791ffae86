"""Brute-force oracles shared by the tests.

Nothing here uses LLL, the decomposition, or the series code.
"""

import itertools
import math
import random
from fractions import Fraction

from fdsum.lattice import columns, inverse_rational, matvec


def cofactor_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    return sum(
        (-1) ** j * M[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in M[1:]])
        for j in range(n)
    )


def in_closed_cone(p, apex, gens_inv):
    diff = [Fraction(x) - y for x, y in zip(p, apex)]
    return all(c >= 0 for c in matvec(gens_inv, diff))


def parallelepiped_points(apex, G):
    """Lattice points ``q = apex + G lam`` with every lam_j in [0, 1).

    Enumerates the finite group {G^{-1} q mod 1} by breadth-first search over
    its generators (the columns of G^{-1}) instead of scanning a box.
    """
    inv = inverse_rational(G)
    D = len(G)
    gens = [tuple(c % 1 for c in col) for col in columns(inv)]
    start = tuple(Fraction(0) for _ in range(D))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = tuple((x + y) % 1 for x, y in zip(h, g))
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    shift = matvec(inv, [Fraction(x) for x in apex])
    out = []
    for h in seen:
        lam = [(x - s) % 1 for x, s in zip(h, shift)]
        q = tuple(Fraction(a) + sum(G[r][j] * lam[j] for j in range(D)) for r, a in enumerate(apex))
        assert all(x.denominator == 1 for x in q)
        out.append(tuple(int(x) for x in q))
    return sorted(out)


def cone_gf_at(apex, G, point):
    """Generating function of the lattice points of ``apex + cone(G)`` at ``point``."""
    point = [Fraction(x) for x in point]

    def mono(e):
        v = Fraction(1)
        for x, k in zip(point, e):
            v *= x ** k
        return v

    num = sum(mono(q) for q in parallelepiped_points(apex, G))
    den = Fraction(1)
    for g in columns(G):
        den *= 1 - mono(g)
    return num / den


def coset_count(a, b):
    """|Z^d / {m : a.m == 0 mod b}| by listing the residues a.m takes."""
    return len({sum(x * y for x, y in zip(a, m)) % b
                for m in itertools.product(range(b), repeat=len(a))})


def random_instance(rng, b_range=(2, 200), d_choices=(1, 2, 3), a_max=10**4):
    b = rng.randint(*b_range)
    d = rng.choice(d_choices)
    a = []
    while len(a) < d:
        x = rng.randint(1, a_max)
        if math.gcd(x, b) == 1:
            a.append(x)
    n = rng.randint(-b, 2 * b)
    return n, tuple(a), b


def random_cone(rng, dim, entry=20, max_index=500, max_den=10):
    """Random full-dimensional integer generator matrix plus a rational apex."""
    while True:
        G = tuple(tuple(rng.randint(-entry, entry) for _ in range(dim)) for _ in range(dim))
        det = cofactor_det([list(r) for r in G])
        if det != 0 and abs(det) <= max_index:
            cols = columns(G)
            if all(math.gcd(*c) == 1 for c in cols):
                break
    apex = tuple(Fraction(rng.randint(-3 * max_den, 3 * max_den), rng.randint(1, max_den))
                 for _ in range(dim))
    return apex, G


def random_unimodular(rng, dim, steps=12):
    """Product of random elementary integer matrices (the recorded inverse is returned too)."""
    M = [[int(i == j) for j in range(dim)] for i in range(dim)]
    Minv = [row[:] for row in M]
    for _ in range(steps):
        i, j = rng.sample(range(dim), 2)
        c = rng.choice([-2, -1, 1, 2])
        # M <- M E where E adds c * column i to column j;  M^{-1} <- E^{-1} M^{-1}
        for r in range(dim):
            M[r][j] += c * M[r][i]
        Minv[i] = [x - c * y for x, y in zip(Minv[i], Minv[j])]
    return tuple(map(tuple, M)), tuple(map(tuple, Minv))
