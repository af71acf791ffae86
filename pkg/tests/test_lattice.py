import itertools
import math
import random
from fractions import Fraction

import pytest

from brute import coset_count, cofactor_det, random_unimodular
from fdsum.errors import BadDimension, DependentColumns, NotCoprime, NotSquare, Singular
from fdsum.lattice import (
    columns,
    congruence_lattice_basis,
    determinant,
    from_columns,
    identity,
    inverse_rational,
    lll_conditions_hold,
    lll_reduce,
    matmul,
    matvec,
    short_nonneg_combination,
)


def test_determinant_examples():
    assert determinant(identity(3)) == 1
    assert determinant(((2, 0), (0, 3))) == 6


def test_determinant_of_congruence_basis_is_the_coset_count():
    B = congruence_lattice_basis((4, 3, 5), 7)
    assert abs(determinant(B)) == coset_count((4, 3, 5), 7) == 7


def test_determinant_not_square():
    with pytest.raises(NotSquare):
        determinant(((1, 2),))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_determinant_matches_cofactor_expansion(n):
    rng = random.Random(n)
    for _ in range(40):
        M = tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n))
        assert determinant(M) == cofactor_det([list(r) for r in M])


def test_inverse_examples():
    assert inverse_rational(identity(2)) == identity(2)
    assert inverse_rational(((2, 0), (0, 5))) == ((Fraction(1, 2), 0), (0, Fraction(1, 5)))


def test_inverse_singular():
    with pytest.raises(Singular):
        inverse_rational(((1, 2), (2, 4)))


def test_inverse_of_unimodular_is_recorded_integer_inverse():
    rng = random.Random(11)
    for _ in range(10):
        M, Minv = random_unimodular(rng, 4)
        inv = inverse_rational(M)
        assert inv == Minv
        assert all(x.denominator == 1 for row in inv for x in row)


def _same_lattice(A, B):
    """Columns of A and B generate the same lattice: each is an integer combination of the other."""
    for X, Y in ((A, B), (B, A)):
        coords = matmul(inverse_rational(X), Y)
        if any(Fraction(c).denominator != 1 for row in coords for c in row):
            return False
    return True


@pytest.mark.parametrize("basis", [
    identity(3),
    from_columns([(1, 0), (1, 1)]),
    from_columns([(1, 1), (1, 2)]),
    from_columns([(201, 37), (1648, 297)]),
])
def test_lll_examples(basis):
    reduced, T = lll_reduce(basis)
    assert matmul(basis, T) == reduced
    assert abs(determinant(T)) == 1
    assert lll_conditions_hold(columns(reduced))
    assert _same_lattice(basis, reduced)


def test_lll_identity_unchanged():
    assert lll_reduce(identity(3)) == (identity(3), identity(3))


def test_lll_random():
    rng = random.Random(3)
    for dim in (2, 3, 4, 5):
        for _ in range(10):
            while True:
                M = tuple(tuple(rng.randint(-10**6, 10**6) for _ in range(dim)) for _ in range(dim))
                if determinant(M):
                    break
            reduced, T = lll_reduce(M)
            assert matmul(M, T) == reduced
            assert abs(determinant(T)) == 1
            assert lll_conditions_hold(columns(reduced))


def test_lll_dependent():
    with pytest.raises(DependentColumns):
        lll_reduce(from_columns([(1, 2), (2, 4)]))


def test_short_vector_diag():
    w, alpha = short_nonneg_combination(((1, 0), (0, 2)), 2)
    assert max(abs(a) for a in alpha) == Fraction(1, 2)
    assert matvec(((1, 0), (0, 2)), alpha) == w


def test_short_vector_matches_brute_force_minimum():
    U = from_columns([(1, 0), (1, 4)])
    inv = inverse_rational(U)
    best = min(
        max(abs(a) for a in matvec(inv, w))
        for w in itertools.product(range(-4, 5), repeat=2) if any(w)
    )
    assert best == Fraction(1, 4) <= Fraction(1, 2)  # Minkowski: <= 4^(-1/2)
    w, alpha = short_nonneg_combination(U, 4)
    assert max(abs(a) for a in alpha) == best
    assert matvec(U, alpha) == w


def test_short_vector_random():
    rng = random.Random(8)
    for dim in (2, 3, 4):
        for _ in range(30):
            while True:
                U = tuple(tuple(rng.randint(-20, 20) for _ in range(dim)) for _ in range(dim))
                idx = abs(determinant(U))
                if idx >= 2:
                    break
            w, alpha = short_nonneg_combination(U, idx)
            assert any(w)
            assert matvec(U, alpha) == w
            assert max(abs(a) for a in alpha) < 1
            assert any(a > 0 for a in alpha)  # never inside the negated cone


def test_congruence_basis_examples():
    assert congruence_lattice_basis((1,), 2) == ((2,),)
    assert columns(congruence_lattice_basis((1, 1), 3)) == [(3, 0), (-1, 1)]
    B = congruence_lattice_basis((4, 3, 5), 7)
    for col in columns(B):
        assert sum(a * m for a, m in zip((4, 3, 5), col)) % 7 == 0
    assert abs(determinant(B)) == 7


def test_congruence_basis_random():
    rng = random.Random(2)
    for _ in range(100):
        b = rng.randint(2, 300)
        a = []
        while len(a) < rng.randint(1, 4):
            x = rng.randint(1, 10**4)
            if math.gcd(x, b) == 1:
                a.append(x)
        B = congruence_lattice_basis(a, b)
        for col in columns(B):
            assert sum(x * y for x, y in zip(a, col)) % b == 0
        assert abs(determinant(B)) == b


def test_congruence_basis_errors():
    with pytest.raises(NotCoprime):
        congruence_lattice_basis((2, 1), 4)
    with pytest.raises(BadDimension):
        congruence_lattice_basis((), 4)
