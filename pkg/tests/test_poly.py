import random

import pytest

from heckecong.errors import ZeroPolynomial
from heckecong.poly import (
    GF, QQ, ZZ, Poly, count_real_roots_above, factor_mod_p, factor_over_Q,
    is_irreducible_mod_p, poly_gcd, poly_xgcd, resultant_Z,
)


def test_factor_mod_p_examples():
    f5 = GF(5)
    facs = factor_mod_p(Poly([1, 0, 1], f5))
    assert [(list(g.coeffs), m) for g, m in facs] == [([2, 1], 1), ([3, 1], 1)]

    f3 = GF(3)
    facs = factor_mod_p(Poly([1, 0, 1], f3))
    assert len(facs) == 1 and facs[0][0].degree == 2 and facs[0][1] == 1

    f7 = GF(7)
    facs = factor_mod_p(Poly([0, 0, 1], f7))
    assert facs == [(Poly([0, 1], f7), 2)]


def test_factor_mod_p_zero_rejected():
    with pytest.raises(ZeroPolynomial):
        factor_mod_p(Poly([], GF(5)))


def test_factor_mod_p_random_refactor():
    rng = random.Random(123)
    for trial in range(200):
        p = rng.choice([2, 3, 5, 7, 13])
        ring = GF(p)
        deg = rng.randrange(1, 11)
        coeffs = [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]
        f = Poly(coeffs, ring)
        facs = factor_mod_p(f, seed=trial)
        prod = Poly([f.lc()], ring)
        for g, m in facs:
            assert g.is_monic()
            for _ in range(m):
                prod = prod * g
        assert prod == f


def test_factor_mod_p_irreducibility_oracle():
    # no roots for degree <= 3 pieces; gcd with x^(p^d) - x for degree <= 6
    rng = random.Random(5)
    for trial in range(50):
        p = rng.choice([2, 3, 5])
        ring = GF(p)
        deg = rng.randrange(2, 7)
        f = Poly([rng.randrange(p) for _ in range(deg)] + [1], ring)
        for g, _ in factor_mod_p(f, seed=trial):
            if g.degree <= 3 and g.degree >= 2:
                assert all(g.evaluate(a) % p != 0 for a in range(p))
            assert is_irreducible_mod_p(g)


def test_factor_over_Q_examples():
    # x^4 - 1 = (x-1)(x+1)(x^2+1)
    facs = factor_over_Q(Poly([-1, 0, 0, 0, 1], ZZ))
    assert [list(g.coeffs) for g in facs] == [[-1, 1], [1, 1], [1, 0, 1]]

    facs = factor_over_Q(Poly([-1, -1, 1], ZZ))
    assert len(facs) == 1

    facs = factor_over_Q(Poly([0, 0, 1], ZZ))
    assert [list(g.coeffs) for g in facs] == [[0, 1], [0, 1]]


def test_factor_over_Q_random_refactor():
    rng = random.Random(99)
    for trial in range(200):
        deg = rng.randrange(1, 11)
        f = Poly([rng.randrange(-20, 21) for _ in range(deg)] + [rng.choice([1, 1, 1, 2, 3, -1])], ZZ)
        if f.is_zero():
            continue
        facs = factor_over_Q(f, seed=trial)
        prod = Poly([1], ZZ)
        for g in facs:
            prod = prod * g
        content, prim = f.primitive()
        assert prod == prim


def test_factor_over_Q_nonmonic():
    # 6x^2 + 5x + 1 = (2x+1)(3x+1), primitive
    facs = factor_over_Q(Poly([1, 5, 6], ZZ))
    assert sorted(list(g.coeffs) for g in facs) == [[1, 2], [1, 3]]


def test_poly_gcd_and_xgcd():
    ring = GF(7)
    a = Poly([1, 1], ring) * Poly([2, 1], ring)
    b = Poly([1, 1], ring) * Poly([3, 1], ring)
    g = poly_gcd(a, b)
    assert g == Poly([1, 1], ring)
    g2, s, t = poly_xgcd(a, b)
    assert g2 == g
    assert (s * a + t * b) == g


def test_resultant():
    # res(x^2-1, x-2) = (2^2 - 1) = 3
    assert resultant_Z(Poly([-1, 0, 1], ZZ), Poly([-2, 1], ZZ)) == 3
    # resultant of polys with common factor is 0
    assert resultant_Z(Poly([-1, 0, 1], ZZ), Poly([-1, 1], ZZ)) == 0


def test_count_real_roots_above():
    # roots of x^2 - 4: -2, 2
    f = Poly([-4, 0, 1], ZZ)
    assert count_real_roots_above(f, 0) == 1
    assert count_real_roots_above(f, 3) == 0
    assert count_real_roots_above(f, -3) == 2


def test_squarefree_multiplicities_over_Q():
    # (x-1)^2 (x+2)^3
    f = Poly([-1, 1], ZZ)
    g = Poly([2, 1], ZZ)
    h = f * f * g * g * g
    facs = factor_over_Q(h)
    assert sorted(list(q.coeffs) for q in facs) == [[-1, 1], [-1, 1], [2, 1], [2, 1], [2, 1]]
