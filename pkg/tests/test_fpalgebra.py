import random

import pytest

from heckecong.errors import NotSemisimple
from heckecong.fpalgebra import (
    FpAlgebra, algebra_homs, decompose, is_semisimple, quotient_mod_p,
    random_product_of_fields, restriction_collision, subalgebra_image,
)
from heckecong.numberfield import NumberField
from heckecong.orders import maximal_order
from heckecong.poly import Poly, ZZ


def product_f5_f5():
    # (a1, a2) with componentwise operations
    table = [[(1, 0), (0, 0)], [(0, 0), (0, 1)]]
    return FpAlgebra(5, table, (1, 1))


def dual_numbers_f2():
    # F_2[e]/(e^2)
    table = [[(1, 0), (0, 1)], [(0, 1), (0, 0)]]
    return FpAlgebra(2, table, (1, 0))


def test_is_semisimple_examples():
    assert is_semisimple(product_f5_f5())
    assert not is_semisimple(dual_numbers_f2())
    f9 = random_product_of_fields(3, [2], seed=0)
    assert is_semisimple(f9)


def test_axiom_checking_rejects_garbage():
    bad = [[(1, 0), (0, 1)], [(1, 0), (0, 1)]]  # not commutative
    with pytest.raises(AssertionError):
        FpAlgebra(3, bad, (1, 0))


def test_decompose_product():
    dec = decompose(product_f5_f5())
    assert dec.residue_degrees == [1, 1]
    assert sorted(dec.idempotents) == [(0, 1), (1, 0)]
    dec.verify()


def test_decompose_field_single_component():
    f9 = random_product_of_fields(3, [2], seed=5)
    dec = decompose(f9)
    assert dec.residue_degrees == [2]
    assert dec.idempotents == [f9.unit]


def test_decompose_rejects_nilpotents():
    with pytest.raises(NotSemisimple):
        decompose(dual_numbers_f2())


def test_quotient_mod_p_gaussian_integers():
    K = NumberField(Poly([1, 0, 1], ZZ))
    O = maximal_order(K)
    a3 = quotient_mod_p(O, 3)
    assert is_semisimple(a3) and decompose(a3).residue_degrees == [2]
    a5 = quotient_mod_p(O, 5)
    assert is_semisimple(a5) and decompose(a5).residue_degrees == [1, 1]
    a2 = quotient_mod_p(O, 2)
    assert not is_semisimple(a2)


def test_quotient_semisimple_iff_unramified():
    from heckecong.intutil import primes_below
    polys = ([-1, -1, 1], [1, 0, 1], [-2, 0, 0, 1], [8, -2, 1, 1])
    for coeffs in polys:
        K = NumberField(Poly(coeffs, ZZ))
        O = maximal_order(K)
        d = O.disc()
        for p in primes_below(100):
            assert is_semisimple(quotient_mod_p(O, p)) == (d % p != 0)


def test_homs_are_homs_and_count_matches():
    rng = random.Random(0)
    for trial in range(20):
        p = rng.choice([2, 3, 5, 7, 13])
        degrees = []
        left = rng.randrange(1, 13)
        while left:
            d = rng.randrange(1, left + 1)
            degrees.append(d)
            left -= d
        alg = random_product_of_fields(p, degrees, seed=trial)
        homs = algebra_homs(alg, seed=trial)
        assert len(homs) == alg.dim
        assert len(set(homs)) == len(homs)
        for h in homs:
            assert h.is_multiplicative()


def test_subalgebra_image_unit_diagonal():
    alg = product_f5_f5()
    sub, basis = subalgebra_image(alg, [alg.unit])
    assert sub.dim == 1 and len(basis) == 1


def test_subalgebra_image_generating_element():
    alg = product_f5_f5()
    sub, basis = subalgebra_image(alg, [(2, 3)])
    assert sub.dim == 2


def test_subalgebras_semisimple():
    rng = random.Random(4)
    for trial in range(20):
        p = rng.choice([2, 3, 5])
        alg = random_product_of_fields(p, [rng.randrange(1, 4) for _ in range(2)],
                                       seed=trial)
        gens = [tuple(rng.randrange(p) for _ in range(alg.dim))]
        sub, basis = subalgebra_image(alg, gens)
        assert is_semisimple(sub)


def test_restriction_collision_diagonal():
    alg = product_f5_f5()
    _, basis = subalgebra_image(alg, [alg.unit])
    pair = restriction_collision(alg, basis)
    assert pair is not None
    h1, h2 = pair
    assert h1 != h2
    for v in basis:
        assert h1.apply(v) == h2.apply(v)


def test_restriction_collision_full_subalgebra_none():
    alg = product_f5_f5()
    _, basis = subalgebra_image(alg, [(2, 3)])
    assert restriction_collision(alg, basis) is None


def test_restriction_collision_frobenius_case():
    # F_9 with the prime subfield: identity and Frobenius collide on F_3
    alg = random_product_of_fields(3, [2], seed=1)
    _, basis = subalgebra_image(alg, [alg.unit])
    pair = restriction_collision(alg, basis)
    assert pair is not None and pair[0] != pair[1]
    for v in basis:
        assert pair[0].apply(v) == pair[1].apply(v)
