import pytest

from heckecong.errors import (
    NotAlgebraicInteger, NotMaximalOrder, NotSublattice, RankDeficient,
)
from heckecong.intutil import primes_below
from heckecong.numberfield import NumberField, automorphisms
from heckecong.orders import (
    _split_via_idempotents, disc, equation_order, index, j_group,
    maximal_order, order_generated_by, ramified_primes, split_prime,
)
from heckecong.poly import Poly, ZZ

GOLDEN = NumberField(Poly([-1, -1, 1], ZZ))
GAUSS = NumberField(Poly([1, 0, 1], ZZ))
SQRT5 = NumberField(Poly([-5, 0, 1], ZZ))

# degree <= 5 test fields, mixed Galois and non-Galois
FIELD_POLYS = (
    [-1, -1, 1],        # golden, Galois quadratic
    [1, 0, 1],          # gaussian
    [-5, 0, 1],         # sqrt5 with non-maximal equation order
    [-2, 0, 0, 1],      # non-Galois cubic
    [8, -2, 1, 1],      # cubic with an essential index divisor at 2
    [-1, -1, 0, 1],     # non-Galois cubic, disc -23
    [1, 1, 1, 1, 1],    # cyclotomic quartic, Galois
    [-3, 0, 0, 0, 1],   # non-Galois quartic
    [2, 0, -2, 0, 1],   # quartic, Eisenstein at 2
    [1, -1, 0, 0, 0, 1],  # quintic x^5 - x + 1
)


def _fields():
    out = [NumberField(Poly(coeffs, ZZ)) for coeffs in FIELD_POLYS]
    assert len(out) == 10
    return out


def test_order_generated_by_examples():
    R = order_generated_by(GOLDEN, [GOLDEN.element([-1, 2])])
    assert disc(R) == 20
    O = maximal_order(GOLDEN)
    assert index(O, R) == 2

    full = order_generated_by(GOLDEN, [GOLDEN.theta()])
    assert disc(full) == 5
    assert full == O

    with pytest.raises(RankDeficient):
        order_generated_by(GOLDEN, [GOLDEN.one()])


def test_order_generated_by_rejects_nonintegral():
    with pytest.raises(NotAlgebraicInteger):
        order_generated_by(GOLDEN, [GOLDEN.element(["1/2"])])


def test_maximal_order_examples():
    assert disc(maximal_order(SQRT5)) == 5
    assert index(maximal_order(SQRT5), equation_order(SQRT5)) == 2
    assert disc(maximal_order(GOLDEN)) == 5
    assert disc(maximal_order(GAUSS)) == -4


def test_index_trivial_and_disc_relation():
    O = maximal_order(GOLDEN)
    assert index(O, O) == 1
    R = order_generated_by(GOLDEN, [GOLDEN.element([-1, 2])])
    assert disc(R) == index(O, R) ** 2 * disc(O)


def test_index_not_sublattice():
    O = maximal_order(SQRT5)
    R = order_generated_by(SQRT5, [SQRT5.theta()])
    with pytest.raises(NotSublattice):
        index(R, O)


def test_disc_examples():
    assert disc(maximal_order(GAUSS)) == -4
    K1 = NumberField(Poly([-7, 1], ZZ))
    assert disc(maximal_order(K1)) == 1


def test_split_prime_gaussian():
    O = maximal_order(GAUSS)
    assert [(q.e, q.f) for q in split_prime(O, 5)] == [(1, 1), (1, 1)]
    assert [(q.e, q.f) for q in split_prime(O, 2)] == [(2, 1)]
    assert [(q.e, q.f) for q in split_prime(O, 3)] == [(1, 2)]


def test_split_prime_requires_maximal():
    R = order_generated_by(SQRT5, [SQRT5.theta()])
    with pytest.raises(NotMaximalOrder):
        split_prime(R, 3)


def test_sum_ef_equals_degree_all_fields():
    for K in _fields():
        O = maximal_order(K)
        for p in primes_below(100):
            primes = split_prime(O, p)
            assert sum(q.e * q.f for q in primes) == K.degree
            for q in primes:
                assert q.residue_field.q == p ** q.f


def test_split_paths_agree():
    for K in _fields():
        if K.degree > 5:
            continue
        O = maximal_order(K)
        for p in primes_below(100):
            kd = sorted((q.e, q.f) for q in split_prime(O, p))
            idem = sorted((q.e, q.f) for q in _split_via_idempotents(O, p, 0))
            assert kd == idem, "paths disagree at p=%d for %r" % (p, K)


def test_ramified_primes_examples():
    assert ramified_primes(maximal_order(GAUSS)) == [2]
    assert ramified_primes(maximal_order(SQRT5)) == [5]
    K1 = NumberField(Poly([-7, 1], ZZ))
    assert ramified_primes(maximal_order(K1)) == []


def test_reduction_maps_are_ring_maps():
    O = maximal_order(NumberField(Poly([8, -2, 1, 1], ZZ)))
    for p in (2, 3, 5, 503):
        for q in split_prime(O, p):
            fld = q.residue_field
            for i in range(O.degree):
                for j in range(O.degree):
                    a, b = O.basis[i], O.basis[j]
                    assert q.reduce(a * b) == fld.mul(q.reduce(a), q.reduce(b))
                    assert q.reduce(a + b) == fld.add(q.reduce(a), q.reduce(b))
            # p itself reduces to zero and the lattice is an ideal
            assert fld.is_zero(q.reduce(O.field.one() * p))
            for belt in q.basis_elements():
                for b in O.basis:
                    assert q.contains(belt * b)


def test_j_group_gaussian():
    O = maximal_order(GAUSS)
    auts = automorphisms(GAUSS)
    j2 = j_group(O, split_prime(O, 2)[0], auts)
    assert len(j2) == 2
    j5 = j_group(O, split_prime(O, 5)[0], auts)
    assert len(j5) == 1
    j3 = j_group(O, split_prime(O, 3)[0], auts)
    assert len(j3) == 1  # inert: decomposition full but residue action moves


def test_ramified_iff_nontrivial_j_galois_fields():
    for coeffs in ([-1, -1, 1], [1, 0, 1], [-5, 0, 1], [1, 1, 1, 1, 1]):
        K = NumberField(Poly(coeffs, ZZ))
        O = maximal_order(K)
        auts = automorphisms(K)
        assert len(auts) == K.degree
        d = O.disc()
        for p in primes_below(60):
            has_nontrivial = any(
                len(j_group(O, q, auts)) > 1 for q in split_prime(O, p))
            assert has_nontrivial == (d % p == 0), (coeffs, p)
