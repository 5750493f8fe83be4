import random
from fractions import Fraction

import pytest

from heckecong.errors import DegreeBoundExceeded, NotIrreducible
from heckecong.numberfield import (
    NumberField, automorphisms, element_minpoly, galois_closure, is_galois,
)
from heckecong.poly import Poly, ZZ


def golden():
    return NumberField(Poly([-1, -1, 1], ZZ))


def test_construction_rejects_reducible():
    with pytest.raises(NotIrreducible):
        NumberField(Poly([-1, 0, 1], ZZ))  # x^2 - 1


def test_element_arithmetic_and_inverse():
    K = golden()
    t = K.theta()
    assert t * t == t + 1
    rng = random.Random(1)
    for _ in range(50):
        a = K.element([Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)),
                       Fraction(rng.randrange(-9, 10), rng.randrange(1, 5))])
        if a.is_zero():
            continue
        assert a * a.inverse() == K.one()


def test_element_minpoly_examples():
    K = golden()
    assert list(element_minpoly(K.theta()).coeffs) == [-1, -1, 1]
    assert list(element_minpoly(K.one()).coeffs) == [-1, 1]
    assert list(element_minpoly(K.element([-1, 2])).coeffs) == [-5, 0, 1]


def test_automorphisms_examples():
    K = golden()
    auts = automorphisms(K)
    assert len(auts) == 2
    images = sorted(tuple(a.image.coords) for a in auts)
    assert images == [(0, 1), (1, -1)]  # theta and 1 - theta

    K2 = NumberField(Poly([-2, 0, 0, 1], ZZ))
    assert len(automorphisms(K2)) == 1

    K3 = NumberField(Poly([-7, 1], ZZ))  # degree 1
    assert len(automorphisms(K3)) == 1
    assert is_galois(K3)


def test_automorphism_group_axioms():
    for coeffs in ([-1, -1, 1], [1, 0, 1], [1, 1, 1, 1, 1]):  # incl. cyclotomic quartic
        K = NumberField(Poly(coeffs, ZZ))
        auts = automorphisms(K)
        assert any(a.is_identity() for a in auts)
        images = {a.image.coords for a in auts}
        for a in auts:
            for b in auts:
                assert a.compose(b).image.coords in images
            assert a.compose(a.inverse()).is_identity()
        assert K.degree % len(auts) == 0


def test_automorphisms_are_ring_maps():
    # additive and multiplicative on hundreds of random elements
    K = NumberField(Poly([1, 1, 1, 1, 1], ZZ))
    auts = automorphisms(K)
    assert len(auts) == 4
    rng = random.Random(2)
    for sigma in auts:
        for _ in range(125):
            a = K.element([rng.randrange(-20, 21) for _ in range(4)])
            b = K.element([rng.randrange(-20, 21) for _ in range(4)])
            assert sigma.apply(a + b) == sigma.apply(a) + sigma.apply(b)
            assert sigma.apply(a * b) == sigma.apply(a) * sigma.apply(b)


def test_galois_closure_quadratic_is_self():
    K = golden()
    gc = galois_closure(K)
    assert gc.closure == K
    assert len(gc.group) == 2
    assert gc.theta_image == K.theta()


def test_galois_closure_rational():
    K = NumberField(Poly([-3, 1], ZZ))
    gc = galois_closure(K)
    assert gc.closure.degree == 1 and len(gc.group) == 1


def test_galois_closure_cubic():
    K = NumberField(Poly([-2, 0, 0, 1], ZZ))
    gc = galois_closure(K)
    assert gc.closure.degree == 6
    assert len(gc.group) == 6
    # the defining polynomial splits completely over the closure
    assert len(gc.roots) == 3
    m = K.minpoly
    for r in gc.roots:
        acc = gc.closure.zero()
        pw = gc.closure.one()
        for c in m.coeffs:
            acc = acc + pw * c
            pw = pw * r
        assert acc.is_zero()
    # group axioms
    images = {a.image.coords for a in gc.group}
    for a in gc.group:
        for b in gc.group:
            assert a.compose(b).image.coords in images


def test_galois_closure_embedding_is_ring_hom():
    K = NumberField(Poly([-2, 0, 0, 1], ZZ))
    gc = galois_closure(K)
    t = K.theta()
    assert gc.embed(t * t + t * 3) == gc.embed(t) * gc.embed(t) + gc.embed(t) * 3
    # embedded theta is a root of the original minimal polynomial
    img = gc.theta_image
    assert (img * img * img - 2).is_zero()


def test_galois_closure_degree_cap():
    K = NumberField(Poly([-2, 0, 0, 1], ZZ))
    with pytest.raises(DegreeBoundExceeded):
        galois_closure(K, closure_cap=4)
    with pytest.raises(DegreeBoundExceeded):
        galois_closure(K, field_cap=2)


def test_is_galois_iff_full_automorphisms():
    cases = [([-1, -1, 1], True), ([-2, 0, 0, 1], False),
             ([1, 1, 1, 1, 1], True), ([-3, 1], True)]
    for coeffs, expect in cases:
        K = NumberField(Poly(coeffs, ZZ))
        assert is_galois(K) == expect
        assert (len(automorphisms(K)) == K.degree) == expect
