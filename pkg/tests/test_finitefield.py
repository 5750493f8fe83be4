import random

from heckecong.finitefield import (
    FiniteField, canonical_irreducible, roots_in_field, subfield_roots,
)
from heckecong.poly import GF, Poly, is_irreducible_mod_p


def _eval(f, field, r):
    acc = field.zero()
    for c in reversed(f.coeffs):
        acc = field.add(field.mul(acc, r), field.from_int(int(c)))
    return acc


def test_canonical_irreducible_deterministic():
    a = canonical_irreducible(3, 4)
    b = canonical_irreducible(3, 4)
    assert a == b and a.degree == 4 and is_irreducible_mod_p(a)


def test_field_arithmetic_axioms():
    rng = random.Random(3)
    for p, n in ((2, 4), (3, 2), (5, 3), (13, 2)):
        fld = FiniteField(p, n=n)
        for _ in range(30):
            a = fld.element([rng.randrange(p) for _ in range(n)])
            b = fld.element([rng.randrange(p) for _ in range(n)])
            c = fld.element([rng.randrange(p) for _ in range(n)])
            assert fld.mul(a, b) == fld.mul(b, a)
            assert fld.mul(a, fld.add(b, c)) == fld.add(fld.mul(a, b), fld.mul(a, c))
            if not fld.is_zero(a):
                assert fld.mul(a, fld.inv(a)) == fld.one()
        # Frobenius is the p-power map and has order n on the generator
        g = fld.gen()
        assert fld.frobenius(g) == fld.pow(g, p)
        assert fld.frobenius(g, n) == g


def test_minimal_polynomial_annihilates():
    fld = FiniteField(5, n=3)
    rng = random.Random(9)
    for _ in range(20):
        a = fld.element([rng.randrange(5) for _ in range(3)])
        mu = fld.minimal_polynomial(a)
        acc = fld.zero()
        for c in reversed(mu.coeffs):
            acc = fld.add(fld.mul(acc, a), fld.from_int(int(c)))
        assert fld.is_zero(acc)
        assert mu.degree in (1, 3)


def test_roots_in_field_complete():
    # x^2 + 1 over F_5 has roots 2, 3 in F_25
    fld = FiniteField(5, n=2)
    roots = roots_in_field(Poly([1, 0, 1], GF(5)), fld)
    assert len(roots) == 2
    assert all(fld.is_zero(_eval(Poly([1, 0, 1], GF(5)), fld, r)) for r in roots)


def test_roots_none_when_wrong_field():
    # an irreducible cubic has no roots in a quadratic extension
    f = canonical_irreducible(3, 3)
    fld = FiniteField(3, n=2)
    assert roots_in_field(f, fld) == []


def test_subfield_roots_match_generic():
    rng = random.Random(11)
    for p, f, l in ((2, 2, 6), (3, 2, 4), (5, 3, 6), (13, 2, 4)):
        g = canonical_irreducible(p, f)
        big = FiniteField(p, n=l)
        fast = subfield_roots(g, big, seed=1)
        slow = roots_in_field(g, big, seed=1)
        assert fast == slow
        assert len(fast) == f
        for r in fast:
            assert big.is_zero(_eval(g, big, r))
            # roots really sit in the degree-f subfield
            assert big.frobenius(r, f) == r
