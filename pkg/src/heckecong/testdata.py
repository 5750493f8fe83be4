"""Synthetic eigenform fixtures.

These are formal objects: normalized, multiplicative coefficient lists over
explicit number fields, built to hit code paths that honest level-1 data
below weight 40 cannot reach (an index divisible by 2 with the prime inert,
congruent non-conjugate pairs, ingested-file analysis).  The engine only
ever uses the ring generated by the coefficients, so nothing here depends
on the lists coming from genuine modular forms.
"""

from fractions import Fraction
from math import gcd

from .level1 import Eigenform
from .numberfield import NumberField
from .poly import ZZ, Poly


def multiplicative_extension(field, weight, prime_values, count):
    """a_1..a_count from values at primes, extended by a_{mn} = a_m a_n for
    coprime m, n and a_{p^(r+1)} = a_p a_{p^r} - p^(weight-1) a_{p^(r-1)}."""
    coeffs = {1: field.one()}
    for p, v in prime_values.items():
        coeffs[p] = v

    def value(n):
        if n in coeffs:
            return coeffs[n]
        # peel the smallest prime factor
        p = 2
        while n % p:
            p += 1
        pe = p
        while n // pe % p == 0:
            pe *= p
        if pe == n:
            # prime power p^e, e >= 2 (e == 1 was seeded)
            out = value(p) * value(n // p) - value(n // (p * p)) * p ** (weight - 1)
        else:
            out = value(pe) * value(n // pe)
        coeffs[n] = out
        return out

    return tuple(value(n) for n in range(1, count + 1))


def sqrt5_field():
    return NumberField(Poly([-5, 0, 1], ZZ))


def synthetic_sqrt5_form(count=10, weight=12):
    """Formal eigenform over Q(sqrt(5)) whose coefficients generate Z[sqrt5],
    so the coefficient order has index 2 in the maximal order while 2 stays
    unramified: exercises the collision branch of the witness search."""
    K = sqrt5_field()
    theta = K.theta()
    prime_values = {
        2: theta,
        3: K.one() + theta,
        5: K.from_rational(5),
        7: theta * 2 - 1,
    }
    coeffs = multiplicative_extension(K, weight, prime_values, count)
    return Eigenform(weight, K, coeffs, 0)


def cross_congruent_pair(count=10, weight=12):
    """Two formal eigenforms from distinct orbits (one rational, one over
    Q(sqrt5)) congruent modulo the prime above 5 and nowhere else small."""
    Kq = NumberField(Poly([-1, 1], ZZ), check=False)  # the rational field
    K = sqrt5_field()
    theta = K.theta()
    f_primes = {2: Kq.from_rational(1), 3: Kq.from_rational(2),
                5: Kq.from_rational(1), 7: Kq.from_rational(3)}
    g_primes = {2: K.one() + theta, 3: K.from_rational(2) + theta,
                5: K.one(), 7: K.from_rational(3) - theta}
    f = Eigenform(weight, Kq, multiplicative_extension(Kq, weight, f_primes, count), 0)
    g = Eigenform(weight, K, multiplicative_extension(K, weight, g_primes, count), 1)
    return f, g


def fixture_documents():
    """JSON documents served by the fixture-backed fetch client."""
    golden = {
        "label": "fx-23-2-a",
        "weight": 2,
        "level": 23,
        "field_poly": [-1, 1, 1],
        "an": [[1, 0], [0, 1], ["-1", "-2"], ["-1", "-1"], [0, 2]],
    }
    sqrt5 = synthetic_sqrt5_form()
    sq_doc = {
        "label": "fx-sqrt5-index2",
        "weight": sqrt5.weight,
        "level": 1,
        "field_poly": [-5, 0, 1],
        "an": [["%d/%d" % (Fraction(c).numerator, Fraction(c).denominator)
                for c in a.coords] for a in sqrt5.coeffs],
    }
    return {doc["label"]: doc for doc in (golden, sq_doc)}
