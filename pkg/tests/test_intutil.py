import random

from heckecong.intutil import (
    factorint, is_prime, primes_below, prime_divisors, sigma, squarefree_part, xgcd,
)


def test_xgcd():
    rng = random.Random(0)
    for _ in range(100):
        a, b = rng.randrange(-999, 1000), rng.randrange(-999, 1000)
        g, x, y = xgcd(a, b)
        assert g == a * x + b * y
        assert g >= 0


def test_is_prime_against_sieve():
    sieve = set(primes_below(2000))
    for n in range(2000):
        assert is_prime(n) == (n in sieve)


def test_factorint_reconstruction():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(2, 10 ** 12)
        fac = factorint(n)
        prod = 1
        for p, e in fac.items():
            assert is_prime(p)
            prod *= p ** e
        assert prod == n


def test_factorint_large_semiprime():
    p, q = 1000003, 2000029
    assert factorint(p * q) == {p: 1, q: 1}


def test_prime_divisors_with_hint():
    assert prime_divisors(144169 * 24 ** 2, hint_primes=[144169]) == [2, 3, 144169]


def test_sigma():
    assert sigma(1, 6) == 12
    assert sigma(3, 4) == 1 + 8 + 64


def test_squarefree_part():
    assert squarefree_part(20) == 5
    assert squarefree_part(-8) == -2
    assert squarefree_part(144169) == 144169
