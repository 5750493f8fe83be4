"""Integer utilities: gcds, primality, factorization, divisor sums.

Everything is exact and deterministic.  Factorization is trial division up
to a fixed bound followed by Brent's cycle-finding rho with a deterministic
parameter schedule, which is ample for the discriminants met at desk scale
(their prime factors are small or come from known ramified sets).
"""

from math import gcd, isqrt

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def is_prime(n):
    """Deterministic Miller-Rabin (the 12 smallest prime bases cover n < 3.3e24,
    and are a safe heuristic above; extra bases added for very large n)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _SMALL_PRIMES if n < 3317044064679887385961981 else _SMALL_PRIMES + tuple(range(41, 120, 2))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n):
    """One nontrivial factor of composite odd n (deterministic seed schedule)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = gcd(q, n)
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError("rho failed on %d" % n)


def factorint(n, hint_primes=()):
    """Factor |n| into a dict {prime: exponent}.

    hint_primes are tried first; useful when the prime support is already
    known from a related quantity (e.g. a field discriminant).
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    for p in hint_primes:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 100000:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += wheel[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def prime_divisors(n, hint_primes=()):
    if abs(n) == 1:
        return []
    return sorted(factorint(n, hint_primes))


def primes_below(bound):
    """All primes < bound (plain sieve)."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i:bound:i] = bytearray(len(range(i * i, bound, i)))
    return [i for i in range(bound) if sieve[i]]


def sigma(r, n):
    """Divisor power sum sum_{d|n} d^r."""
    total = 1
    for p, e in factorint(n).items():
        total *= sum(p ** (r * j) for j in range(e + 1))
    return total


def squarefree_part(n):
    """The squarefree integer s with n = s * (square), sign preserved."""
    sign = -1 if n < 0 else 1
    s = 1
    for p, e in factorint(n).items():
        if e % 2:
            s *= p
    return sign * s
