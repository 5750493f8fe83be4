"""Finite fields F_{p^n} with explicit defining polynomials.

Elements are tuples of ints of length n (coordinates on the power basis of
the class of x).  A canonical defining polynomial for each (p, n) is the
first monic irreducible in the base-p enumeration of coefficient vectors,
so distinct runs agree on what "the" field F_{p^n} is.
"""

import random

from .poly import GF, Poly, is_irreducible_mod_p

_CANON_CACHE = {}


def canonical_irreducible(p, n):
    """First monic irreducible of degree n over GF(p) in a fixed enumeration."""
    key = (p, n)
    if key not in _CANON_CACHE:
        ring = GF(p)
        for v in range(p ** n):
            digits = []
            t = v
            for _ in range(n):
                digits.append(t % p)
                t //= p
            f = Poly(digits + [1], ring)
            if is_irreducible_mod_p(f):
                _CANON_CACHE[key] = f
                break
        else:
            raise AssertionError("no irreducible of degree %d over GF(%d)" % (n, p))
    return _CANON_CACHE[key]


class FiniteField:
    """F_{p^n} = F_p[x]/(poly); element = tuple of n ints."""

    def __init__(self, p, poly=None, n=None):
        if poly is None:
            poly = canonical_irreducible(p, n)
        assert poly.is_monic() and poly.ring == GF(p)
        self.p = p
        self.poly = poly
        self.n = poly.degree
        self.q = p ** self.n

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and other.p == self.p
                and other.poly == self.poly)

    def __hash__(self):
        return hash((self.p, self.poly.coeffs))

    def __repr__(self):
        return "FiniteField(%d^%d, %s)" % (self.p, self.n, list(self.poly.coeffs))

    # -- element constructors ------------------------------------------------

    def zero(self):
        return (0,) * self.n

    def one(self):
        return ((1,) + (0,) * (self.n - 1)) if self.n else ()

    def gen(self):
        if self.n == 1:
            # x reduces to the negated constant term of the defining poly
            return (-self.poly.coeffs[0] % self.p,)
        return (0, 1) + (0,) * (self.n - 2)

    def from_int(self, a):
        return ((a % self.p,) + (0,) * (self.n - 1))

    def element(self, coords):
        cs = [c % self.p for c in coords]
        assert len(cs) <= self.n
        cs += [0] * (self.n - len(cs))
        return tuple(cs)

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def scalar(self, c, a):
        p = self.p
        c %= p
        return tuple(c * x % p for x in a)

    def mul(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mc = self.poly.coeffs  # monic
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                for j in range(self.poly.degree):
                    prod[k - n + j] -= c * mc[j]
            prod[k] = 0
        return tuple(c % p for c in prod[:n])

    def is_zero(self, a):
        return all(c == 0 for c in a)

    def inv(self, a):
        assert not self.is_zero(a)
        ring = GF(self.p)
        ap = Poly(list(a), ring)
        from .poly import poly_xgcd
        g, s, _ = poly_xgcd(ap, self.poly)
        assert g.degree == 0
        inv_g = pow(int(g.coeffs[0]), -1, self.p)
        res = [c * inv_g % self.p for c in s.coeffs]
        return self.element(res)

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        out = self.one()
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def frobenius(self, a, k=1):
        """a^(p^k)."""
        out = a
        for _ in range(k % self.n if self.n else 0):
            out = self.pow(out, self.p)
        return out

    def minimal_polynomial(self, a):
        """Minimal polynomial of a over F_p (monic, over GF(p))."""
        from .matrix import rref_mod
        rows = []
        pw = self.one()
        for _ in range(self.n + 1):
            rows.append(list(pw))
            pw = self.mul(pw, a)
        for d in range(1, self.n + 1):
            # solve c_0*1 + ... + c_{d-1} a^{d-1} = -a^d
            cols = [[rows[i][j] for i in range(d)] for j in range(self.n)]
            from .matrix import solve_mod
            sol = solve_mod(cols, [-rows[d][j] % self.p for j in range(self.n)], self.p)
            if sol is not None:
                return Poly(sol + [1], GF(self.p))
        raise AssertionError("no minimal polynomial found")


# --- dense polynomials with FiniteField coefficients ----------------------
# small internal toolkit, only what root extraction needs

def _pnorm(field, cs):
    while cs and field.is_zero(cs[-1]):
        cs.pop()
    return cs


def _pmul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _pnorm(field, out)


def _psub(field, a, b):
    n = max(len(a), len(b))
    z = field.zero()
    out = [field.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z)
           for i in range(n)]
    return _pnorm(field, out)


def _pdivmod(field, a, b):
    assert b
    inv_lc = field.inv(b[-1])
    rem = list(a)
    dq = len(rem) - len(b)
    if dq < 0:
        return [], rem
    quo = [field.zero()] * (dq + 1)
    for i in range(dq, -1, -1):
        c = field.mul(rem[i + len(b) - 1], inv_lc)
        quo[i] = c
        if not field.is_zero(c):
            for j, bc in enumerate(b):
                rem[i + j] = field.sub(rem[i + j], field.mul(c, bc))
    return quo, _pnorm(field, rem)


def _pmonic(field, a):
    if not a or field.is_zero(field.sub(a[-1], field.one())):
        return list(a)
    inv = field.inv(a[-1])
    return [field.mul(c, inv) for c in a]


def _pgcd(field, a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _pdivmod(field, a, b)
        a, b = b, r
    return _pmonic(field, a)


def _ppowmod(field, base, e, modulus):
    result = [field.one()]
    _, base = _pdivmod(field, base, modulus)
    while e:
        if e & 1:
            result = _pdivmod(field, _pmul(field, result, base), modulus)[1]
        base = _pdivmod(field, _pmul(field, base, base), modulus)[1]
        e >>= 1
    return result


def roots_in_field(f, field, seed=0):
    """All roots in ``field`` of a polynomial with GF(p) coefficients.

    f must be squarefree.  Returns a sorted list of element tuples.
    """
    assert f.ring == GF(field.p)
    fc = [field.from_int(int(c)) for c in f.coeffs]
    fc = _pnorm(field, fc)
    # keep only the part splitting into linears: gcd(f, x^q - x)
    x = [field.zero(), field.one()]
    xq = _ppowmod(field, x, field.q, fc)
    lin = _pgcd(field, fc, _psub(field, xq, x))
    rng = random.Random(seed)
    roots = []

    def split(g):
        if len(g) <= 1:
            return
        if len(g) == 2:
            roots.append(field.neg(field.mul(g[0], field.inv(g[1]))))
            return
        q = field.q
        while True:
            a = field.element([rng.randrange(field.p) for _ in range(field.n)])
            if field.is_zero(a):
                continue
            if field.p == 2:
                # trace map applied to a*x (multiplicative randomization)
                t = []
                b = [field.zero(), a]
                for _ in range(field.n):
                    t = _psub(field, t, [field.neg(c) for c in b])
                    b = _pdivmod(field, _pmul(field, b, b), g)[1]
                h = _pgcd(field, g, t)
            else:
                shifted = [a, field.one()]
                powed = _ppowmod(field, shifted, (q - 1) // 2, g)
                h = _pgcd(field, g, _psub(field, powed, [field.one()]))
            if 0 < len(h) - 1 < len(g) - 1:
                split(h)
                split(_pdivmod(field, g, h)[0])
                return

    split(_pmonic(field, lin))
    return sorted(roots)


_SUBFIELD_CACHE = {}


def subfield_roots(g, big, seed=0):
    """All roots in ``big`` = F_{p^L} of an irreducible GF(p) polynomial g of
    degree f dividing L.

    Working directly in F_{p^L} makes Cantor-Zassenhaus pay L^2 coefficient
    arithmetic against an exponent of size p^L; instead the subfield fixed by
    the f-th Frobenius power is located by linear algebra, g is split inside
    an abstract copy of F_{p^f}, and the roots are mapped back up.
    """
    from .matrix import kernel_mod

    f = g.degree
    p = big.p
    assert big.n % f == 0, "roots live in a subfield of matching degree"
    if f == big.n:
        return roots_in_field(g, big, seed=seed)
    if f == 1:
        return [big.from_int(-int(g.coeffs[0]))]

    key = (p, big.poly.coeffs, f)
    if key not in _SUBFIELD_CACHE:
        n = big.n
        # matrix of Frobenius on the power basis (rows = images)
        frob = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            frob.append(list(big.pow(tuple(e), p)))
        m = frob
        for _ in range(f - 1):
            m = [[sum(m[i][t] * frob[t][j] for t in range(n)) % p
                  for j in range(n)] for i in range(n)]
        # kernel of (Frob^f - id) acting on row vectors
        cols = [[(m[i][j] - (1 if i == j else 0)) % p for i in range(n)]
                for j in range(n)]
        basis = kernel_mod(cols, n, p)
        assert len(basis) == f, "subfield dimension mismatch"
        rng = random.Random(seed)
        while True:
            combo = [rng.randrange(p) for _ in range(f)]
            s = big.zero()
            for c, v in zip(combo, basis):
                s = big.add(s, big.scalar(c, tuple(int(x) for x in v)))
            mu = big.minimal_polynomial(s)
            if mu.degree == f:
                break
        _SUBFIELD_CACHE[key] = (s, mu)
    s, mu = _SUBFIELD_CACHE[key]

    small = FiniteField(p, mu)
    small_roots = roots_in_field(g, small, seed=seed)
    out = []
    for r in small_roots:
        # r is a polynomial in the subfield generator; evaluate at s
        acc = big.zero()
        pw = big.one()
        for c in r:
            if c:
                acc = big.add(acc, big.scalar(c, pw))
            pw = big.mul(pw, s)
        out.append(acc)
    return sorted(out)
