"""Dense univariate polynomials over Z, Q and F_p, with exact factorization.

Coefficients are stored low-to-high and trailing zeros are stripped, so the
zero polynomial has an empty coefficient tuple and degree -1.

Factorization:

* over F_p: squarefree decomposition, distinct-degree splitting, then
  Cantor-Zassenhaus equal-degree splitting driven by a seeded PRNG (the seed
  is part of the API so runs are reproducible);
* over Q: reduction modulo the smallest good prime, quadratic Hensel lifting
  and subset recombination (Zassenhaus).  Desk-scale degrees only.
"""

import random
from fractions import Fraction
from math import isqrt

from .errors import ZeroPolynomial
from .intutil import is_prime
from .matrix import IntMatrix


class IntegerRing:
    name = "ZZ"

    def coerce(self, x):
        if type(x) is int:
            return x
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError("non-integral coefficient %s" % x)
            return int(x)
        return int(x)

    def __repr__(self):
        return "ZZ"


class RationalField:
    name = "QQ"

    def coerce(self, x):
        return Fraction(x)

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p):
        assert is_prime(p), "modulus must be prime"
        self.p = p
        self.name = "GF(%d)" % p

    def coerce(self, x):
        if type(x) is int:
            return x % self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


ZZ = IntegerRing()
QQ = RationalField()

_GF_CACHE = {}


def GF(p):
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


class Poly:
    """Immutable dense polynomial over one of ZZ, QQ, GF(p)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs, ring=ZZ):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    # -- basics ------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i <= self.degree else self.ring.coerce(0)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        return "Poly(%s, %s)" % (list(self.coeffs), self.ring.name)

    def map_ring(self, ring):
        return Poly(self.coeffs, ring)

    # -- arithmetic ----------------------------------------------------------

    def _same(self, other):
        assert isinstance(other, Poly) and other.ring == self.ring
        return other

    def __add__(self, other):
        other = self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)], self.ring)

    def __sub__(self, other):
        other = self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)], self.ring)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs], self.ring)
        other = self._same(other)
        if self.is_zero() or other.is_zero():
            return Poly([], self.ring)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, self.ring)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly([0] * k + list(self.coeffs), self.ring)

    def divmod(self, other):
        """Quotient and remainder; requires other monic, or a field ring."""
        other = self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = isinstance(self.ring, (RationalField, PrimeField))
        if not field and not other.is_monic():
            raise ValueError("non-monic division over ZZ")
        if isinstance(self.ring, PrimeField):
            inv_lc = pow(other.lc(), -1, self.ring.p)
        elif field:
            inv_lc = 1 / Fraction(other.lc())
        else:
            inv_lc = 1
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly([], self.ring), self
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree]
            if c == 0:
                continue
            f = self.ring.coerce(c * inv_lc)
            quo[i] = f
            for j, b in enumerate(other.coeffs):
                rem[i + j] = self.ring.coerce(rem[i + j] - f * b)
        return Poly(quo, self.ring), Poly(rem[:other.degree], self.ring)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        q, r = self.divmod(other)
        assert r.is_zero() or isinstance(self.ring, (RationalField, PrimeField))
        return q

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        if isinstance(self.ring, PrimeField):
            inv = pow(self.lc(), -1, self.ring.p)
        else:
            inv = 1 / Fraction(self.lc())
        return Poly([c * inv for c in self.coeffs], self.ring)

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.ring)

    def evaluate(self, x):
        """Horner evaluation; x may live in any ring accepting these coeffs."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a, b):
        """self(a*x + b) by Horner in Poly form."""
        acc = Poly([], self.ring)
        lin = Poly([b, a], self.ring)
        for c in reversed(self.coeffs):
            acc = acc * lin + Poly([c], self.ring)
        return acc

    def pow_mod(self, e, modulus):
        """self^e mod modulus (field rings)."""
        result = Poly([1], self.ring)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    # -- ZZ/QQ specific -----------------------------------------------------

    def content(self):
        assert self.ring is ZZ
        from math import gcd
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self):
        """(content-with-sign, primitive part) over ZZ."""
        assert self.ring is ZZ
        if self.is_zero():
            return 0, self
        c = self.content()
        if self.lc() < 0:
            c = -c
        return c, Poly([x // c for x in self.coeffs], ZZ)

    def to_integer_poly(self):
        """Clear denominators: returns (den, Poly over ZZ) with den*self integral."""
        assert self.ring is QQ
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _gcd(den, c.denominator)
        return den, Poly([int(c * den) for c in self.coeffs], ZZ)


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


def poly_gcd(a, b):
    """Monic gcd over a field ring (QQ or GF(p))."""
    assert a.ring == b.ring
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g, g monic, over a field ring."""
    ring = a.ring
    r0, r1 = a, b
    s0, s1 = Poly([1], ring), Poly([], ring)
    t0, t1 = Poly([], ring), Poly([1], ring)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    if isinstance(ring, PrimeField):
        inv = pow(r0.lc(), -1, ring.p)
    else:
        inv = 1 / Fraction(r0.lc())
    scale = Poly([inv], ring)
    return r0 * inv, s0 * scale, t0 * scale


def gcd_over_Z(a, b):
    """Primitive gcd of two ZZ polys via the QQ gcd."""
    g = poly_gcd(a.map_ring(QQ), b.map_ring(QQ))
    _, gi = g.to_integer_poly()[1].primitive()
    return gi


# --------------------------------------------------------------------------
# factorization over F_p
# --------------------------------------------------------------------------

def _squarefree_decomposition_mod_p(f):
    """Yield (squarefree factor, multiplicity) over GF(p), handling the
    f' == 0 (perfect p-th power) degeneration."""
    p = f.ring.p
    out = []

    def rec(g, mult):
        if g.degree <= 0:
            return
        d = g.derivative()
        if d.is_zero():
            # g = h(x^p); over the prime field the coefficients are fixed by
            # Frobenius, so h has the same coefficients at stride p
            h = Poly(list(g.coeffs[::p]), g.ring)
            rec(h, mult * p)
            return
        w = poly_gcd(g, d)
        v = g // w
        i = 1
        while v.degree > 0:
            nxt = poly_gcd(v, w)
            piece = v // nxt
            if piece.degree > 0:
                out.append((piece.monic(), mult * i))
            v = nxt
            w = w // nxt
            i += 1
        if w.degree > 0:
            rec(w, mult)

    rec(f.monic(), 1)
    return out


def _distinct_degree(f):
    """Split squarefree monic f over GF(p) into products of irreducibles of
    one common degree each: yields (product, degree)."""
    p = f.ring.p
    out = []
    x = Poly([0, 1], f.ring)
    h = x
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f, f.degree))
            break
        h = h.pow_mod(p, f)
        g = poly_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    return out


def _equal_degree_split(f, d, rng):
    """Cantor-Zassenhaus: split monic squarefree f (all factors of degree d)."""
    p = f.ring.p
    n = f.degree
    if n == d:
        return [f]
    one = Poly([1], f.ring)
    while True:
        a = Poly([rng.randrange(p) for _ in range(n)], f.ring)
        if a.degree <= 0:
            continue
        g = poly_gcd(f, a)
        if 0 < g.degree < n:
            break
        if p == 2:
            # trace map over F_2
            t = Poly([], f.ring)
            b = a
            for _ in range(d):
                t = (t + b) % f
                b = (b * b) % f
            g = poly_gcd(f, t)
        else:
            e = (p ** d - 1) // 2
            b = a.pow_mod(e, f)
            g = poly_gcd(f, b - one)
        if 0 < g.degree < n:
            break
    return sorted(_equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng),
                  key=lambda q: q.coeffs)


def factor_mod_p(f, seed=0):
    """Factor f over its prime field.  Returns a sorted list of
    (monic irreducible Poly, multiplicity); rejects the zero polynomial."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    assert isinstance(f.ring, PrimeField)
    rng = random.Random(seed)
    factors = []
    for sqf, mult in _squarefree_decomposition_mod_p(f):
        for prod, d in _distinct_degree(sqf):
            for irr in _equal_degree_split(prod, d, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    # verify: leading unit times product of factors reproduces f
    check = Poly([f.lc()], f.ring)
    for g, m in factors:
        for _ in range(m):
            check = check * g
    assert check == f, "factorization check failed"
    return factors


def is_irreducible_mod_p(f):
    """Irreducibility over GF(p): a degree-n polynomial is irreducible iff it
    shares no root with x^(p^i) - x for any i <= n/2 (any proper
    factorization contains an irreducible factor of degree at most n/2).
    Composites usually die at tiny i, which keeps searches fast."""
    if f.degree <= 0:
        return False
    if f.degree == 1:
        return True
    if f.coeffs[0] == 0:
        return False
    p = f.ring.p
    n = f.degree
    x = Poly([0, 1], f.ring)
    h = x
    for _ in range(n // 2):
        h = h.pow_mod(p, f)
        if poly_gcd(f, h - x).degree != 0:
            return False
    return True


# --------------------------------------------------------------------------
# factorization over Q (returns integer polynomials)
# --------------------------------------------------------------------------

def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: f ≡ g*h mod m, s*g + t*h ≡ 1 mod m, all
    mod-m reduced, g, h monic.  Returns (g', h', s', t') mod m^2."""
    mm = m * m

    def red(p_):
        return Poly([c % mm for c in p_.coeffs], ZZ)

    def mul(a, b):
        return red(a * b)

    e = red(f - g * h)
    q, r = _divmod_monic_mod(mul(s, e), h, mm)
    g1 = red(g + mul(t, e) + mul(q, g))
    h1 = red(h + r)
    b = red(mul(s, g1) + mul(t, h1) - Poly([1], ZZ))
    c, d = _divmod_monic_mod(mul(s, b), h1, mm)
    s1 = red(s - d)
    t1 = red(t - mul(t, b) - mul(c, g1))
    return g1, h1, s1, t1


def _divmod_monic_mod(a, b, m):
    """Divide a by monic b with coefficients taken mod m."""
    rem = [c % m for c in a.coeffs]
    db = b.degree
    dq = len(rem) - 1 - db
    if dq < 0:
        return Poly([], ZZ), Poly(rem, ZZ)
    quo = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + db] % m
        quo[i] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] = (rem[i + j] - c * bc) % m
    return Poly(quo, ZZ), Poly(rem[:db], ZZ)


def _hensel_lift_tree(f, modular_factors, p, target):
    """Lift the monic factorization of monic f mod p to mod p^e >= target.
    Returns (factors mod pe, pe)."""
    if len(modular_factors) == 1:
        pe = p
        while pe < target:
            pe *= pe
        return [Poly([c % pe for c in f.coeffs], ZZ)], pe

    k = len(modular_factors) // 2
    left, right = modular_factors[:k], modular_factors[k:]
    gp = GF(p)

    def prod_mod(fs, ring):
        acc = Poly([1], ring)
        for q in fs:
            acc = acc * q.map_ring(ring)
        return acc

    g = prod_mod(left, gp)
    h = prod_mod(right, gp)
    _, s, t = poly_xgcd(g, h)
    assert (s * g + t * h) % (g * h) == Poly([1], gp) % (g * h)

    gz = Poly([int(c) for c in g.coeffs], ZZ)
    hz = Poly([int(c) for c in h.coeffs], ZZ)
    sz = Poly([int(c) for c in s.coeffs], ZZ)
    tz = Poly([int(c) for c in t.coeffs], ZZ)
    m = p
    while m < target:
        gz, hz, sz, tz = _hensel_step(f, gz, hz, sz, tz, m)
        m *= m
    out = []
    for part, fs in ((gz, left), (hz, right)):
        sub, sub_m = _hensel_lift_tree(part, fs, p, target)
        assert sub_m >= target
        out.extend(Poly([c % m for c in q.coeffs], ZZ) for q in sub)
    return out, m


def _symmetric(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _mignotte_bound(f):
    norm2 = isqrt(sum(c * c for c in f.coeffs)) + 1
    return (2 ** (f.degree + 1)) * norm2


def _factor_squarefree_monic_Z(f, seed):
    """Zassenhaus for monic squarefree f in Z[x], degree >= 1."""
    if f.degree == 1:
        return [f]
    # smallest prime keeping f squarefree (p never divides lc = 1)
    p = 2
    while True:
        if f.degree == Poly(f.coeffs, GF(p)).degree:
            fp = f.map_ring(GF(p))
            if poly_gcd(fp, fp.derivative()).degree == 0:
                break
        p = _next_prime(p)
    modular = [g for g, _ in factor_mod_p(f.map_ring(GF(p)), seed=seed)]
    if len(modular) == 1:
        return [f]
    target = 2 * _mignotte_bound(f) + 1
    lifted, pe = _hensel_lift_tree(f, modular, p, target)

    result = []
    remaining = f
    active = list(range(len(lifted)))
    r = 1
    while 2 * r <= len(active):
        found = True
        while found and 2 * r <= len(active):
            found = False
            for subset in _subsets(active, r):
                cand = Poly([1], ZZ)
                for i in subset:
                    cand = cand * lifted[i]
                    cand = Poly([_symmetric(c, pe) for c in cand.coeffs], ZZ)
                if cand.degree == 0:
                    continue
                q, rem = remaining.divmod(cand)
                if rem.is_zero():
                    result.append(cand)
                    remaining = q
                    active = [i for i in active if i not in subset]
                    found = True
                    break
        r += 1
    if remaining.degree > 0:
        result.append(remaining)
    assert _product(result) == f
    return result


def _subsets(items, r):
    from itertools import combinations
    return combinations(items, r)


def _product(polys):
    acc = Poly([1], ZZ)
    for q in polys:
        acc = acc * q
    return acc


def _next_prime(p):
    q = p + 1
    while not is_prime(q):
        q += 1
    return q


def _squarefree_decomposition_Z(f):
    """Yun's algorithm over Q applied to a primitive integer polynomial:
    yields (primitive squarefree factor, multiplicity)."""
    fq = f.map_ring(QQ)
    d = fq.derivative()
    g = poly_gcd(fq, d)
    out = []
    if g.degree == 0:
        return [(f, 1)]
    w = fq // g
    y = d // g
    i = 1
    z = y - w.derivative()
    while not w.degree == 0:
        h = poly_gcd(w, z)
        if h.degree > 0:
            _, hz = h.to_integer_poly()[1].primitive()
            out.append((hz, i))
        w = w // h
        z = (z // h) - w.derivative()
        i += 1
    return out


def factor_over_Q(f, seed=0):
    """Factor a nonzero integer polynomial into irreducibles over Q.

    Returns a list of primitive integer polynomials with positive leading
    coefficient, repeated per multiplicity, in a deterministic order; their
    product equals f up to the rational content.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    assert f.ring is ZZ
    _, f = f.primitive()
    out = []
    # strip powers of x
    k = 0
    while f.coeffs[0] == 0:
        k += 1
        f = Poly(list(f.coeffs[1:]), ZZ)
    out.extend([Poly([0, 1], ZZ)] * k)
    if f.degree >= 1:
        for sqf, mult in _squarefree_decomposition_Z(f):
            lc = sqf.lc()
            if lc == 1:
                monic_factors = _factor_squarefree_monic_Z(sqf, seed)
            else:
                # monicize: g(y) = lc^(n-1) * f(y/lc)
                n = sqf.degree
                g = Poly([c * lc ** (n - 1 - i) for i, c in enumerate(sqf.coeffs)], ZZ)
                monic_factors = []
                for mf in _factor_squarefree_monic_Z(g, seed):
                    # undo substitution x -> lc*x and take the primitive part
                    back = mf.compose_linear(lc, 0)
                    monic_factors.append(back.primitive()[1])
            out.extend(monic_factors * mult)
    out.sort(key=lambda q: (q.degree, q.coeffs))
    return out


def is_irreducible_over_Q(f):
    if f.degree <= 0:
        return False
    facs = factor_over_Q(f)
    return len(facs) == 1


# --------------------------------------------------------------------------
# resultants and real-root counting
# --------------------------------------------------------------------------

def resultant_Z(a, b):
    """Resultant of two integer polynomials via the Sylvester determinant."""
    m, n = a.degree, b.degree
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return a.coeffs[0] ** n
    if n == 0:
        return b.coeffs[0] ** m
    size = m + n
    rows = []
    ar = list(reversed(a.coeffs))
    br = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([0] * i + ar + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + br + [0] * (size - n - 1 - i))
    return IntMatrix(rows).det()


def sturm_chain(f):
    """Sturm chain of a squarefree rational polynomial."""
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return [c for c in chain if not c.is_zero()]


def _sign_variations(vals):
    signs = [(-1 if v < 0 else 1) for v in vals if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def count_real_roots_above(f, bound):
    """Number of distinct real roots of f with root > bound (rational bound)."""
    fq = f.map_ring(QQ)
    g = fq // poly_gcd(fq, fq.derivative())
    chain = sturm_chain(g)
    at_bound = [c.evaluate(Fraction(bound)) for c in chain]
    at_inf = [c.lc() for c in chain]
    return _sign_variations(at_bound) - _sign_variations(at_inf)
