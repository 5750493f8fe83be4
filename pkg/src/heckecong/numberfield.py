"""Number fields K = Q[x]/(m), exact element arithmetic, automorphisms and
Galois closures.

Elements carry rational coordinates on the power basis 1, theta, ...,
theta^(d-1).  Automorphisms are stored as the image of theta plus the full
linear map they induce, so applying one is a matrix-vector product.

Roots of m inside K (hence Aut(K/Q)) are found by Trager's norm/resultant
method.  The Galois closure is built by adjoining roots of m one at a time
with a primitive-element search over theta + c*beta, keeping track of which
roots built the primitive element; the Galois group then falls out by
evaluating the closure polynomial on integer combinations of roots, with no
further factoring.
"""

from fractions import Fraction

from .errors import DegreeBoundExceeded, NotIrreducible
from .matrix import kernel_fraction, rref_fraction, solve_fraction
from .poly import (
    QQ, ZZ, Poly, factor_over_Q, gcd_over_Z, poly_gcd, resultant_Z,
)


class NumberField:
    """K = Q[x]/(m) for a monic irreducible integer polynomial m."""

    def __init__(self, minpoly, check=True):
        if minpoly.ring is QQ:
            den, minpoly = minpoly.to_integer_poly()
            assert den == 1, "minimal polynomial must be integral"
        assert minpoly.ring is ZZ and minpoly.is_monic()
        if check and minpoly.degree > 1:
            if len(factor_over_Q(minpoly)) != 1:
                raise NotIrreducible("defining polynomial factors over Q")
        self.minpoly = minpoly
        self.degree = minpoly.degree
        d = self.degree
        # reduction rows: coordinates of theta^k for k = d .. 2d-2 (integer)
        rows = []
        if d > 0:
            cur = [-c for c in minpoly.coeffs[:d]]
            rows.append(cur[:])
            for _ in range(d - 2):
                nxt = [0] + cur[:d - 1]
                top = cur[d - 1]
                if top:
                    for i in range(d):
                        nxt[i] -= top * minpoly.coeffs[i]
                rows.append(nxt[:])
                cur = nxt
        self._red = rows
        self._trace_powers = None

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.minpoly == self.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return "NumberField(%s)" % (list(self.minpoly.coeffs),)

    # -- element constructors -------------------------------------------------

    def element(self, coords):
        cs = [Fraction(c) for c in coords]
        assert len(cs) <= self.degree
        cs += [Fraction(0)] * (self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def theta(self):
        if self.degree == 1:
            return self.element([-self.minpoly.coeffs[0]])
        return self.element([0, 1])

    def from_rational(self, q):
        return self.element([q])

    # -- arithmetic core --------------------------------------------------------

    def _reduce(self, prod):
        """Reduce a coefficient list of length <= 2d-1 modulo the minpoly."""
        d = self.degree
        out = list(prod[:d]) + [Fraction(0)] * (d - len(prod[:d]))
        for k in range(d, len(prod)):
            c = prod[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return out

    def trace_of_power(self, k):
        """Trace of theta^k down to Q (Newton power sums of the minpoly)."""
        if self._trace_powers is None:
            d = self.degree
            m = self.minpoly.coeffs
            s = [Fraction(d)]
            for i in range(1, d):
                acc = -i * Fraction(m[d - i])
                for j in range(1, i):
                    acc -= m[d - j] * s[i - j]
                s.append(acc)
            self._trace_powers = s
        return self._trace_powers[k]


class FieldElement:
    """Element of a NumberField with Fraction coordinates on the power basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and other.field == self.field
                and other.coords == self.coords)

    def __hash__(self):
        return hash((self.field.minpoly.coeffs, self.coords))

    def __repr__(self):
        return "FieldElement(%s)" % (list(self.coords),)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            assert other.field == self.field, "elements of different fields"
            return other
        return self.field.from_rational(Fraction(other))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            q = Fraction(other)
            return FieldElement(self.field, tuple(a * q for a in self.coords))
        assert other.field == self.field, "elements of different fields"
        a, b = self.coords, other.coords
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return FieldElement(self.field, tuple(self.field._reduce(prod)))

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def inverse(self):
        assert not self.is_zero(), "division by zero"
        from .poly import poly_xgcd
        ap = Poly(list(self.coords), QQ)
        mp = self.field.minpoly.map_ring(QQ)
        g, s, _ = poly_xgcd(ap, mp)
        assert g.degree == 0
        inv = s * (1 / Fraction(g.coeffs[0]))
        return self.field.element(list(inv.coeffs))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def trace(self):
        """Trace from K down to Q."""
        return sum(c * self.field.trace_of_power(k) for k, c in enumerate(self.coords))

    def minimal_polynomial(self):
        """Monic minimal polynomial over Q (a Poly over QQ)."""
        d = self.field.degree
        rows = []
        pw = self.field.one()
        for _ in range(d + 1):
            rows.append(list(pw.coords))
            pw = pw * self
        for deg in range(1, d + 1):
            cols = [[rows[i][j] for i in range(deg)] for j in range(d)]
            rhs = [-rows[deg][j] for j in range(d)]
            sol = solve_fraction(cols, rhs)
            if sol is not None:
                return Poly(list(sol) + [1], QQ)
        raise AssertionError("unreachable")

    def is_algebraic_integer(self):
        mp = self.minimal_polynomial()
        return all(c.denominator == 1 for c in mp.coeffs)


def element_minpoly(a):
    """Monic irreducible rational polynomial annihilating a."""
    return a.minimal_polynomial()


class Automorphism:
    """Field automorphism stored as the image of theta plus its matrix."""

    __slots__ = ("field", "image", "_matrix")

    def __init__(self, field, image):
        assert image.field == field
        self.field = field
        self.image = image
        # rows: coordinates of sigma(theta^i)
        rows = []
        pw = field.one()
        for _ in range(field.degree):
            rows.append(list(pw.coords))
            pw = pw * image
        self._matrix = rows

    def apply(self, a):
        assert a.field == self.field
        d = self.field.degree
        out = [Fraction(0)] * d
        for i, c in enumerate(a.coords):
            if c:
                row = self._matrix[i]
                for j in range(d):
                    out[j] += c * row[j]
        return FieldElement(self.field, tuple(out))

    def __call__(self, a):
        return self.apply(a)

    def is_identity(self):
        return self.image == self.field.theta()

    def compose(self, other):
        """self after other: (self.compose(other))(x) = self(other(x))."""
        assert other.field == self.field
        return Automorphism(self.field, self.apply(other.image))

    def inverse(self):
        d = self.field.degree
        aug = [self._matrix[i] + [Fraction(1 if j == i else 0) for j in range(d)]
               for i in range(d)]
        red, piv = rref_fraction(aug)
        assert piv == list(range(d)), "automorphism matrix must be invertible"
        inv_rows = [row[d:] for row in red]
        # image of theta under the inverse: row of theta (index 1) unless d == 1
        if d == 1:
            return Automorphism(self.field, self.field.theta())
        img = FieldElement(self.field, tuple(inv_rows[1]))
        return Automorphism(self.field, img)

    def __eq__(self, other):
        return (isinstance(other, Automorphism) and other.field == self.field
                and other.image == self.image)

    def __hash__(self):
        return hash((self.field.minpoly.coeffs, self.image.coords))

    def __repr__(self):
        return "Automorphism(theta -> %s)" % (list(self.image.coords),)


# --- polynomials with FieldElement coefficients (internal helpers) ---------

def _knorm(cs):
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _kmul(field, a, b):
    if not a or not b:
        return []
    out = [field.zero() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _knorm(out)


def _ksub(field, a, b):
    n = max(len(a), len(b))
    z = field.zero()
    return _knorm([(a[i] if i < len(a) else z) - (b[i] if i < len(b) else z)
                   for i in range(n)])


def _kdivmod(field, a, b):
    assert b
    inv = b[-1].inverse()
    rem = list(a)
    dq = len(rem) - len(b)
    if dq < 0:
        return [], rem
    quo = [field.zero()] * (dq + 1)
    for i in range(dq, -1, -1):
        c = rem[i + len(b) - 1] * inv
        quo[i] = c
        if not c.is_zero():
            for j, bc in enumerate(b):
                rem[i + j] = rem[i + j] - c * bc
    return quo, _knorm(rem)


def _kmonic(field, a):
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _kgcd(field, a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _kdivmod(field, a, b)
        a, b = b, r
    return _kmonic(field, a)


def _lift_zzpoly(field, f):
    """Integer/rational polynomial as a K[x] coefficient list."""
    return _knorm([field.from_rational(Fraction(c)) for c in f.coeffs])


def _compose_shift(field, g, s):
    """g(x + s*theta) as a K[x] coefficient list (g over ZZ, s integer)."""
    shift = [field.theta() * s, field.one()]
    acc = []
    for c in reversed(g.coeffs):
        acc = _kmul(field, acc, shift)
        if not acc:
            acc = [field.from_rational(Fraction(c))]
        else:
            acc[0] = acc[0] + Fraction(c)
        acc = _knorm(acc)
    return acc


def _interp_resultant(m, f, s):
    """N_s(x) = Res_y(m(y), f(x - s*y)) by evaluation/interpolation."""
    deg = m.degree * f.degree
    pts = []
    t = 0
    while len(pts) < deg + 1:
        pts.append(t)
        t = -t if t > 0 else -t + 1
    values = []
    for t in pts:
        # f(t - s*y) as a poly in y
        fy = f.compose_linear(-s, t)
        values.append(resultant_Z(m, fy))
    # Lagrange interpolation, exact
    coeffs = [Fraction(0)] * (deg + 1)
    for i, ti in enumerate(pts):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, tj in enumerate(pts):
            if i == j:
                continue
            num = [
                (num[k - 1] if k else Fraction(0)) - tj * (num[k] if k < len(num) else Fraction(0))
                for k in range(len(num) + 1)
            ]
            den *= ti - tj
        w = Fraction(values[i]) / den
        for k in range(len(num)):
            coeffs[k] += w * num[k]
    assert all(c.denominator == 1 for c in coeffs)
    return Poly([int(c) for c in coeffs], ZZ)


def roots_in_own_field(K, f):
    """All roots in K of a squarefree integer polynomial f (Trager)."""
    if K.degree == 1:
        roots = []
        for g in factor_over_Q(f):
            if g.degree == 1:
                roots.append(K.from_rational(Fraction(-g.coeffs[0], g.coeffs[1])))
        return sorted(roots, key=lambda r: r.coords)
    s = 0
    while True:
        n = _interp_resultant(K.minpoly, f, s)
        nq = n.map_ring(QQ)
        if poly_gcd(nq, nq.derivative()).degree == 0:
            break
        s = -s if s > 0 else -s + 1
    roots = []
    fk = _lift_zzpoly(K, f)
    for g in factor_over_Q(n):
        h = _kgcd(K, fk, _compose_shift(K, g, s))
        if len(h) == 2:  # linear: x + h0
            roots.append(-h[0])
    return sorted(roots, key=lambda r: r.coords)


def automorphisms(K):
    """All automorphisms of K/Q: one per root of the minpoly inside K.

    The identity comes first; the rest are sorted by image coordinates.
    """
    if K.degree == 1:
        return [Automorphism(K, K.theta())]
    roots = roots_in_own_field(K, K.minpoly)
    theta = K.theta()
    auts = [Automorphism(K, theta)]
    for r in roots:
        if r != theta:
            auts.append(Automorphism(K, r))
    assert K.degree % len(auts) == 0 or len(auts) == 1
    return auts


def is_galois(K):
    return len(automorphisms(K)) == K.degree


class GaloisClosureData:
    """Closure field, embedding of K, all roots of m, and the full group."""

    def __init__(self, base, closure, theta_image, roots, group):
        self.base = base
        self.closure = closure
        self.theta_image = theta_image
        self.roots = roots
        self.group = group
        self._embed_rows = None

    def embed(self, a):
        """Image in the closure of an element of the base field."""
        assert a.field == self.base
        if self._embed_rows is None:
            rows = []
            pw = self.closure.one()
            for _ in range(self.base.degree):
                rows.append(pw.coords)
                pw = pw * self.theta_image
            self._embed_rows = rows
        out = [Fraction(0)] * self.closure.degree
        for c, row in zip(a.coords, self._embed_rows):
            if c:
                for j, v in enumerate(row):
                    out[j] += c * v
        return FieldElement(self.closure, tuple(out))


def _adjoin_root(K, h_coeffs, closure_cap):
    """Adjoin to K a root of the irreducible K[x]-polynomial h (monic, given
    as a FieldElement coefficient list).  Returns (L, theta_in_L, beta_in_L)
    where L is a fresh NumberField generated by theta + c*beta.
    """
    d = K.degree
    e = len(h_coeffs) - 1
    n = d * e
    if n > closure_cap:
        raise DegreeBoundExceeded("closure degree %d exceeds cap %d" % (n, closure_cap))

    # multiplication tables in the basis theta^i * beta^j of L = K[y]/h
    # an element is a list of e FieldElements of K (coefficients of beta^j)
    def lmul(a, b):
        prod = [K.zero() for _ in range(2 * e - 1)]
        for i, x in enumerate(a):
            if not x.is_zero():
                for j, y in enumerate(b):
                    prod[i + j] = prod[i + j] + x * y
        # reduce beta powers via h (monic over K)
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if not c.is_zero():
                for j in range(e):
                    prod[k - e + j] = prod[k - e + j] - c * h_coeffs[j]
                prod[k] = K.zero()
        return prod[:e]

    def lvec(a):
        out = []
        for x in a:
            out.extend(x.coords)
        return out

    theta_l = [K.theta()] + [K.zero()] * (e - 1)
    beta_l = [K.zero(), K.one()] + [K.zero()] * (e - 2)

    c = 1
    while True:
        gamma = [theta_l[j] + beta_l[j] * c for j in range(e)]
        rows = []
        pw = [K.one()] + [K.zero()] * (e - 1)
        for _ in range(n + 1):
            rows.append(lvec(pw))
            pw = lmul(pw, gamma)
        red, piv = rref_fraction([rows[i] for i in range(n)])
        if len(piv) == n:
            # gamma is primitive; minpoly from the dependency of gamma^n
            cols = [[rows[i][j] for i in range(n)] for j in range(n)]
            sol = solve_fraction(cols, [-x for x in rows[n]])
            assert sol is not None
            mp = Poly(list(sol) + [1], QQ)
            den, mz = mp.to_integer_poly()
            assert den == 1, "primitive element of integral generators must be integral"
            L = NumberField(mz, check=False)
            # express theta and beta in powers of gamma
            t_sol = solve_fraction(cols, lvec(theta_l))
            b_sol = solve_fraction(cols, lvec(beta_l))
            assert t_sol is not None and b_sol is not None
            pow_gamma = []
            pw = L.one()
            for _ in range(n):
                pow_gamma.append(pw)
                pw = pw * L.theta()
            theta_img = L.zero()
            beta_img = L.zero()
            for k in range(n):
                theta_img = theta_img + pow_gamma[k] * t_sol[k]
                beta_img = beta_img + pow_gamma[k] * b_sol[k]
            return L, theta_img, beta_img, c
        c = -c if c > 0 else -c + 1


def galois_closure(K, field_cap=6, closure_cap=24):
    """Galois closure of K with its full automorphism group.

    Roots of the defining polynomial are adjoined until it splits; the
    primitive element is tracked as an integer combination of roots, and the
    group is read off by testing which root combinations satisfy the closure
    polynomial.
    """
    if K.degree > field_cap:
        raise DegreeBoundExceeded("field degree %d exceeds cap %d" % (K.degree, field_cap))
    m = K.minpoly

    if K.degree == 1:
        ident = Automorphism(K, K.theta())
        return GaloisClosureData(K, K, K.theta(), [K.theta()], [ident])

    cur = K
    theta_img = K.theta()
    roots = [K.theta()]
    combo = [(1, 0)]  # gamma = sum of c * roots[idx]

    while True:
        # peel off known linear factors, then look for the residual
        residual = _lift_zzpoly(cur, m)
        for r in roots:
            residual, rem = _kdivmod(cur, residual, [-r, cur.one()])
            assert not rem, "tracked root stopped being a root"
        # collect any further linear factors without extending
        progress = True
        while progress and len(residual) > 1:
            progress = False
            if len(residual) == 2:
                roots.append(-residual[0])
                residual = [cur.one()]
                break
            for r in roots_of_kpoly(cur, residual):
                residual, rem = _kdivmod(cur, residual, [-r, cur.one()])
                assert not rem
                roots.append(r)
                progress = True
        if len(residual) <= 1:
            break
        # extend by a root of the first irreducible nonlinear factor
        h = first_irreducible_factor(cur, residual)
        new_field, t_img, b_img, c = _adjoin_root(cur, h, closure_cap)
        # transport all tracked data into the new field
        def into_new(elt):
            out = new_field.zero()
            pw = new_field.one()
            for coord in elt.coords:
                out = out + pw * coord
                pw = pw * t_img
            return out

        roots = [into_new(r) for r in roots]
        roots.append(b_img)
        combo.append((c, len(roots) - 1))
        theta_img = roots[0]
        cur = new_field

    closure = cur
    assert len(roots) == K.degree
    for r in roots:
        acc = closure.zero()
        pw = closure.one()
        for coeff in m.coeffs:
            acc = acc + pw * coeff
            pw = pw * r
        assert acc.is_zero(), "claimed root fails the minimal polynomial"

    group = _group_from_combos(closure, roots, combo)
    assert len(group) == closure.degree, "closure is not Galois (bug)"
    return GaloisClosureData(K, closure, theta_img, roots, group)


def roots_of_kpoly(K, coeffs):
    """Roots lying in K of a monic K[x] polynomial that divides an integer
    polynomial; found via gcds with minimal polynomials of -constant shifts.

    Used only on residual factors of a ZZ polynomial, so a root's minimal
    polynomial over Q divides that integer polynomial; we exploit nothing
    beyond Trager on the norm.
    """
    # generic fallback: Trager via the norm of the K[x] polynomial is
    # overkill here; residuals at desk scale are degree <= 3, where either
    # the linear case above or a direct quadratic solve settles it.
    if len(coeffs) - 1 == 2:
        # x^2 + bx + c: roots exist iff the discriminant is a square in K
        b, c = coeffs[1], coeffs[0]
        disc = b * b - c * 4
        sq = _sqrt_in_field(K, disc)
        if sq is None:
            return []
        half = Fraction(1, 2)
        return [(-b + sq) * half, (-b - sq) * half]
    return _roots_via_trager(K, coeffs)


def _sqrt_in_field(K, a):
    """A square root of a in K, or None."""
    if a.is_zero():
        return K.zero()
    # solve minpoly of a: s^2 = a means min poly of s divides x^2 - a;
    # search via Trager on the defining polynomial of s over Q
    mp = a.minimal_polynomial()
    # the minimal polynomial of any square root of a divides mp(x^2)
    lifted = _compose_x2(mp)
    den, lz = lifted.to_integer_poly()
    roots = roots_in_own_field(K, lz.primitive()[1])
    for r in roots:
        if r * r == a:
            return r
    return None


def _compose_x2(mp):
    """mp(x^2) over QQ."""
    out = [Fraction(0)] * (2 * mp.degree + 1)
    for i, c in enumerate(mp.coeffs):
        out[2 * i] = Fraction(c)
    return Poly(out, QQ)


def _roots_via_trager(K, coeffs):
    """Roots in K of a monic K[x] polynomial via resultants (rarely needed)."""
    # Norm to Q[x] by evaluating at integer points is messy for K[x] inputs;
    # at desk scale every call site has degree <= 2, handled above.
    raise NotImplementedError("root finding for K[x] degree > 2 residuals")


def first_irreducible_factor(K, coeffs):
    """First irreducible nonlinear factor (canonical order) of a monic K[x]
    polynomial with no roots in K; degree <= 2 residuals are irreducible."""
    if len(coeffs) - 1 <= 2:
        return list(coeffs)
    raise NotImplementedError("factor search for K[x] degree > 2 residuals")


def _group_from_combos(closure, roots, combo):
    """All automorphisms of a Galois closure: candidates send the primitive
    combination sum c*r_idx to the same combination of other roots."""
    from itertools import permutations

    n = closure.degree
    m = closure.minpoly
    idxs = [idx for _, idx in combo]
    cs = [c for c, _ in combo]
    group = []
    seen = set()
    for perm in permutations(range(len(roots)), len(idxs)):
        cand = closure.zero()
        for c, pi in zip(cs, perm):
            cand = cand + roots[pi] * c
        if cand.coords in seen:
            continue
        # test m_closure(cand) == 0
        acc = closure.zero()
        pw = closure.one()
        for coeff in m.coeffs:
            acc = acc + pw * coeff
            pw = pw * cand
        if acc.is_zero():
            seen.add(cand.coords)
            group.append(Automorphism(closure, cand))
    group.sort(key=lambda s: (not s.is_identity(), s.image.coords))
    return group
