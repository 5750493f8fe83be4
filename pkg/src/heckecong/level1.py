"""Level-1 cusp forms: echelon bases, Hecke operators, eigenforms, and the
Hecke ring as an exact lattice in a product of number fields.

Everything is integer q-expansion algebra built from the Eisenstein series
E4 = 1 + 240 sum sigma_3(n) q^n and E6 = 1 - 504 sum sigma_5(n) q^n; the
discriminant form is (E4^3 - E6^2)/1728.  No floating point, no external
tables: weight-by-weight data is recomputed from scratch.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import GeneratorFailure, InsufficientPrecision, WeightUnsupported
from .matrix import IntMatrix, hnf, rref_fraction, snf
from .numberfield import NumberField
from .orders import Order, index, maximal_order, order_generated_by
from .poly import QQ, ZZ, Poly, count_real_roots_above, factor_over_Q


def dim_cusp_forms(k):
    """Classical dimension of the level-1 cusp space for even k."""
    if k % 2 or k < 0:
        return 0
    if k < 12:
        return 0
    m = k // 12
    if k % 12 == 2:
        return m - 1
    return m


def sturm_bound(k):
    """Number of initial coefficients that pin down a level-1 form of weight k."""
    if k % 2 or k < 12:
        raise WeightUnsupported("weight must be even and at least 12")
    return k // 12


def default_precision(k):
    return max(10, k // 12 + 2)


# --- integer power series (lists indexed by q-power) -----------------------

def _series_mul(a, b, prec):
    out = [0] * (prec + 1)
    for i, x in enumerate(a):
        if x == 0 or i > prec:
            continue
        top = min(prec - i, len(b) - 1)
        for j in range(top + 1):
            if b[j]:
                out[i + j] += x * b[j]
    return out


def _series_pow(a, e, prec):
    out = [1] + [0] * prec
    base = list(a[:prec + 1])
    while e:
        if e & 1:
            out = _series_mul(out, base, prec)
        base = _series_mul(base, base, prec)
        e >>= 1
    return out


def _divisor_power_sums(r, prec):
    """sigma_r(n) for n = 0..prec (index 0 unused)."""
    out = [0] * (prec + 1)
    for d in range(1, prec + 1):
        dr = d ** r
        for m in range(d, prec + 1, d):
            out[m] += dr
    return out


def eisenstein(weight, prec):
    """Normalized E4 or E6 to the given precision."""
    if weight == 4:
        s = _divisor_power_sums(3, prec)
        return [1] + [240 * s[n] for n in range(1, prec + 1)]
    if weight == 6:
        s = _divisor_power_sums(5, prec)
        return [1] + [-504 * s[n] for n in range(1, prec + 1)]
    raise ValueError("only E4 and E6 are generators here")


def delta_series(prec):
    """The weight-12 discriminant cusp form (E4^3 - E6^2)/1728."""
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    num = [a - b for a, b in zip(_series_pow(e4, 3, prec), _series_pow(e6, 2, prec))]
    assert all(c % 1728 == 0 for c in num)
    return [c // 1728 for c in num]


@dataclass(frozen=True)
class QExpansion:
    """Integer q-expansion with explicit weight and precision."""
    weight: int
    precision: int
    coeffs: tuple

    def coefficient(self, n):
        if n > self.precision:
            raise InsufficientPrecision(
                "coefficient %d beyond precision %d" % (n, self.precision))
        return self.coeffs[n]


def miller_basis(k, prec):
    """Echelon basis g_1..g_d of the weight-k cusp space with integer
    coefficients and a_i(g_j) = delta_ij for i, j <= d."""
    if k % 2 or k < 12:
        raise WeightUnsupported("weight must be even and at least 12")
    d = dim_cusp_forms(k)
    if prec < d + 2:
        raise InsufficientPrecision("need precision >= dim + 2")
    if d == 0:
        return []
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    monomials = []
    for b in range(k // 6 + 1):
        rem = k - 6 * b
        if rem < 0 or rem % 4:
            continue
        a = rem // 4
        monomials.append(_series_mul(_series_pow(e4, a, prec),
                                     _series_pow(e6, b, prec), prec))
    rows, piv = rref_fraction(monomials)
    assert piv[:d + 1] == list(range(d + 1)), "echelon pivots must be 0..dim"
    basis = []
    for r, c in enumerate(piv):
        if c == 0:
            continue  # the Eisenstein direction
        if c > d:
            break
        coeffs = rows[r]
        assert all(x.denominator == 1 for x in coeffs), "Miller basis is integral"
        basis.append(QExpansion(k, prec, tuple(int(x) for x in coeffs)))
    assert len(basis) == d
    return basis


def hecke_matrix(k, n, basis=None, prec=None):
    """Matrix of T_n on the Miller basis: entry (i, j) is a_i(T_n g_j)."""
    d = dim_cusp_forms(k)
    if d == 0:
        return IntMatrix([])
    if basis is None:
        prec = prec if prec is not None else n * d
        basis = miller_basis(k, max(prec, d + 2))
    if n * d > basis[0].precision:
        raise InsufficientPrecision(
            "T_%d needs %d coefficients, basis has %d" % (n, n * d, basis[0].precision))
    rows = []
    for i in range(1, d + 1):
        row = []
        for g in basis:
            total = 0
            for e in range(1, min(i, n) + 1):
                if i % e == 0 and n % e == 0:
                    total += e ** (k - 1) * g.coefficient(i * n // (e * e))
            row.append(total)
        rows.append(row)
    return IntMatrix(rows)


def charpoly(m):
    """Characteristic polynomial det(xI - M) of a small integer matrix."""
    from itertools import permutations

    n = m.rows
    if n == 0:
        return Poly([1], ZZ)
    x = Poly([0, 1], ZZ)
    entries = [[x - Poly([m.data[i][j]], ZZ) if i == j else Poly([-m.data[i][j]], ZZ)
                for j in range(n)] for i in range(n)]
    total = Poly([], ZZ)

    def sign(perm):
        s = 1
        seen = [False] * len(perm)
        for i in range(len(perm)):
            if seen[i]:
                continue
            l = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                l += 1
            if l % 2 == 0:
                s = -s
        return s

    for perm in permutations(range(n)):
        term = Poly([sign(perm)], ZZ)
        for i in range(n):
            term = term * entries[i][perm[i]]
        total = total + term
    return total


@dataclass
class Eigenform:
    """Normalized eigenform: weight, coefficient field, exact a_1..a_B."""
    weight: int
    field: NumberField
    coeffs: tuple  # FieldElements, index 0 <-> a_1
    orbit: int

    def a(self, n):
        if n < 1 or n > len(self.coeffs):
            raise InsufficientPrecision("a_%d beyond stored precision" % n)
        return self.coeffs[n - 1]

    @property
    def precision(self):
        return len(self.coeffs)


def _kernel_over_field(rows, field):
    """One kernel vector of a matrix with FieldElement entries (dim of the
    kernel must be exactly 1)."""
    n = len(rows)
    a = [row[:] for row in rows]
    ncols = len(a[0])
    piv_cols = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, n) if not a[i][c].is_zero()), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in piv_cols]
    assert len(free) == 1, "eigenvalue must be geometrically simple"
    fc = free[0]
    v = [field.zero()] * ncols
    v[fc] = field.one()
    for rr, c in enumerate(piv_cols):
        v[c] = -a[rr][fc]
    return v


def _matrix_in_powers(target, powers):
    """Express an integer matrix as a Q-combination of the given matrices,
    or None."""
    n = len(powers[0].data)
    cols = [[Fraction(p.data[i][j]) for p in powers]
            for i in range(n) for j in range(n)]
    rhs = [Fraction(target.data[i][j]) for i in range(n) for j in range(n)]
    from .matrix import solve_fraction
    return solve_fraction(cols, rhs)


def eigenforms(k, prec=None, weight_cap=60):
    """Galois-orbit representatives of normalized eigenforms of weight k.

    One eigenform per irreducible factor of the characteristic polynomial of
    the generating operator (T_2, with a verified fallback to T_2 + T_3).
    """
    if k % 2 or k < 12:
        raise WeightUnsupported("weight must be even and at least 12")
    if k > weight_cap:
        raise WeightUnsupported("weight %d above cap %d" % (k, weight_cap))
    d = dim_cusp_forms(k)
    if d == 0:
        return []
    B = prec if prec is not None else default_precision(k)
    work_prec = max(B, B * d, d + 2)
    basis = miller_basis(k, work_prec)
    t_mats = {n: hecke_matrix(k, n, basis=basis) for n in range(1, B + 1)}

    def generates(g):
        powers = [IntMatrix.identity(d)]
        for _ in range(d - 1):
            powers.append(powers[-1].mul(g))
        cp = charpoly(g)
        cpq = cp.map_ring(QQ)
        from .poly import poly_gcd
        if poly_gcd(cpq, cpq.derivative()).degree != 0:
            return False
        return all(_matrix_in_powers(t_mats[n], powers) is not None
                   for n in range(2, B + 1))

    gen = t_mats[2]
    if not generates(gen):
        gen = IntMatrix([[t_mats[2].data[i][j] + t_mats[3].data[i][j]
                          for j in range(d)] for i in range(d)])
        if not generates(gen):
            raise GeneratorFailure("neither T_2 nor T_2+T_3 generates")

    factors = factor_over_Q(charpoly(gen))
    forms = []
    for orbit, h in enumerate(factors):
        K = NumberField(h, check=False)
        lam = K.theta()
        rows = [[K.from_rational(gen.data[i][j]) - (lam if i == j else K.zero())
                 for j in range(d)] for i in range(d)]
        v = _kernel_over_field(rows, K)
        # coefficients of the eigenform; Miller duality makes a_1 = v_1
        coeffs = []
        for n in range(1, B + 1):
            an = K.zero()
            for j in range(d):
                c = basis[j].coefficient(n)
                if c:
                    an = an + v[j] * c
            coeffs.append(an)
        a1 = coeffs[0]
        assert not a1.is_zero(), "eigenvector with vanishing first coefficient"
        inv = a1.inverse()
        v = [x * inv for x in v]
        coeffs = [x * inv for x in coeffs]
        # simultaneous-eigenvector check against every stored T_n
        for n in range(1, B + 1):
            tv = []
            for i in range(d):
                acc = K.zero()
                for j in range(d):
                    c = t_mats[n].data[i][j]
                    if c:
                        acc = acc + v[j] * c
                tv.append(acc)
            expect = [coeffs[n - 1] * v[i] for i in range(d)]
            assert tv == expect, "T_%d does not act by a_%d" % (n, n)
        for a in coeffs:
            assert a.is_algebraic_integer(), "eigenform coefficient not integral"
        forms.append(Eigenform(k, K, tuple(coeffs), orbit))
    return forms


def verify_multiplicativity(form):
    """a_{mn} = a_m a_n for coprime m, n and the prime-power recursion."""
    B = form.precision
    k = form.weight
    for m in range(2, B + 1):
        for n in range(2, B // m + 1):
            if gcd(m, n) == 1:
                assert form.a(m * n) == form.a(m) * form.a(n)
    p = 2
    while p * p <= B:
        r = 1
        while p ** (r + 1) <= B:
            lhs = form.a(p ** (r + 1))
            rhs = form.a(p) * form.a(p ** r) - form.a(p ** (r - 1)) * p ** (k - 1)
            assert lhs == rhs
            r += 1
        p += 1 if p == 2 else 2
    return True


def satisfies_coefficient_bound(form, p):
    """Exact two-sided Deligne bound |a_p| <= 2 p^((k-1)/2) in every real
    embedding, checked through squares (no floating point)."""
    g = form.a(p).minimal_polynomial()
    den, gz = g.to_integer_poly()
    # G(x^2) = g(x) * g(-x): positive real roots of G are squares of real
    # roots of g, so the bound holds iff G has no root above 4 p^(k-1)
    gneg = Poly([c if i % 2 == 0 else -c for i, c in enumerate(gz.coeffs)], ZZ)
    prod = gz * gneg
    even = [prod.coeffs[i] for i in range(0, len(prod.coeffs), 2)]
    assert all(prod.coeffs[i] == 0 for i in range(1, len(prod.coeffs), 2))
    big = Poly(even, ZZ)
    return count_real_roots_above(big, 4 * p ** (form.weight - 1)) == 0


# --- the Hecke ring as a lattice -------------------------------------------

@dataclass
class HeckeLattice:
    weight: int
    forms: list
    fields: list
    orders: list        # maximal orders O_i
    coeff_orders: list  # R_i
    basis: list         # lattice basis: tuples of per-orbit FieldElements
    precision: int


def _concat_coords(fields, vec):
    out = []
    for f, x in zip(fields, vec):
        out.extend(x.coords)
    return out


def _lattice_from_vectors(fields, vectors):
    """Canonical basis of the Z-span of tuples of field elements."""
    n = sum(f.degree for f in fields)
    den = 1
    for v in vectors:
        for c in _concat_coords(fields, v):
            den = lcm(den, c.denominator)
    num = [[int(c * den) for c in _concat_coords(fields, v)] for v in vectors]
    cols = IntMatrix([[row[i] for row in num] for i in range(n)])
    h, _ = hnf(cols)
    rows = []
    for j in range(h.cols):
        col = [h.data[i][j] for i in range(h.rows)]
        if any(col):
            rows.append(col)
    g = den
    for r in rows:
        for c in r:
            g = gcd(g, c)
    rows = [[c // g for c in r] for r in rows]
    den //= g
    out = []
    for r in rows:
        vec = []
        pos = 0
        for f in fields:
            vec.append(f.element([Fraction(c, den) for c in r[pos:pos + f.degree]]))
            pos += f.degree
        out.append(tuple(vec))
    return out


def _vector_in_lattice(fields, basis, vec):
    from .matrix import solve_fraction
    cols_data = [_concat_coords(fields, b) for b in basis]
    n = len(cols_data[0])
    cols = [[cols_data[b][i] for b in range(len(basis))] for i in range(n)]
    sol = solve_fraction(cols, _concat_coords(fields, vec))
    return sol is not None and all(c.denominator == 1 for c in sol)


def hecke_lattice(k, prec=None):
    """The ring generated by the Hecke operators, as the lattice spanned by
    the coefficient tuples (a_n(f_1), ..., a_n(f_s)) for n = 1..B."""
    B = prec if prec is not None else default_precision(k)
    if B < sturm_bound(k):
        raise InsufficientPrecision("precision below the determinacy bound")
    forms = eigenforms(k, prec=B)
    fields = [f.field for f in forms]
    vectors = [tuple(f.a(n) for f in forms) for n in range(1, B + 1)]
    if not forms:
        return HeckeLattice(k, [], [], [], [], [], B)
    basis = _lattice_from_vectors(fields, vectors)
    n = sum(f.degree for f in fields)
    if len(basis) != n:
        raise InsufficientPrecision("Hecke lattice rank %d < %d" % (len(basis), n))
    # ring check: pairwise products of basis vectors stay inside
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            prod = tuple(x * y for x, y in zip(basis[i], basis[j]))
            if not _vector_in_lattice(fields, basis, prod):
                raise InsufficientPrecision(
                    "span of T_1..T_%d is not multiplicatively closed" % B)
    orders = [maximal_order(K) for K in fields]
    coeff_orders = [order_generated_by(f.field, list(f.coeffs)) for f in forms]
    return HeckeLattice(k, forms, fields, orders, coeff_orders, basis, B)


def _block_lattice(fields, orders):
    """Basis of the direct sum of the given orders, as lattice vectors."""
    out = []
    for i, o in enumerate(orders):
        for b in o.basis:
            vec = [f.zero() for f in fields]
            vec[i] = b
            out.append(tuple(vec))
    return out


def _lattice_index(fields, larger, smaller):
    from .matrix import solve_fraction
    cols_data = [_concat_coords(fields, b) for b in larger]
    n = len(cols_data[0])
    cols = [[cols_data[b][i] for b in range(len(larger))] for i in range(n)]
    change = []
    for v in smaller:
        sol = solve_fraction(cols, _concat_coords(fields, v))
        assert sol is not None and all(c.denominator == 1 for c in sol), \
            "not a sublattice"
        change.append([int(c) for c in sol])
    det = IntMatrix(change).det()
    assert det != 0
    return abs(det)


def _change_of_basis(fields, larger, smaller):
    from .matrix import solve_fraction
    cols_data = [_concat_coords(fields, b) for b in larger]
    n = len(cols_data[0])
    cols = [[cols_data[b][i] for b in range(len(larger))] for i in range(n)]
    rows = []
    for v in smaller:
        sol = solve_fraction(cols, _concat_coords(fields, v))
        assert sol is not None and all(c.denominator == 1 for c in sol)
        rows.append([int(c) for c in sol])
    return IntMatrix(rows)


def index_in_normalization(lattice):
    """[ (+) O_i : T ], cross-checked against the product formula."""
    if not lattice.forms:
        return 1
    fields = lattice.fields
    big = _block_lattice(fields, lattice.orders)
    idx = _lattice_index(fields, big, lattice.basis)
    rs = _block_lattice(fields, lattice.coeff_orders)
    cong = _lattice_index(fields, rs, lattice.basis)
    per_orbit = 1
    for o, r in zip(lattice.orders, lattice.coeff_orders):
        per_orbit *= index(o, r)
    assert idx == cong * per_orbit, "index factorization mismatch"
    return idx


@dataclass
class DiscReport:
    weight: int
    disc_hecke: int
    congruence_module_order: int
    orbit_indices: list
    orbit_discs: list
    verified: bool

    def rhs(self):
        total = self.congruence_module_order ** 2
        for i, dd in zip(self.orbit_indices, self.orbit_discs):
            total *= i * i * dd
        return total


def disc_decomposition(k, prec=None):
    """All four quantities of the discriminant factorization, each computed
    independently, with the exact equality flag."""
    lat = hecke_lattice(k, prec=prec)
    if not lat.forms:
        return DiscReport(k, 1, 1, [], [], True)
    fields = lat.fields

    # disc(T) from the trace form on the lattice basis
    n = len(lat.basis)
    tr = []
    for i in range(n):
        row = []
        for j in range(n):
            t = Fraction(0)
            for x, y in zip(lat.basis[i], lat.basis[j]):
                t += (x * y).trace()
            row.append(t)
        tr.append(row)
    den = 1
    for row in tr:
        for c in row:
            den = lcm(den, c.denominator)
    disc_t = Fraction(IntMatrix([[int(c * den) for c in row] for row in tr]).det(),
                      den ** n)
    assert disc_t.denominator == 1
    disc_t = int(disc_t)

    # congruence module order from the SNF of T inside (+) R_i
    rs = _block_lattice(fields, lat.coeff_orders)
    change = _change_of_basis(fields, rs, lat.basis)
    invariants = snf(change)
    cong = 1
    for x in invariants:
        cong *= x

    orbit_indices = [index(o, r) for o, r in zip(lat.orders, lat.coeff_orders)]
    orbit_discs = [o.disc() for o in lat.orders]
    report = DiscReport(k, disc_t, cong, orbit_indices, orbit_discs, False)
    report.verified = (disc_t == report.rhs())
    return report
