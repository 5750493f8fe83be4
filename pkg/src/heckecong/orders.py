"""Orders in number fields as exact integer lattices.

An Order is stored as a canonical-HNF integer matrix over the power basis
together with a single positive denominator, so equality is plain data
comparison.  This module computes the maximal order (Pohst-Zassenhaus
round-2 enlargement through the p-radical and ring of multipliers), lattice
indices and discriminants, prime splitting by both the classical
factor-the-minpoly route and the idempotent-decomposition route, residue
fields with explicit reduction maps, and the automorphism subgroups that fix
a prime and act trivially on its residue field.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import (
    NotAlgebraicInteger, NotMaximalOrder, NotSublattice, RankDeficient,
    StabilizationFailure,
)
from .fpalgebra import FpAlgebra, decompose, quotient_mod_p
from .finitefield import FiniteField
from .intutil import factorint, prime_divisors
from .matrix import IntMatrix, hnf, kernel_mod, rref_mod, solve_mod, solve_fraction
from .poly import GF, Poly, factor_mod_p

_CLOSURE_ROUNDS = 64


def _canonical_lattice(vectors_num, den):
    """Canonical (HNF basis, denominator) for the lattice spanned by the
    integer rows vectors_num / den.  Returns (rows, den, rank)."""
    cols = IntMatrix([[v[i] for v in vectors_num] for i in range(len(vectors_num[0]))])
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
    if g > 1:
        den //= g
        rows = [[c // g for c in r] for r in rows]
    return rows, den, len(rows)


class Order:
    """Full-rank ring lattice in a number field.

    basis_num is a d x d integer matrix (rows = den * coordinates of basis
    elements on the power basis), canonical; maximal marks orders produced
    or certified by maximal_order.
    """

    def __init__(self, field, basis_num, den, maximal=False, check=True):
        self.field = field
        d = field.degree
        rows, den, rank = _canonical_lattice(basis_num, den)
        if rank != d:
            raise RankDeficient("order lattice has rank %d < %d" % (rank, d))
        self.basis_num = tuple(tuple(r) for r in rows)
        self.den = den
        self.maximal = maximal
        self.basis = [field.element([Fraction(c, den) for c in row]) for row in rows]
        self._mul_tensor = None
        self._disc = None
        if check:
            one = field.one()
            assert self.contains(one), "order must contain 1"
            for i in range(d):
                for j in range(i, d):
                    if not self.contains(self.basis[i] * self.basis[j]):
                        raise ValueError("lattice not closed under multiplication")

    @property
    def degree(self):
        return self.field.degree

    def __eq__(self, other):
        return (isinstance(other, Order) and other.field == self.field
                and other.basis_num == self.basis_num and other.den == self.den)

    def __hash__(self):
        return hash((self.field.minpoly.coeffs, self.basis_num, self.den))

    def __repr__(self):
        return "Order(den=%d, basis=%r)" % (self.den, [list(r) for r in self.basis_num])

    # -- membership and coordinates -------------------------------------------

    def coordinates(self, elt):
        """Coordinates of a field element on the order basis (Fractions)."""
        assert elt.field == self.field
        d = self.degree
        cols = [[Fraction(self.basis_num[i][j], self.den) for i in range(d)]
                for j in range(d)]
        sol = solve_fraction(cols, list(elt.coords))
        assert sol is not None
        return sol

    def contains(self, elt):
        return all(c.denominator == 1 for c in self.coordinates(elt))

    def element_from_coords(self, coords):
        out = self.field.zero()
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b * c
        return out

    # -- ring structure ---------------------------------------------------------

    def multiplication_tensor(self):
        """tensor[i][j] = integer coordinates of b_i * b_j on the order basis."""
        if self._mul_tensor is None:
            d = self.degree
            tensor = []
            for i in range(d):
                row = []
                for j in range(d):
                    coords = self.coordinates(self.basis[i] * self.basis[j])
                    assert all(c.denominator == 1 for c in coords), "not closed"
                    row.append(tuple(int(c) for c in coords))
                tensor.append(row)
            self._mul_tensor = tensor
        return self._mul_tensor

    def basis_mul_coords(self, i, j):
        return self.multiplication_tensor()[i][j]

    def one_coords(self):
        coords = self.coordinates(self.field.one())
        assert all(c.denominator == 1 for c in coords)
        return [int(c) for c in coords]

    def disc(self):
        """Trace-form determinant on the order basis (an integer)."""
        if self._disc is None:
            d = self.degree
            tr = [[(self.basis[i] * self.basis[j]).trace() for j in range(d)]
                  for i in range(d)]
            den = 1
            for row in tr:
                for c in row:
                    den = lcm(den, Fraction(c).denominator)
            m = IntMatrix([[int(c * den) for c in row] for row in tr])
            val = Fraction(m.det(), den ** d)
            assert val.denominator == 1
            self._disc = int(val)
        return self._disc


def order_from_elements(field, elements, maximal=False, check=True):
    den = 1
    for e in elements:
        for c in e.coords:
            den = lcm(den, c.denominator)
    rows = [[int(c * den) for c in e.coords] for e in elements]
    return Order(field, rows, den, maximal=maximal, check=check)


def equation_order(field):
    """Z[theta]."""
    d = field.degree
    rows = [[1 if j == i else 0 for j in range(d)] for i in range(d)]
    return Order(field, rows, 1, check=False)


def order_generated_by(field, gens):
    """Smallest order containing Z and the given algebraic integers."""
    if not gens:
        raise ValueError("generator list must be nonempty")
    for g in gens:
        if not g.is_algebraic_integer():
            raise NotAlgebraicInteger("generator %r is not an algebraic integer" % (g,))

    def canonize(vecs):
        den = 1
        for v in vecs:
            for c in v:
                den = lcm(den, c.denominator)
        num = [[int(c * den) for c in v] for v in vecs]
        rows, den2, _rank = _canonical_lattice(num, den)
        return [[Fraction(c, den2) for c in row] for row in rows]

    basis = canonize([list(e.coords) for e in [field.one()] + list(gens)])
    for _ in range(_CLOSURE_ROUNDS):
        elts = [field.element(v) for v in basis]
        prods = [elts[i] * elts[j]
                 for i in range(len(elts)) for j in range(i, len(elts))]
        new_basis = canonize([list(e.coords) for e in elts + prods])
        if new_basis == basis:
            if len(basis) != field.degree:
                raise RankDeficient(
                    "generators span rank %d < %d" % (len(basis), field.degree))
            den = 1
            for row in basis:
                for c in row:
                    den = lcm(den, c.denominator)
            return Order(field, [[int(c * den) for c in row] for row in basis], den)
        basis = new_basis
    raise StabilizationFailure("multiplicative closure did not stabilize")


def index(larger, smaller):
    """Lattice index [larger : smaller] (a positive integer)."""
    assert larger.field == smaller.field
    d = larger.degree
    change = []
    for b in smaller.basis:
        coords = larger.coordinates(b)
        if any(c.denominator != 1 for c in coords):
            raise NotSublattice("claimed sublattice element %r not contained" % (b,))
        change.append([int(c) for c in coords])
    val = IntMatrix(change).det()
    assert val != 0
    return abs(val)


def disc(order):
    return order.disc()


# --------------------------------------------------------------------------
# maximal order (round 2)
# --------------------------------------------------------------------------

def _p_radical_lattice(order, p):
    """Basis (order coordinates, integer rows) of the p-radical ideal I_p,
    including p*O."""
    alg = quotient_mod_p(order, p)
    nil = alg.nilradical_basis()
    d = order.degree
    rows = [[p if j == i else 0 for j in range(d)] for i in range(d)]
    rows += [[int(c) for c in v] for v in nil]
    rows, den, rank = _canonical_lattice(rows, 1)
    assert den == 1 and rank == d
    return rows


def _multiplier_ring(order, ideal_rows, p):
    """One enlargement step: the ring of multipliers of the ideal, as a new
    Order (possibly equal to the input)."""
    d = order.degree
    beta = [order.element_from_coords(r) for r in ideal_rows]
    # integer matrices C_j: gamma_j * beta_i written on the beta basis
    beta_cols = [[Fraction(ideal_rows[i][j]) for i in range(d)] for j in range(d)]
    cond_rows = []  # linear conditions on y over F_p
    for i in range(d):
        for_k = []
        for j in range(d):
            prod = order.basis[j] * beta[i]
            coords = order.coordinates(prod)
            sol = solve_fraction(beta_cols, [Fraction(c) for c in coords])
            assert sol is not None and all(c.denominator == 1 for c in sol), \
                "radical is not an ideal (bug)"
            for_k.append([int(c) for c in sol])
        # condition: sum_j y_j * C_j[k][i] == 0 mod p for every k
        for k in range(d):
            cond_rows.append([for_k[j][k] % p for j in range(d)])
    ker = kernel_mod(cond_rows, d, p)
    if not ker:
        return order
    vectors = [[c * p for c in row] for row in order.basis_num]
    for y in ker:
        elt = order.element_from_coords([int(c) for c in y])
        # the enlargement adjoins y/p, whose den*p-scaled coordinates are
        # den times the coordinates of y
        vectors.append(_scaled_coords(elt, order.den))
    return Order(order.field, vectors, order.den * p, check=False)


def _scaled_coords(elt, den):
    out = []
    for c in elt.coords:
        scaled = c * den
        assert scaled.denominator == 1
        out.append(int(scaled))
    return out


def poly_disc(m):
    """Discriminant of a monic integer polynomial."""
    from .poly import resultant_Z
    d = m.degree
    r = resultant_Z(m, m.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * r


def maximal_order(field, disc_hint_primes=()):
    """The ring of integers, by round-2 enlargement of Z[theta] at every
    prime whose square divides disc(minpoly)."""
    m = field.minpoly
    d0 = poly_disc(m)
    order = equation_order(field)
    fac = factorint(d0, hint_primes=disc_hint_primes)
    for p, e in sorted(fac.items()):
        if e < 2:
            continue
        while True:
            rad = _p_radical_lattice(order, p)
            bigger = _multiplier_ring(order, rad, p)
            if bigger == order:
                break
            assert index(bigger, order) % p == 0
            order = bigger
    return Order(order.field, [list(r) for r in order.basis_num],
                 order.den, maximal=True, check=False)


# --------------------------------------------------------------------------
# prime ideals
# --------------------------------------------------------------------------

class PrimeIdeal:
    """Prime of a maximal order: HNF lattice in order coordinates, with
    ramification index, residue degree and an explicit reduction map."""

    def __init__(self, order, p, lattice_rows, e, f, residue_field, reduction_images):
        self.order = order
        self.p = p
        self.lattice = tuple(tuple(r) for r in lattice_rows)
        self.e = e
        self.f = f
        self.residue_field = residue_field
        self.reduction_images = tuple(reduction_images)

    def __repr__(self):
        return "PrimeIdeal(p=%d, e=%d, f=%d)" % (self.p, self.e, self.f)

    def sort_key(self):
        return self.lattice

    def contains_coords(self, coords):
        """Membership for integer order-coordinates."""
        d = self.order.degree
        cols = [[Fraction(self.lattice[i][j]) for i in range(d)] for j in range(d)]
        sol = solve_fraction(cols, [Fraction(c) for c in coords])
        return sol is not None and all(c.denominator == 1 for c in sol)

    def contains(self, elt):
        coords = self.order.coordinates(elt)
        if any(c.denominator != 1 for c in coords):
            return False
        return self.contains_coords([int(c) for c in coords])

    def reduce_coords(self, coords):
        fld = self.residue_field
        out = fld.zero()
        for c, img in zip(coords, self.reduction_images):
            c = int(c)
            if c % self.p:
                out = fld.add(out, fld.scalar(c, img))
        return out

    def reduce(self, elt):
        """Image of an order element in the residue field."""
        coords = self.order.coordinates(elt)
        assert all(c.denominator == 1 for c in coords), "element not in the order"
        return self.reduce_coords([int(c) for c in coords])

    def basis_elements(self):
        return [self.order.element_from_coords(r) for r in self.lattice]


def _quotient_field_data(order, lattice_rows, p, expected_f, seed=0):
    """Residue-field data for a maximal-ideal lattice: FiniteField plus the
    images of the order basis vectors."""
    import random
    d = order.degree
    alg = quotient_mod_p(order, p)
    ker = [tuple(int(c) % p for c in row) for row in lattice_rows]
    red, piv = rref_mod([list(k) for k in ker], p)
    kernel_rows = [r for r in red if any(r)]
    assert len(kernel_rows) == d - expected_f
    free_cols = [c for c in range(d) if c not in piv]
    assert len(free_cols) == expected_f

    def project(vec):
        """Coordinates of vec in the quotient (free columns after reduction)."""
        v = [int(c) % p for c in vec]
        for row, pc in zip(kernel_rows, piv):
            c = v[pc]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return tuple(v[c] for c in free_cols)

    def lift(qcoords):
        v = [0] * d
        for c, col in zip(qcoords, free_cols):
            v[col] = c
        return tuple(v)

    # quotient algebra structure on the free coordinates
    f = expected_f
    table = []
    for i in range(f):
        row = []
        for j in range(f):
            prod = alg.mul(lift([1 if t == i else 0 for t in range(f)]),
                           lift([1 if t == j else 0 for t in range(f)]))
            row.append(project(prod))
        table.append(row)
    unit = project(alg.unit)
    qalg = FpAlgebra(p, table, unit, check=False)
    # find a generator of the residue field deterministically
    rng = random.Random(seed)
    candidates = [qalg.basis_vector(i) for i in range(f)]
    while True:
        for a in candidates:
            mu = qalg.minimal_polynomial(a)
            if mu.degree == f:
                fld = FiniteField(p, mu.monic())
                # express basis images as polynomials in the generator
                pow_rows = []
                pw = qalg.unit
                for _ in range(f):
                    pow_rows.append(list(pw))
                    pw = qalg.mul(pw, a)
                cols = [[pow_rows[i][j] for i in range(f)] for j in range(f)]
                images = []
                for i in range(d):
                    q = project(alg.basis_vector(i))
                    sol = solve_mod(cols, list(q), p)
                    assert sol is not None
                    images.append(fld.element(sol))
                return fld, images
        candidates = [tuple(rng.randrange(p) for _ in range(f)) for _ in range(8)]


def _ideal_power_contains(order, lattice_rows, t, p):
    """Does the t-th power of the ideal contain p*O?  (exact lattice check)"""
    d = order.degree
    cur = [list(r) for r in lattice_rows]
    for _ in range(t - 1):
        elts = [order.element_from_coords(r) for r in cur]
        base = [order.element_from_coords(r) for r in lattice_rows]
        prods = []
        for x in elts:
            for y in base:
                coords = order.coordinates(x * y)
                prods.append([int(c) for c in coords])
        cur, den, rank = _canonical_lattice(prods, 1)
        assert den == 1 and rank == d
    cols = [[Fraction(cur[i][j]) for i in range(len(cur))] for j in range(d)]
    for i in range(d):
        target = [Fraction(p if j == i else 0) for j in range(d)]
        sol = solve_fraction(cols, target)
        if sol is None or any(c.denominator != 1 for c in sol):
            return False
    return True


def split_prime(order, p, seed=0):
    """Complete factorization p*O = prod P_i^{e_i} in a maximal order.

    Uses factorization of the minpoly mod p when p does not divide the index
    of Z[theta], and the idempotent decomposition of O/pO otherwise.  Primes
    are sorted by their HNF lattice bases.
    """
    if not order.maximal:
        raise NotMaximalOrder("prime splitting requires the maximal order")
    field = order.field
    d = order.degree
    eq = equation_order(field)
    idx = index(order, eq)
    if idx % p != 0:
        primes = _split_kummer_dedekind(order, p, seed)
    else:
        primes = _split_via_idempotents(order, p, seed)
    primes.sort(key=lambda q: q.sort_key())
    assert sum(q.e * q.f for q in primes) == d, "ef sum mismatch"
    return primes


def _split_kummer_dedekind(order, p, seed):
    field = order.field
    d = order.degree
    theta = field.theta()
    primes = []
    for g, mult in factor_mod_p(field.minpoly.map_ring(GF(p)), seed=seed):
        gz = Poly([int(c) for c in g.coeffs], field.minpoly.ring)
        gval = field.zero()
        pw = field.one()
        for c in gz.coeffs:
            gval = gval + pw * int(c)
            pw = pw * theta
        vectors = []
        for b in order.basis:
            vectors.append([int(c) for c in order.coordinates(b * p)])
            prod = b * gval
            coords = order.coordinates(prod)
            assert all(c.denominator == 1 for c in coords)
            vectors.append([int(c) for c in coords])
        rows, den, rank = _canonical_lattice(vectors, 1)
        assert den == 1 and rank == d
        fld, images = _quotient_field_data(order, rows, p, g.degree, seed=seed)
        primes.append(PrimeIdeal(order, p, rows, mult, g.degree, fld, images))
    return primes


def _split_via_idempotents(order, p, seed):
    d = order.degree
    alg = quotient_mod_p(order, p)
    nil = alg.nilradical_basis()
    nil_rows, piv = rref_mod([list(v) for v in nil], p)
    nil_rows = [r for r in nil_rows if any(r)]
    free_cols = [c for c in range(d) if c not in piv]

    def project(vec):
        v = [int(c) % p for c in vec]
        for row, pc in zip(nil_rows, piv):
            c = v[pc]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return tuple(v[c] for c in free_cols)

    def lift(qcoords):
        v = [0] * d
        for c, col in zip(qcoords, free_cols):
            v[col] = c
        return tuple(v)

    nq = len(free_cols)
    table = []
    for i in range(nq):
        row = []
        for j in range(nq):
            prod = alg.mul(lift([1 if t == i else 0 for t in range(nq)]),
                           lift([1 if t == j else 0 for t in range(nq)]))
            row.append(project(prod))
        table.append(row)
    qbar = FpAlgebra(p, table, project(alg.unit), check=False)
    dec = decompose(qbar, seed=seed)

    primes = []
    for i, (fld_i, _) in enumerate(dec.components):
        f_i = fld_i.n
        # kernel of O -> qbar -> component i, as a lattice with p*O
        cond = []
        for b in range(d):
            img = dec.project(i, project(alg.basis_vector(b)))
            cond.append(list(img))
        cols = [[cond[b][t] for b in range(d)] for t in range(f_i)]
        ker = kernel_mod(cols, d, p)
        vectors = [[p if j == t else 0 for j in range(d)] for t in range(d)]
        vectors += [[int(c) for c in v] for v in ker]
        rows, den, rank = _canonical_lattice(vectors, 1)
        assert den == 1 and rank == d
        # ramification index: smallest power of the prime no longer over pO
        e_i = 1
        while _ideal_power_contains(order, rows, e_i + 1, p):
            e_i += 1
        fldr, images = _quotient_field_data(order, rows, p, f_i, seed=seed)
        primes.append(PrimeIdeal(order, p, rows, e_i, f_i, fldr, images))
    return primes


def ramified_primes(order, hint_primes=()):
    """Primes dividing the discriminant, each confirmed by a split with some
    e_i > 1."""
    if not order.maximal:
        raise NotMaximalOrder("ramification is only read off the maximal order")
    out = []
    for p in prime_divisors(order.disc(), hint_primes):
        assert any(q.e > 1 for q in split_prime(order, p)), \
            "p | disc but no ramified prime above it"
        out.append(p)
    return out


class JGroup:
    """Automorphisms fixing the prime and acting trivially on its residue."""

    def __init__(self, prime, members):
        self.prime = prime
        self.members = members

    def nontrivial(self):
        return [s for s in self.members if not s.is_identity()]

    def __len__(self):
        return len(self.members)


def j_group(order, prime, automorphism_list):
    """Members sigma with sigma(P) inside P and sigma trivial on O/P."""
    members = []
    basis_elts = prime.basis_elements()
    for s in automorphism_list:
        if not all(prime.contains(s.apply(b)) for b in basis_elts):
            continue
        if all(prime.contains(s.apply(b) - b) for b in order.basis):
            members.append(s)
    # subgroup sanity: closed under composition
    imgs = {m.image.coords for m in members}
    for a in members:
        for b in members:
            assert a.compose(b).image.coords in imgs, "J set is not a group"
    return JGroup(prime, members)
