"""Finite commutative F_p-algebras given by structure constants.

The central objects are quotients of orders modulo a prime, their splitting
into a product of finite fields through orthogonal idempotents, and the full
set of algebra homomorphisms into one fixed big field F_{p^L}.  Elements are
coordinate tuples over F_p; all maps are stored explicitly so every claimed
identity can be re-checked coordinate by coordinate.
"""

import random
from math import lcm

from .errors import NotSemisimple
from .finitefield import FiniteField, canonical_irreducible, subfield_roots
from .matrix import kernel_mod, rref_mod, solve_mod
from .poly import GF, Poly, factor_mod_p


class FpAlgebra:
    """Commutative unital F_p-algebra of dimension n by multiplication table.

    table[i][j] is the coordinate tuple of b_i * b_j; unit is the coordinate
    tuple of 1.  Commutativity and associativity are checked on basis triples
    at construction.
    """

    def __init__(self, p, table, unit, check=True):
        self.p = p
        self.dim = len(table)
        self.table = tuple(tuple(tuple(c % p for c in cell) for cell in row)
                           for row in table)
        self.unit = tuple(c % p for c in unit)
        assert len(self.unit) == self.dim
        if check:
            self._check_axioms()

    def _check_axioms(self):
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                assert self.table[i][j] == self.table[j][i], "not commutative"
        basis = [self.basis_vector(i) for i in range(n)]
        for i in range(n):
            assert self.mul(self.unit, basis[i]) == basis[i], "unit fails"
        for i in range(n):
            for j in range(i, n):
                for k in range(j, n):
                    left = self.mul(self.mul(basis[i], basis[j]), basis[k])
                    right = self.mul(basis[i], self.mul(basis[j], basis[k]))
                    assert left == right, "not associative"

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def zero(self):
        return (0,) * self.dim

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def scalar(self, c, a):
        p = self.p
        c %= p
        return tuple(c * x % p for x in a)

    def mul(self, a, b):
        p, n = self.p, self.dim
        out = [0] * n
        for i, x in enumerate(a):
            if x == 0:
                continue
            row = self.table[i]
            for j, y in enumerate(b):
                if y == 0:
                    continue
                f = x * y
                cell = row[j]
                for k in range(n):
                    out[k] += f * cell[k]
        return tuple(c % p for c in out)

    def power(self, a, e):
        out = self.unit
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def frobenius_matrix(self):
        """Rows: coordinates of b_i^p (the Frobenius is F_p-linear here)."""
        return [list(self.power(self.basis_vector(i), self.p)) for i in range(self.dim)]

    def nilradical_basis(self):
        """Basis of the ideal of nilpotents: kernel of a high Frobenius power."""
        n, p = self.dim, self.p
        t = 1
        while p ** t < n:
            t += 1
        frob = self.frobenius_matrix()
        # iterate the linear map t times: M = frob^t acting on row vectors
        m = frob
        for _ in range(t - 1):
            m = [[sum(m[i][k] * frob[k][j] for k in range(n)) % p for j in range(n)]
                 for i in range(n)]
        # x nilpotent iff x * M = 0 (row convention)
        cols = [[m[i][j] for i in range(n)] for j in range(n)]
        return kernel_mod(cols, n, p)

    def minimal_polynomial(self, a):
        """Minimal polynomial of the element a over F_p."""
        rows = [list(self.unit)]
        pw = self.unit
        for _ in range(self.dim):
            pw = self.mul(pw, a)
            rows.append(list(pw))
        for d in range(1, self.dim + 1):
            cols = [[rows[i][j] for i in range(d)] for j in range(self.dim)]
            rhs = [-rows[d][j] % self.p for j in range(self.dim)]
            sol = solve_mod(cols, rhs, self.p)
            if sol is not None:
                return Poly(sol + [1], GF(self.p))
        raise AssertionError("unreachable: element has no minimal polynomial")

    def evaluate_poly(self, f, a):
        """f(a) for f over GF(p)."""
        acc = self.zero()
        for c in reversed(f.coeffs):
            acc = self.add(self.mul(acc, a), self.scalar(int(c), self.unit))
        return acc

    def __repr__(self):
        return "FpAlgebra(p=%d, dim=%d)" % (self.p, self.dim)


class AlgebraHom:
    """F_p-algebra homomorphism A -> F_{p^L}, stored by basis images."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = tuple(images)

    def apply(self, a):
        out = self.target.zero()
        for c, img in zip(a, self.images):
            if c:
                out = self.target.add(out, self.target.scalar(c, img))
        return out

    def is_multiplicative(self):
        src = self.source
        for i in range(src.dim):
            for j in range(i, src.dim):
                lhs = self.apply(src.table[i][j])
                rhs = self.target.mul(self.images[i], self.images[j])
                if lhs != rhs:
                    return False
        return self.apply(src.unit) == self.target.one()

    def __eq__(self, other):
        return (isinstance(other, AlgebraHom) and self.images == other.images
                and self.target == other.target)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "AlgebraHom(images=%r)" % (list(self.images),)


class CrtDecomposition:
    """Splitting of a semisimple algebra into a product of finite fields.

    components[i] is a (field, projection) pair where projection maps each
    algebra basis vector to a field element; idempotents[i] is the primitive
    idempotent supporting component i.
    """

    def __init__(self, algebra, components, idempotents):
        self.algebra = algebra
        self.components = components
        self.idempotents = idempotents

    @property
    def residue_degrees(self):
        return [field.n for field, _ in self.components]

    def project(self, i, a):
        field, proj = self.components[i]
        out = field.zero()
        for c, img in zip(a, proj):
            if c:
                out = field.add(out, field.scalar(c, img))
        return out

    def verify(self):
        alg = self.algebra
        total = alg.zero()
        for i, e in enumerate(self.idempotents):
            assert alg.mul(e, e) == e, "not idempotent"
            total = alg.add(total, e)
            for j in range(i + 1, len(self.idempotents)):
                assert alg.mul(e, self.idempotents[j]) == alg.zero(), "not orthogonal"
        assert total == alg.unit, "idempotents do not sum to 1"
        assert sum(self.residue_degrees) == alg.dim
        for i in range(len(self.components)):
            field, _ = self.components[i]
            for bi in range(alg.dim):
                for bj in range(alg.dim):
                    a, b = alg.basis_vector(bi), alg.basis_vector(bj)
                    lhs = self.project(i, alg.mul(a, b))
                    rhs = field.mul(self.project(i, a), self.project(i, b))
                    assert lhs == rhs, "projection not multiplicative"
        return True


def is_semisimple(a):
    """True iff the nilradical vanishes."""
    return not a.nilradical_basis()


def _subalgebra_span(alg, vectors):
    """Echelonized basis of the span of the vectors (rows over F_p)."""
    rows, _ = rref_mod([list(v) for v in vectors], alg.p)
    return [tuple(r) for r in rows if any(c % alg.p for c in r)]


def subalgebra_image(alg, gens):
    """Smallest unital subalgebra containing gens.

    Returns (B, inclusion) where B is an FpAlgebra on the closure basis and
    inclusion lists that basis as coordinate vectors in alg.
    """
    basis = _subalgebra_span(alg, [alg.unit] + list(gens))
    while True:
        products = [alg.mul(x, y) for i, x in enumerate(basis)
                    for y in basis[i:]]
        new_basis = _subalgebra_span(alg, basis + products)
        if len(new_basis) == len(basis):
            basis = new_basis
            break
        basis = new_basis
    # structure constants in the closure basis
    cols = [[basis[i][j] for i in range(len(basis))] for j in range(alg.dim)]
    table = []
    for x in basis:
        row = []
        for y in basis:
            prod = alg.mul(x, y)
            coords = solve_mod(cols, list(prod), alg.p)
            assert coords is not None, "closure is not closed (bug)"
            row.append(tuple(coords))
        table.append(row)
    unit_coords = solve_mod(cols, list(alg.unit), alg.p)
    assert unit_coords is not None
    sub = FpAlgebra(alg.p, table, unit_coords, check=False)
    return sub, basis


def decompose(alg, seed=0):
    """CRT decomposition of a semisimple algebra into finite fields.

    Idempotents are found by factoring minimal polynomials of seeded random
    elements and CRT-lifting; components are sorted by (degree, idempotent
    coordinates) so the result is canonical for a given seed.
    """
    if not is_semisimple(alg):
        raise NotSemisimple("algebra has nonzero nilpotents")
    rng = random.Random(seed)
    finished = []  # (idempotent in alg coords, field, projection images)

    def handle(basis):
        """basis: vectors of alg spanning a unital ideal-subalgebra."""
        sub, incl = _carve(basis)
        n = sub.dim
        for _ in range(1000):
            a = tuple(rng.randrange(alg.p) for _ in range(n))
            mu = sub.minimal_polynomial(a)
            facs = factor_mod_p(mu, seed=rng.randrange(1 << 30))
            assert all(m == 1 for _, m in facs), "semisimple quotient has squarefree minpolys"
            if len(facs) == 1 and mu.degree == n:
                finished.append((basis, sub, incl, a, mu))
                return
            if len(facs) > 1:
                for g, _ in facs:
                    u = mu // g
                    # invert u modulo g, then e = (s*u)(a) is the idempotent
                    from .poly import poly_xgcd
                    one, s, _t = poly_xgcd(u, g)
                    assert one.degree == 0
                    e_sub = sub.evaluate_poly((s * u) % mu, a)
                    piece = [v for v in (sub.mul(e_sub, sub.basis_vector(i)) for i in range(n))]
                    piece_basis = _subalgebra_span(sub, piece)
                    handle([_lift(incl, v) for v in piece_basis])
                return
            # single factor of low degree: element not separating, retry
        raise AssertionError("no splitting element found (seed exhausted)")

    def _carve(basis):
        """Subalgebra on the given basis; unit is the idempotent supporting it."""
        cols = [[basis[i][j] for i in range(len(basis))] for j in range(alg.dim)]
        table = []
        for x in basis:
            row = []
            for y in basis:
                coords = solve_mod(cols, list(alg.mul(x, y)), alg.p)
                assert coords is not None
                row.append(tuple(coords))
            table.append(row)
        # the unit of the ideal: solve e*b_i = b_i for all i within the span
        m = len(basis)
        eqs = []
        rhs = []
        for i in range(m):
            # sum_j e_j (basis_j * basis_i) = basis_i, coordinates in alg
            for c in range(alg.dim):
                eqs.append([alg.mul(basis[j], basis[i])[c] for j in range(m)])
                rhs.append(basis[i][c])
        e = solve_mod(eqs, rhs, alg.p)
        assert e is not None, "ideal has no unit (not semisimple?)"
        sub = FpAlgebra(alg.p, table, e, check=False)
        return sub, basis

    def _lift(incl, v):
        out = alg.zero()
        for c, w in zip(v, incl):
            out = alg.add(out, alg.scalar(c, w))
        return out

    handle([alg.basis_vector(i) for i in range(alg.dim)])

    components = []
    for basis, sub, incl, gen_elt, mu in finished:
        field = FiniteField(alg.p, mu.monic())
        # projection alg -> field: x maps to (x * e) written as a poly in gen_elt
        m = sub.dim
        pw = sub.unit
        pow_rows = []
        for _ in range(m):
            pow_rows.append(list(pw))
            pw = sub.mul(pw, gen_elt)
        pow_cols = [[pow_rows[i][j] for i in range(m)] for j in range(m)]
        incl_cols = [[incl[i][j] for i in range(m)] for j in range(alg.dim)]
        proj = []
        for i in range(alg.dim):
            x = alg.basis_vector(i)
            # component of x: x * e expressed in sub coordinates
            e = _lift(incl, sub.unit)
            xe = alg.mul(x, e)
            sub_coords = solve_mod(incl_cols, list(xe), alg.p)
            assert sub_coords is not None
            poly_coords = solve_mod(pow_cols, sub_coords, alg.p)
            assert poly_coords is not None
            proj.append(field.element(poly_coords))
        idem = _lift(incl, sub.unit)
        components.append((idem, field, proj))

    components.sort(key=lambda t: (t[1].n, t[0]))
    dec = CrtDecomposition(alg,
                           [(f, p_) for _, f, p_ in components],
                           [idem for idem, _, _ in components])
    dec.verify()
    return dec


def component_embeddings(dec, seed=0):
    """For each component field, its embeddings into the fixed F_{p^L}
    (L = lcm of the degrees): a list of lists of root images of the component
    generator, Frobenius orbits of the smallest root."""
    alg = dec.algebra
    degrees = dec.residue_degrees
    big_l = lcm(*degrees) if degrees else 1
    big = FiniteField(alg.p, canonical_irreducible(alg.p, big_l))
    all_roots = []
    for field, _proj in dec.components:
        roots = subfield_roots(field.poly, big, seed=seed)
        assert len(roots) == field.n, "component poly must split in the big field"
        base = roots[0]
        all_roots.append([big.frobenius(base, k) for k in range(field.n)])
    return big, all_roots


def homs_from_decomposition(dec, seed=0):
    """The canonical hom list A -> F_{p^L}: component index, then Frobenius
    power.  Entry sum(f_1..f_{i-1}) + (m-1) is embedding m of component i."""
    alg = dec.algebra
    big, all_roots = component_embeddings(dec, seed=seed)
    homs = []
    for i, (field, _proj) in enumerate(dec.components):
        proj_coords = [dec.project(i, alg.basis_vector(b)) for b in range(alg.dim)]
        for root in all_roots[i]:
            pows = [big.one()]
            for _ in range(field.n - 1):
                pows.append(big.mul(pows[-1], root))
            images = []
            for b in range(alg.dim):
                acc = big.zero()
                for exp, c in enumerate(proj_coords[b]):
                    if c:
                        acc = big.add(acc, big.scalar(c, pows[exp]))
                images.append(acc)
            homs.append(AlgebraHom(alg, big, images))
    assert len(homs) == alg.dim, "hom count must equal the dimension"
    assert len(set(homs)) == len(homs), "hom list has duplicates"
    return homs


def algebra_homs(alg, seed=0):
    """All F_p-algebra homomorphisms A -> F_{p^L}, L = lcm of component degrees.

    The list is canonical: component index (decomposition order), then
    Frobenius power applied to the smallest-root embedding.
    """
    return homs_from_decomposition(decompose(alg, seed=seed), seed=seed)


def restriction_collision(alg, sub_basis, seed=0):
    """Two distinct homs of alg agreeing on the subalgebra, or None if the
    subalgebra is everything.  The pair is the lexicographically first
    colliding pair in the canonical hom list."""
    if len(sub_basis) == alg.dim:
        return None
    homs = algebra_homs(alg, seed=seed)
    restrictions = [tuple(h.apply(v) for v in sub_basis) for h in homs]
    for i in range(len(homs)):
        for j in range(i + 1, len(homs)):
            if restrictions[i] == restrictions[j]:
                return homs[i], homs[j]
    raise AssertionError("proper subalgebra without a collision (impossible)")


def quotient_mod_p(order, p):
    """The F_p-algebra O/pO for an order O (duck-typed: needs basis_mul_coords
    and degree)."""
    n = order.degree
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = order.basis_mul_coords(i, j)
            row.append(tuple(int(c) % p for c in coords))
        table.append(row)
    unit = [int(c) % p for c in order.one_coords()]
    return FpAlgebra(p, table, unit, check=False)


def random_product_of_fields(p, degrees, seed):
    """Product of F_{p^f} for f in degrees, basis scrambled by a seeded
    invertible change of basis.  Used by property tests and the selftest."""
    rng = random.Random(seed)
    fields = [FiniteField(p, canonical_irreducible(p, f)) for f in degrees]
    n = sum(degrees)
    # block-diagonal structure constants
    table = [[None] * n for _ in range(n)]
    unit = [0] * n
    off = 0
    for fld in fields:
        f = fld.n
        for i in range(f):
            for j in range(f):
                prod = fld.mul(fld.element([1 if t == i else 0 for t in range(f)]),
                               fld.element([1 if t == j else 0 for t in range(f)]))
                vec = [0] * n
                vec[off:off + f] = list(prod)
                table[off + i][off + j] = tuple(vec)
        unit[off] = 1
        off += f
    for i in range(n):
        for j in range(n):
            if table[i][j] is None:
                table[i][j] = (0,) * n
    plain = FpAlgebra(p, table, unit, check=False)
    # scramble with a random invertible matrix: new basis c_i = sum m[i][j] b_j
    while True:
        m = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        red, piv = rref_mod([row[:] for row in m], p)
        if len(piv) == n:
            break
    cols = [[m[i][j] for i in range(n)] for j in range(n)]
    new_table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = plain.mul(tuple(m[i]), tuple(m[j]))
            coords = solve_mod(cols, list(prod), p)
            row.append(tuple(coords))
        new_table.append(row)
    new_unit = solve_mod(cols, unit, p)
    return FpAlgebra(p, new_table, new_unit, check=False)
