"""Congruences between an eigenform and its Galois conjugates.

The executable content: checking a claimed congruence coefficient by
coefficient, the dichotomy (a congruence forces either a nontrivial
residue-trivial automorphism at the prime or divisibility of the order
index), explicit witness construction at every prime dividing the closure
discriminant or the index, the two-sided verification over Galois
coefficient fields, and congruences between non-conjugate forms inside a
compositum.

Witness construction in the unramified case walks the collision machinery
end to end: split the closure order modulo p into fields, list the algebra
homs into one big finite field, restrict to the image of the coefficient
order, take the first colliding pair, turn the collision into a residue
isomorphism, transport it back into the Galois group, and hand back an
automorphism/prime pair that re-verifies.
"""

from dataclasses import dataclass, field as dataclass_field
from functools import cached_property

from .errors import (
    DegreeBoundExceeded, EmbeddingFailure, HypothesisUnmet, NotGalois,
    PropositionViolated, WitnessVerificationFailed,
)
from .fpalgebra import (
    component_embeddings, decompose, homs_from_decomposition, quotient_mod_p,
    subalgebra_image,
)
from .finitefield import FiniteField
from .intutil import prime_divisors, primes_below
from .level1 import sturm_bound
from .matrix import kernel_mod, rref_mod, solve_mod
from .numberfield import automorphisms, galois_closure, is_galois
from .orders import (
    PrimeIdeal, _canonical_lattice, equation_order, index, j_group,
    maximal_order, order_generated_by, split_prime,
)


def check_congruence(coeffs, sigma, prime, bound):
    """Is a_n congruent to sigma(a_n) mod the prime for every n <= bound?

    coeffs are order elements of the prime's field (1-indexed from a_1).
    Returns (ok, residue_log) where the log lists (n, residue coordinates)
    of sigma(a_n) - a_n for audit.
    """
    assert bound <= len(coeffs), "not enough coefficients for the bound"
    log = []
    ok = True
    for n in range(1, bound + 1):
        a = coeffs[n - 1]
        diff = sigma.apply(a) - a
        res = prime.reduce(diff)
        log.append((n, tuple(int(c) for c in res)))
        if not prime.residue_field.is_zero(res):
            ok = False
    return ok, log


def embed_coefficients(form, prime, closure=None):
    """Coefficients of the form as elements of the field owning the prime."""
    target = prime.order.field
    if form.field == target:
        return list(form.coeffs)
    if closure is not None and closure.base == form.field and closure.closure == target:
        return [closure.embed(a) for a in form.coeffs]
    raise EmbeddingFailure("no embedding from the coefficient field into %r" % (target,))


@dataclass
class CongruenceWitness:
    """A nontrivial automorphism and prime with all differences inside it."""
    weight: int
    orbit: int
    sigma: object          # Automorphism of the closure field
    prime: PrimeIdeal
    p: int
    bound: int
    branch: str            # "ramified" or "index-collision"
    residue_log: list = dataclass_field(default_factory=list)

    def reverify(self, coeffs):
        ok, log = check_congruence(coeffs, self.sigma, self.prime, self.bound)
        return ok


class OrbitAnalysis:
    """Lazy bundle of everything the engine needs about one Galois orbit."""

    def __init__(self, form):
        self.form = form
        self.field = form.field

    @cached_property
    def coefficient_order(self):
        return order_generated_by(self.field, list(self.form.coeffs))

    @cached_property
    def maximal(self):
        return maximal_order(self.field)

    @cached_property
    def index_in_maximal(self):
        return index(self.maximal, self.coefficient_order)

    @cached_property
    def disc_maximal(self):
        return self.maximal.disc()

    @cached_property
    def auts(self):
        return automorphisms(self.field)

    @cached_property
    def galois(self):
        return len(self.auts) == self.field.degree

    @cached_property
    def closure(self):
        return galois_closure(self.field)

    @cached_property
    def closure_maximal(self):
        if self.galois:
            closure_field = self.closure.closure
            if closure_field == self.field:
                return self.maximal
        return maximal_order(self.closure.closure,
                             disc_hint_primes=prime_divisors(self.disc_maximal))

    @cached_property
    def disc_closure(self):
        return self.closure_maximal.disc()

    @cached_property
    def embedded_coeffs(self):
        if self.closure.closure == self.field:
            return list(self.form.coeffs)
        return [self.closure.embed(a) for a in self.form.coeffs]

    @cached_property
    def embedded_order_basis(self):
        if self.closure.closure == self.field:
            return list(self.coefficient_order.basis)
        return [self.closure.embed(b) for b in self.coefficient_order.basis]

    @cached_property
    def sturm(self):
        return sturm_bound(self.form.weight)

    def hypothesis_primes(self):
        """Primes where the witness theorem applies: ramified in the closure
        order, or dividing the coefficient-order index."""
        ram = set(prime_divisors(self.disc_closure,
                                 prime_divisors(self.disc_maximal)))
        idx = set(prime_divisors(self.index_in_maximal))
        return sorted(ram | idx)


def prop1_forward(analysis, sigma, prime, bound=None):
    """Given a verified congruence by a nontrivial automorphism of K itself,
    return the satisfied disjuncts with proof data.

    Returns a dict with keys "j_nontrivial" (a nontrivial member or None)
    and "index_divisible" (bool); raises PropositionViolated if neither
    holds (never expected).
    """
    bound = bound if bound is not None else analysis.sturm
    assert not sigma.is_identity()
    ok, _ = check_congruence(list(self_coeffs(analysis, prime)), sigma, prime, bound)
    assert ok, "prop1_forward requires a verified congruence"
    jg = j_group(analysis.maximal, prime, analysis.auts)
    nontrivial = jg.nontrivial()
    p_divides = analysis.index_in_maximal % prime.p == 0
    if not nontrivial and not p_divides:
        raise PropositionViolated(
            "congruence at p=%d with trivial J and p coprime to the index" % prime.p)
    return {
        "j_nontrivial": nontrivial[0] if nontrivial else None,
        "index_divisible": p_divides,
    }


def self_coeffs(analysis, prime):
    """Coefficients embedded in whichever field owns the prime."""
    if prime.order.field == analysis.field:
        return list(analysis.form.coeffs)
    return analysis.embedded_coeffs


# --------------------------------------------------------------------------
# witness construction
# --------------------------------------------------------------------------

def _primes_from_decomposition(order, p, dec, seed=0):
    """PrimeIdeal list aligned index-by-index with the decomposition
    components of O/pO (unramified p: residue field = component field)."""
    d = order.degree
    alg = dec.algebra
    primes = []
    for i, (fld, _proj) in enumerate(dec.components):
        cond = []
        for b in range(d):
            img = dec.project(i, alg.basis_vector(b))
            cond.append(list(img))
        cols = [[cond[b][t] for b in range(d)] for t in range(fld.n)]
        ker = kernel_mod(cols, d, p)
        vectors = [[p if j == t else 0 for j in range(d)] for t in range(d)]
        vectors += [[int(c) for c in v] for v in ker]
        rows, den, rank = _canonical_lattice(vectors, 1)
        assert den == 1 and rank == d
        images = [dec.project(i, alg.basis_vector(b)) for b in range(d)]
        primes.append(PrimeIdeal(order, p, rows, 1, fld.n, fld, images))
    return primes


def _residue_map_of_automorphism(order, sigma, src_prime, dst_prime):
    """The induced residue-field map F_src -> F_dst of an automorphism with
    sigma(src) inside dst, as images of the power basis of F_src."""
    p = src_prime.p
    d = order.degree
    f = src_prime.f
    fld = src_prime.residue_field
    # rows: reduction images of the order basis (coordinates in F_src)
    red_rows = [list(src_prime.reduction_images[b]) for b in range(d)]
    basis_images = []
    for t in range(f):
        target = fld.pow(fld.gen(), t)
        sol = solve_mod([[red_rows[b][c] for b in range(d)] for c in range(f)],
                        list(target), p)
        assert sol is not None, "reduction map must be surjective"
        lift = order.element_from_coords([int(c) for c in sol])
        basis_images.append(dst_prime.reduce(sigma.apply(lift)))
    return basis_images


def _apply_linear_field_map(fld_dst, images, x):
    out = fld_dst.zero()
    for c, img in zip(x, images):
        if c:
            out = fld_dst.add(out, fld_dst.scalar(c, img))
    return out


def _invert_field_map(fld_src, fld_dst, images):
    """Invert an F_p-linear bijection given by power-basis images."""
    p = fld_src.p
    n = fld_src.n
    assert fld_dst.n == n
    rows = [list(img) for img in images]
    inv_images = []
    for t in range(n):
        target = [1 if c == t else 0 for c in range(n)]
        sol = solve_mod([[rows[b][c] for b in range(n)] for c in range(n)],
                        target, p)
        assert sol is not None
        inv_images.append(fld_src.element(sol))
    return inv_images


def find_witness(analysis, p, bound=None, seed=0):
    """A congruence witness (nontrivial closure automorphism, prime over p).

    Hypothesis: p ramifies in the closure order or divides the coefficient
    order index (any x with p*x landing in the coefficient order already
    lies in K, so the index hypothesis is checked on [O:R]).  The ramified
    branch takes a nontrivial residue-trivial automorphism at a ramified
    prime; the unramified branch runs the full collision construction.
    """
    bound = bound if bound is not None else analysis.sturm
    ramified = analysis.disc_closure % p == 0
    index_div = analysis.index_in_maximal % p == 0
    if not ramified and not index_div:
        raise HypothesisUnmet(
            "p=%d neither ramifies in the closure nor divides the index" % p)
    closure_field = analysis.closure.closure
    group = analysis.closure.group
    order = analysis.closure_maximal
    coeffs = analysis.embedded_coeffs

    if ramified:
        primes = split_prime(order, p, seed=seed)
        for prime in primes:
            if prime.e <= 1:
                continue
            jg = j_group(order, prime, group)
            nontrivial = jg.nontrivial()
            assert nontrivial, "ramified prime with trivial inertia (bug)"
            sigma = nontrivial[0]
            ok, log = check_congruence(coeffs, sigma, prime, bound)
            if not ok:
                raise WitnessVerificationFailed(
                    "inertia witness failed at p=%d" % p)
            return CongruenceWitness(analysis.form.weight, analysis.form.orbit,
                                     sigma, prime, p, bound, "ramified", log)
        raise WitnessVerificationFailed("p=%d divides disc but nothing ramified" % p)

    # unramified index branch: the collision construction
    alg = quotient_mod_p(order, p)
    dec = decompose(alg, seed=seed)
    fdeg = dec.residue_degrees
    assert len(set(fdeg)) == 1, "Galois closure must have equal residue degrees"
    f = fdeg[0]
    homs = homs_from_decomposition(dec, seed=seed)
    big, all_roots = component_embeddings(dec, seed=seed)

    # image of the coefficient order modulo p
    gens = []
    for b in analysis.embedded_order_basis:
        cc = order.coordinates(b)
        assert all(c.denominator == 1 for c in cc)
        gens.append(tuple(int(c) % p for c in cc))
    sub, sub_basis = subalgebra_image(alg, gens)
    if len(sub_basis) >= alg.dim:
        raise WitnessVerificationFailed(
            "image of the coefficient order mod %d is everything" % p)

    restrictions = [tuple(h.apply(v) for v in sub_basis) for h in homs]
    pair = None
    for i in range(len(homs)):
        for j in range(i + 1, len(homs)):
            if restrictions[i] == restrictions[j]:
                pair = (i, j)
                break
        if pair:
            break
    assert pair is not None, "proper subalgebra without a collision (impossible)"
    (jj, mm), (kk, nn) = divmod(pair[0], f), divmod(pair[1], f)

    primes = _primes_from_decomposition(order, p, dec, seed=seed)
    prime_j, prime_k = primes[jj], primes[kk]
    fld_j = prime_j.residue_field
    fld_k = prime_k.residue_field

    # phi: F_j -> F_k through the colliding embeddings into the big field
    emb_j = [big.pow(all_roots[jj][mm], t) for t in range(f)]
    emb_k = [big.pow(all_roots[kk][nn], t) for t in range(f)]
    emb_k_inv = _invert_field_map(fld_k, big, emb_k)
    phi_images = [_apply_linear_field_map(fld_k, emb_k_inv,
                                          _apply_linear_field_map(big, emb_j,
                                                                  fld_j.pow(fld_j.gen(), t)))
                  for t in range(f)]

    # sigma in the group with sigma(P_j) = P_k
    if jj == kk:
        sigma = next(s for s in group if s.is_identity())
    else:
        sigma = None
        for s in group:
            if all(prime_k.contains(s.apply(b)) for b in prime_j.basis_elements()):
                sigma = s
                break
        assert sigma is not None, "group must act transitively on the primes"

    # psi = sigma^{-1} o phi as an automorphism of F_j
    sigma_bar = _residue_map_of_automorphism(order, sigma, prime_j, prime_k)
    sigma_bar_inv = _invert_field_map(fld_j, fld_k, sigma_bar)
    psi_images = [_apply_linear_field_map(fld_j, sigma_bar_inv, img)
                  for img in phi_images]

    # tau fixing P_j and inducing psi on the residue field
    tau = None
    for s in group:
        if not all(prime_j.contains(s.apply(b)) for b in prime_j.basis_elements()):
            continue
        bar = _residue_map_of_automorphism(order, s, prime_j, prime_j)
        induced = [_apply_linear_field_map(
            fld_j, bar, fld_j.pow(fld_j.gen(), t)) for t in range(f)]
        # compare as maps on the power basis: psi(gen^t) built from gen images
        if induced == psi_images:
            tau = s
            break
    if tau is None:
        raise WitnessVerificationFailed(
            "no decomposition-group element induces the residue map at p=%d" % p)

    witness_aut = tau.inverse().compose(sigma.inverse())
    if witness_aut.is_identity():
        raise WitnessVerificationFailed("collision produced the identity")

    # the identity holds on all of R, so verify on the order basis too
    for b in analysis.embedded_order_basis:
        if not prime_j.contains(witness_aut.apply(b) - b):
            raise WitnessVerificationFailed(
                "witness fails on the coefficient order at p=%d" % p)
    ok, log = check_congruence(coeffs, witness_aut, prime_j, bound)
    if not ok:
        raise WitnessVerificationFailed("collision witness failed at p=%d" % p)
    return CongruenceWitness(analysis.form.weight, analysis.form.orbit,
                             witness_aut, prime_j, p, bound, "index-collision", log)


# --------------------------------------------------------------------------
# the Galois iff and report assembly
# --------------------------------------------------------------------------

@dataclass
class PrimeVerdict:
    p: int
    divides_index: bool
    ramifies: bool
    witness_found: bool
    witness: object = None


@dataclass
class AnalysisReport:
    weight: int
    orbit: int
    minpoly: list
    index_in_maximal: int
    disc_maximal: int
    disc_closure: int
    ramified: list
    galois: bool
    verdicts: list
    iff_consistent: bool = True
    iff_left: list = dataclass_field(default_factory=list)
    iff_right: list = dataclass_field(default_factory=list)


def witness_prime_set(analysis, scan_bound=1000, bound=None):
    """All p (up to the scan bound, plus every divisor of disc*index) at
    which the form is congruent to a conjugate by a nontrivial automorphism
    of K itself, modulo some prime of the maximal order over p."""
    bound = bound if bound is not None else analysis.sturm
    candidates = set(primes_below(scan_bound + 1))
    candidates |= set(prime_divisors(analysis.disc_maximal))
    candidates |= set(prime_divisors(analysis.index_in_maximal))
    nontrivial = [s for s in analysis.auts if not s.is_identity()]
    out = []
    for p in sorted(candidates):
        found = False
        for prime in split_prime(analysis.maximal, p):
            for sigma in nontrivial:
                ok, _ = check_congruence(list(analysis.form.coeffs), sigma,
                                         prime, bound)
                if ok:
                    found = True
                    break
            if found:
                break
        if found:
            out.append(p)
    return out


def verify_galois_iff(analysis, scan_bound=1000, bound=None):
    """Both directions of the equivalence for a Galois coefficient field:
    {p : p | disc(O) * [O:R]} must equal the witness prime set."""
    if not analysis.galois:
        raise NotGalois("iff verification needs a Galois coefficient field")
    left = sorted(set(prime_divisors(analysis.disc_maximal))
                  | set(prime_divisors(analysis.index_in_maximal)))
    right = witness_prime_set(analysis, scan_bound=scan_bound, bound=bound)
    return left, right, left == right


def closure_witness_primes(analysis, candidates, bound=None, seed=0):
    """Candidate primes admitting a congruence between the form and a
    genuinely different conjugate: the automorphism must move the base field
    (elements fixing K fix the form identically and certify nothing)."""
    bound = bound if bound is not None else analysis.sturm
    closure = analysis.closure
    order = analysis.closure_maximal
    coeffs = analysis.embedded_coeffs
    theta = closure.theta_image
    moving = [s for s in closure.group if s.apply(theta) != theta]
    out = []
    for p in sorted(set(candidates)):
        found = False
        for prime in split_prime(order, p, seed=seed):
            for sigma in moving:
                ok, _ = check_congruence(coeffs, sigma, prime, bound)
                if ok:
                    found = True
                    break
            if found:
                break
        if found:
            out.append(p)
    return out


def reverify_witness_by_membership(analysis, witness):
    """Independent soundness check of a witness: lattice membership only,
    bypassing the residue-field data stored on the prime."""
    coeffs = (analysis.embedded_coeffs
              if witness.prime.order.field == analysis.closure.closure
              else list(analysis.form.coeffs))
    for n in range(1, witness.bound + 1):
        a = coeffs[n - 1]
        if not witness.prime.contains(witness.sigma.apply(a) - a):
            return False
    return True


def analyze_orbit(form, scan_bound=1000, bound=None, seed=0):
    """Full per-orbit report: indices, discriminants, ramification, witness
    verdict at every hypothesis prime, and the iff check when applicable."""
    analysis = OrbitAnalysis(form)
    bound = bound if bound is not None else analysis.sturm
    verdicts = []
    for p in analysis.hypothesis_primes():
        ramifies = analysis.disc_closure % p == 0
        divides = analysis.index_in_maximal % p == 0
        witness = find_witness(analysis, p, bound=bound, seed=seed)
        verdicts.append(PrimeVerdict(p, divides, ramifies, True, witness))
    report = AnalysisReport(
        weight=form.weight,
        orbit=form.orbit,
        minpoly=[int(c) for c in form.field.minpoly.coeffs],
        index_in_maximal=analysis.index_in_maximal,
        disc_maximal=analysis.disc_maximal,
        disc_closure=analysis.disc_closure,
        ramified=prime_divisors(analysis.disc_maximal),
        galois=analysis.galois,
        verdicts=verdicts,
    )
    if analysis.galois:
        left, right, consistent = verify_galois_iff(
            analysis, scan_bound=scan_bound, bound=bound)
        report.iff_left = left
        report.iff_right = right
        report.iff_consistent = consistent
    return report, analysis


# --------------------------------------------------------------------------
# congruences between non-conjugate forms
# --------------------------------------------------------------------------

def _compositum(K1, K2, cap=24):
    """(L, embed1, embed2): a field containing both, with the embeddings as
    theta-images.  Quadratic-over-anything is enough at desk scale."""
    from .numberfield import _adjoin_root, _lift_zzpoly, roots_of_kpoly

    if K2.degree == 1:
        return K1, K1.theta(), K1.from_rational(K2.theta().coords[0])
    if K1.degree == 1:
        return K2, K2.from_rational(K1.theta().coords[0]), K2.theta()
    # does K2's defining polynomial have a root in K1?
    lifted = _lift_zzpoly(K1, K2.minpoly)
    if K2.degree <= 2:
        roots = roots_of_kpoly(K1, lifted)
        if roots:
            return K1, K1.theta(), roots[0]
        L, t_img, b_img, _c = _adjoin_root(K1, lifted, cap)
        return L, t_img, b_img
    raise DegreeBoundExceeded(
        "compositum construction implemented for degree <= 2 second factors")


def cross_congruences(forms, p, bound=None, cap=24, seed=0):
    """Unordered pairs of forms from distinct orbits congruent modulo some
    prime over p in the compositum of their coefficient fields.

    Returns (pairs, undecided): pairs hold (orbit_i, orbit_j, PrimeIdeal);
    undecided lists pairs whose compositum would blow past the degree cap.
    """
    if not forms:
        return [], []
    weight = forms[0].weight
    assert all(f.weight == weight for f in forms), "forms must share a weight"
    bound = bound if bound is not None else sturm_bound(weight)
    pairs = []
    undecided = []
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            f, g = forms[i], forms[j]
            try:
                L, emb_f, emb_g = _compositum(f.field, g.field, cap=cap)
            except DegreeBoundExceeded:
                undecided.append((f.orbit, g.orbit))
                continue

            def lift(elt, theta_img, L=L):
                out = L.zero()
                pw = L.one()
                for c in elt.coords:
                    out = out + pw * c
                    pw = pw * theta_img
                return out

            order = maximal_order(L)
            # every conjugate of g is itself a normalized eigenform, so try
            # every embedding of its field available in the compositum
            from .numberfield import roots_in_own_field
            g_embeds = [emb_g]
            if g.field.degree > 1:
                g_embeds = roots_in_own_field(L, g.field.minpoly)
                assert emb_g in g_embeds
            primes = split_prime(order, p, seed=seed)
            hit = None
            for ge in g_embeds:
                diffs = [lift(f.a(n), emb_f) - lift(g.a(n), ge)
                         for n in range(1, bound + 1)]
                for prime in primes:
                    if all(prime.contains(dv) for dv in diffs):
                        hit = prime
                        break
                if hit:
                    break
            if hit:
                pairs.append((f.orbit, g.orbit, hit))
    return pairs, undecided
