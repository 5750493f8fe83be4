"""Built-in verification suite: a fast subset of the full test suite that
exercises one instance of every core claim, printing one line per check."""

import random


def run_selftest(seed=0):
    checks = []

    def check(name, fn):
        try:
            fn()
            checks.append((name, True, ""))
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            checks.append((name, False, "%s: %s" % (type(exc).__name__, exc)))

    check("hnf determinant preserved", _check_hnf)
    check("snf divisibility chain", _check_snf)
    check("polynomial refactoring mod p", lambda: _check_factor_mod_p(seed))
    check("polynomial refactoring over Q", lambda: _check_factor_q(seed))
    check("hom count equals dimension", lambda: _check_lemma_suite(seed))
    check("splitting oracle equivalence", _check_split_agreement)
    check("weight 12 trivial pipeline", _check_weight_12)
    check("weight 24 witness at the ramified prime", _check_weight_24)
    check("synthetic index-2 collision witness", _check_synthetic)

    ok = True
    for name, passed, msg in checks:
        print("%s %s%s" % ("PASS" if passed else "FAIL", name,
                           (" (%s)" % msg) if msg else ""))
        ok = ok and passed
    return ok


def _check_hnf(n=12):
    from .matrix import IntMatrix, hnf
    rng = random.Random(1)
    for _ in range(n):
        m = IntMatrix([[rng.randrange(-9, 10) for _ in range(4)] for _ in range(4)])
        h, u = hnf(m)
        assert m.mul(u) == h and abs(u.det()) == 1


def _check_snf():
    from .matrix import IntMatrix, snf
    assert snf(IntMatrix([[2, 0], [0, 3]])) == [1, 6]
    assert snf(IntMatrix([[2, 0], [0, 2]])) == [2, 2]


def _check_factor_mod_p(seed):
    from .poly import GF, Poly, factor_mod_p
    rng = random.Random(seed)
    for trial in range(25):
        p = rng.choice([2, 3, 5, 7, 13])
        f = Poly([rng.randrange(p) for _ in range(rng.randrange(1, 9))] + [1], GF(p))
        facs = factor_mod_p(f, seed=trial)
        prod = Poly([1], GF(p))
        for g, m in facs:
            for _ in range(m):
                prod = prod * g
        assert prod == f


def _check_factor_q(seed):
    from .poly import ZZ, Poly, factor_over_Q
    rng = random.Random(seed + 1)
    for trial in range(25):
        f = Poly([rng.randrange(-9, 10) for _ in range(rng.randrange(1, 8))] + [1], ZZ)
        prod = Poly([1], ZZ)
        for g in factor_over_Q(f, seed=trial):
            prod = prod * g
        assert prod == f.primitive()[1]


def _check_lemma_suite(seed):
    from .fpalgebra import algebra_homs, random_product_of_fields
    rng = random.Random(seed + 2)
    for trial in range(10):
        p = rng.choice([2, 3, 5])
        degrees = [rng.randrange(1, 4) for _ in range(rng.randrange(1, 4))]
        alg = random_product_of_fields(p, degrees, seed=trial)
        homs = algebra_homs(alg, seed=trial)
        assert len(homs) == alg.dim
        assert all(h.is_multiplicative() for h in homs)


def _check_split_agreement():
    from .numberfield import NumberField
    from .orders import maximal_order, split_prime, _split_via_idempotents
    from .poly import Poly, ZZ
    K = NumberField(Poly([-1, -1, 0, 1], ZZ))
    O = maximal_order(K)
    for p in (2, 3, 5, 23, 59):
        kd = sorted((q.e, q.f) for q in split_prime(O, p))
        idem = sorted((q.e, q.f) for q in _split_via_idempotents(O, p, 0))
        assert kd == idem, "split mismatch at %d" % p


def _check_weight_12():
    from .congruence import OrbitAnalysis
    from .level1 import eigenforms
    analysis = OrbitAnalysis(eigenforms(12)[0])
    assert analysis.index_in_maximal == 1
    assert analysis.disc_maximal == 1
    assert analysis.hypothesis_primes() == []


def _check_weight_24():
    from .congruence import OrbitAnalysis, find_witness
    from .level1 import eigenforms
    analysis = OrbitAnalysis(eigenforms(24)[0])
    w = find_witness(analysis, 144169)
    assert w.branch == "ramified"
    w2 = find_witness(analysis, 2)
    assert w2.branch == "index-collision"


def _check_synthetic():
    from .congruence import OrbitAnalysis, find_witness
    from .testdata import synthetic_sqrt5_form
    form = synthetic_sqrt5_form()
    analysis = OrbitAnalysis(form)
    assert analysis.index_in_maximal == 2
    w = find_witness(analysis, 2)
    assert w.branch == "index-collision" and not w.sigma.is_identity()
