import random

from heckecong.matrix import IntMatrix, hnf, snf, kernel_mod, rref_fraction, solve_fraction


def test_hnf_identity():
    m = IntMatrix.identity(3)
    h, u = hnf(m)
    assert h == m
    assert u == m


def test_hnf_known_2x2():
    # column lattice of [[2,0],[1,1]] is {(2a, a+b)} = {(even, anything)}
    h, u = hnf(IntMatrix([[2, 0], [1, 1]]))
    assert h == IntMatrix([[2, 0], [0, 1]])
    assert IntMatrix([[2, 0], [1, 1]]).mul(u) == h


def test_hnf_det_preserved():
    m = IntMatrix([[4, 2], [0, 2]])
    h, u = hnf(m)
    assert abs(h.det()) == 8
    assert m.mul(u) == h
    # canonical: pivots positive, below-diagonal entry reduced mod its row pivot
    assert h.data[0][1] == 0
    assert h.data[0][0] > 0 and h.data[1][1] > 0
    assert 0 <= h.data[1][0] < h.data[1][1] or h.data[1][1] == 1


def test_hnf_random_mu_equals_h():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = IntMatrix([[rng.randrange(-50, 51) for _ in range(cols)] for _ in range(rows)])
        h, u = hnf(m)
        assert abs(u.det()) == 1
        assert m.mul(u) == h


def test_hnf_canonical_under_column_ops():
    # two generating sets of one lattice must give identical H
    rng = random.Random(3)
    for _ in range(20):
        m = IntMatrix([[rng.randrange(-9, 10) for _ in range(3)] for _ in range(3)])
        if m.det() == 0:
            continue
        h1, _ = hnf(m)
        # scramble columns by a unimodular transform
        t = IntMatrix([[1, 2, 0], [0, 1, 0], [3, 0, 1]])
        h2, _ = hnf(m.mul(t))
        assert h1 == h2


def test_snf_known():
    assert snf(IntMatrix([[2, 0], [0, 3]])) == [1, 6]
    assert snf(IntMatrix.identity(2)) == [1, 1]
    assert snf(IntMatrix([[2, 0], [0, 2]])) == [2, 2]


def test_snf_divisibility_and_det():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randrange(1, 9)
        m = IntMatrix([[rng.randrange(-50, 51) for _ in range(n)] for _ in range(n)])
        d = m.det()
        if d == 0:
            continue
        inv = snf(m)
        prod = 1
        for x in inv:
            prod *= x
        assert prod == abs(d)
        for a, b in zip(inv, inv[1:]):
            assert b % a == 0


def test_kernel_mod():
    ker = kernel_mod([[1, 1, 0], [0, 0, 1]], 3, 5)
    assert len(ker) == 1
    v = ker[0]
    assert (v[0] + v[1]) % 5 == 0 and v[2] % 5 == 0


def test_solve_fraction():
    x = solve_fraction([[2, 1], [1, 3]], [5, 10])
    assert x == [1, 3]
    assert solve_fraction([[1, 1], [2, 2]], [1, 3]) is None


def test_rref_fraction_pivots():
    red, piv = rref_fraction([[0, 2, 1], [0, 4, 3]])
    assert piv == [1, 2]
