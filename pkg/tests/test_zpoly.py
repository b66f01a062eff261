import random
from fractions import Fraction

from curveclass._zpoly import (
    sturm_chain,
    sturm_count,
    zdivexact,
    zgcd,
    zisolate,
    zmul,
    zprimitive,
    zrational_roots,
    zrefine,
    zsign_at,
    zsquarefree,
    zyun,
)


def poly_from_roots(roots):
    p = [1]
    for r in roots:
        p = zmul(p, [-r, 1])
    return p


def test_mul_matches_schoolbook_on_random_inputs():
    rng = random.Random(7)
    for _ in range(60):
        a = [rng.randint(-9, 9) for _ in range(rng.randint(1, 50))]
        b = [rng.randint(-9, 9) for _ in range(rng.randint(1, 50))]
        ref = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                ref[i + j] += ca * cb
        while ref and ref[-1] == 0:
            ref.pop()
        assert zmul(a, b) == ref


def test_divexact_roundtrip_large_coefficients():
    rng = random.Random(11)
    for _ in range(30):
        b = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(2, 40))]
        q = [rng.randint(-10**6, 10**6) for _ in range(rng.randint(1, 40))]
        if not b[-1]:
            b[-1] = 1
        if not q or not q[-1]:
            q = q + [3]
        a = zmul(b, q)
        assert zdivexact(a, b, quot_bits=64) == q
        assert zdivexact(a, b) == q


def test_gcd_divides_both_and_is_maximal():
    rng = random.Random(3)
    for _ in range(40):
        g = poly_from_roots([rng.randint(-4, 4) for _ in range(rng.randint(1, 3))])
        a = zmul(g, poly_from_roots([rng.randint(5, 9)]))
        b = zmul(g, [7, 0, 1])  # x^2 + 7, coprime to the cofactor of a
        got = zgcd(a, b)
        assert zdivexact(a, got) is not None
        assert zdivexact(b, got) is not None
        assert got == zprimitive(g) or len(got) >= len(g)


def test_gcd_large_degree_verified_path():
    rng = random.Random(5)
    g = [rng.randint(-50, 50) for _ in range(60)] + [1]
    u = [rng.randint(-50, 50) for _ in range(80)] + [1]
    v = [rng.randint(-50, 50) for _ in range(70)] + [1]
    a, b = zmul(g, u), zmul(g, v)
    got = zgcd(a, b)
    # u, v random of high degree: overwhelmingly coprime, so gcd == g
    assert zdivexact(zmul(g, [rng.randint(1, 5)]), got, quot_bits=16) is not None
    assert zdivexact(a, got) is not None and zdivexact(b, got) is not None
    assert len(got) == len(g)


def test_squarefree_collapses_multiplicities():
    # (x-1)^2 (x+2) -> (x-1)(x+2) = x^2 + x - 2
    a = zmul(zmul([-1, 1], [-1, 1]), [2, 1])
    assert zsquarefree(a) == [-2, 1, 1]
    # idempotent
    assert zsquarefree(zsquarefree(a)) == zsquarefree(a)


def test_yun_decomposition():
    # x^2 * (x-1)^3 * (x^2+1)
    a = zmul(zmul([0, 0, 1], poly_from_roots([1, 1, 1])), [1, 0, 1])
    got = dict(zyun(a))
    assert got[1] == [1, 0, 1]
    assert got[2] == [0, 1]
    assert got[3] == [-1, 1]
    # product of factor^mult rebuilds a up to sign/content
    rebuilt = [1]
    for m, f in got.items():
        for _ in range(m):
            rebuilt = zmul(rebuilt, f)
    assert zprimitive(rebuilt) == zprimitive(a)


def test_sturm_counts():
    chain = sturm_chain([1, 0, 1])  # x^2 + 1
    assert sturm_count(chain) == 0
    chain = sturm_chain([-2, 0, 1])  # x^2 - 2
    assert sturm_count(chain) == 2
    chain = sturm_chain([0, -1, 1])  # x^2 - x, roots {0, 1}
    assert sturm_count(chain, Fraction(-1, 2), Fraction(2)) == 2
    assert sturm_count(chain, Fraction(1, 2), Fraction(2)) == 1


def test_isolation_counts_and_certifies():
    rng = random.Random(23)
    for _ in range(40):
        roots = sorted(rng.sample(range(-6, 7), rng.randint(0, 5)))
        extra_pairs = rng.randint(0, 2)
        p = poly_from_roots(roots)
        for _ in range(extra_pairs):
            u, v = rng.randint(-3, 3), rng.randint(1, 3)
            p = zmul(p, [u * u + v * v, -2 * u, 1])  # conjugate pair, no real root
        ivals = zisolate(p)
        assert len(ivals) == len(roots)
        for (lo, hi), r in zip(ivals, roots):
            assert lo < r < hi
            chain = sturm_chain(zsquarefree(p))
            assert sturm_count(chain, lo, hi) == 1
        # pairwise disjoint and ascending
        for (a1, b1), (a2, b2) in zip(ivals, ivals[1:]):
            assert b1 <= a2


def test_refine_shrinks_and_keeps_root():
    p = [-2, 0, 1]  # sqrt(2)
    (lo, hi) = [iv for iv in zisolate(p) if iv[1] > 0][-1]
    lo, hi = zrefine(p, lo, hi, Fraction(1, 10**6))
    assert hi - lo <= Fraction(1, 10**6)
    assert zsign_at(p, lo) * zsign_at(p, hi) < 0


def test_rational_roots_found_and_verified():
    # roots 0, 3/2, -5 with noise factor x^2+7
    p = zmul(zmul(zmul([0, 1], [-3, 2]), [5, 1]), [7, 0, 1])
    assert zrational_roots(p) == [Fraction(-5), Fraction(0), Fraction(3, 2)]
    assert zrational_roots([1, 0, 1]) == []
