"""Acceptance suite: one test per criterion, exact checks, timed."""

import random
import time
from math import gcd

from etaq import (
    EtaQuotient,
    all_factors_on,
    atkin_lehner,
    compose,
    decide_irreducible,
    divisors,
    exact_divisors,
    factor_level_bound,
    factorize_on,
    normalized_inverse,
    is_factor,
    quasi_weight_bound,
    lower,
    order_matrix,
    order_vector,
    parse,
    phihat,
    qexp,
    quasi_irreducible,
    exponent_norm_bound,
    min_level_bound,
    doubling_product,
    verify_identity,
)
from etaq.numth import factorization, gcexd, rad

from conftest import box_volume, naive_has_split, random_holomorphic

F6 = parse("1:1,2:1,3:-1,6:1")
G4 = parse("1:-2,2:8,4:-2")
E55 = parse("1:-1,5:5")
H60 = parse("1:-1,2:2,3:2,4:-1,5:5,6:-5,10:-10,12:2,15:-10,20:5,30:25,60:-10")
LVL12_A = parse("1:1,2:-1,3:-1,4:1,6:2,12:-1")
LVL12_B = parse("2:2,4:-1,6:-1,12:1")


class timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc == (None, None, None):
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s, limit {self.limit}s"


def test_criterion_01_level6_factorization():
    with timer(1.0):
        w = factorize_on(F6, 6)
        assert w is not None
        facs = all_factors_on(F6, 6)
        assert parse("1:2,2:-1,3:-1,6:1") in facs
        assert parse("1:-1,2:2") in facs


def test_criterion_02_level12_identity():
    with timer(1.0):
        assert verify_identity(F6, [LVL12_A, LVL12_B], 240)
        assert is_factor(LVL12_A, F6)
        assert is_factor(LVL12_B, F6)


def test_criterion_03_level4_example():
    with timer(1.0):
        w = factorize_on(G4, 4)
        assert (w.g, w.h) == (parse("1:-1,2:3,4:-1"), parse("1:-1,2:5,4:-1"))
        g12 = parse("1:-2,2:5,3:1,4:-2,6:-2,12:1")
        h12 = G4 / g12
        assert is_factor(g12, G4) and is_factor(h12, G4)
        pair = {lower(g12, 12, 4).to_eta(), lower(h12, 12, 4).to_eta()}
        assert pair == {w.g, w.h}


def test_criterion_04_level60_projection():
    with timer(5.0):
        low = lower(H60, 60, 5)
        assert low.integral and low.to_eta() == E55
        v = decide_irreducible(H60, 240)
        assert v.kind == "irreducible" and v.method == "lower-projection"


def test_criterion_05_prime_power_irreducibility():
    with timer(10.0):
        for p in (2, 3, 5, 7, 13):
            f = EtaQuotient({1: p, p: -1})
            v = decide_irreducible(f, 4 * p)
            assert v.kind == "irreducible" and v.method == "prime-power"
            assert quasi_irreducible(f)


def test_criterion_06_one_cusp_generators_do_not_split():
    with timer(30.0):
        for p, n in ((2, 1), (2, 2), (3, 1), (5, 1)):
            g = EtaQuotient({p**n: p, p ** (n - 1): -1})
            assert factorize_on(g, p ** (n + 1)) is None


def test_criterion_07_one_cusp_generator_orders():
    for p, n in ((2, 1), (2, 2), (3, 1), (5, 1)):
        g = EtaQuotient({p**n: p, p ** (n - 1): -1})
        a = order_vector(g, p ** (n + 1)).orders24
        expect = {p**j: 0 for j in range(n)}
        expect[p**n] = phihat(p**n)
        expect[p ** (n + 1)] = phihat(p**n)
        assert a == expect


def _min_scale_formula(N, t):
    # closed form for the least scalar making an inverse column integral
    tp = t // gcexd(N, t)
    tpp = 1
    for p, e in factorization(N):
        if tp % p == 0:
            tpp *= p**e
    return phihat(N // tpp) * phihat(tpp * rad(tp) // gcd(tp, tpp // tp))


def test_criterion_08_matrix_identities_up_to_300():
    with timer(60.0):
        for M in range(1, 301):
            om = order_matrix(M)
            ninv = normalized_inverse(M)
            n = len(om.divisors)
            for i in range(n):
                for j in range(n):
                    s = sum(om.entries[i][k] * ninv.inv[k][j] for k in range(n))
                    assert s == (1 if i == j else 0)
            for j, t in enumerate(om.divisors):
                m = ninv.scale[t]
                assert all((ninv.inv[i][j] * m).denominator == 1 for i in range(n))
                for p, _ in factorization(m):
                    smaller = m // p
                    assert any(
                        (ninv.inv[i][j] * smaller).denominator != 1 for i in range(n)
                    )
                assert m == _min_scale_formula(M, t)


def test_criterion_09_randomized_property_suites():
    with timer(120.0):
        rng = random.Random(20240)

        # valence identity
        for _ in range(500):
            f = random_holomorphic(rng)
            M = f.level * rng.choice([1, 1, 2])
            om = order_matrix(M)
            a = order_vector(f, M).orders24
            assert sum(om.cusp_mult[t] * a[t] for t in om.divisors) == f.weight2 * om.psi

        # level-lowering map: identity, integrality + weight on exact
        # divisors, composition, holomorphy for all divisors
        for _ in range(500):
            M = rng.randint(2, 60)
            f = random_holomorphic(rng, level=M)
            n = f.level
            if M % (n * 2) == 0:
                assert lower(f, M, n * 2).to_eta() == f
            assert lower(f, M, n).to_eta() == f
            for N in exact_divisors(M):
                low = lower(f, M, N)
                assert low.integral
                assert low.weight2 == f.weight2
                for N2 in divisors(N):
                    assert (
                        lower(f, M, N2).exponents
                        == lower(low.to_eta(), N, N2).exponents
                    )
            N = rng.choice(divisors(M))
            assert all(v >= 0 for v in lower(f, M, N).order_vector24().values())

        # involution algebra: involution, multiplicativity, rescaling law,
        # the Fricke-rescaling identity, and commutation with lowering
        for _ in range(500):
            N = rng.randint(2, 30)
            f = random_holomorphic(rng, level=N)
            g = random_holomorphic(rng, level=N)
            M = N * rng.choice([2, 3, 4, 6])
            for n in exact_divisors(N):
                assert atkin_lehner(atkin_lehner(f, n, N), n, N) == f
                assert atkin_lehner(f * g, n, N) == atkin_lehner(f, n, N) * atkin_lehner(
                    g, n, N
                )
            for m in exact_divisors(M):
                n = gcd(m, N)
                assert atkin_lehner(f, m, M) == atkin_lehner(f, n, N).rescale(m // n)
            v = rng.choice([2, 3, 5])
            assert atkin_lehner(f.rescale(v), v * N, v * N) == atkin_lehner(f, N, N)
            fM = random_holomorphic(rng, level=M)
            for NN in exact_divisors(M):
                for m in exact_divisors(M):
                    lhs = lower(atkin_lehner(fM, m, M), M, NN).to_eta()
                    rhs = atkin_lehner(lower(fM, M, NN).to_eta(), gcd(m, NN), NN)
                    assert lhs == rhs

        # composition: order vectors multiply across coprime levels
        pairs = [(2, 3), (4, 3), (8, 9), (12, 5), (6, 25), (16, 15)]
        for _ in range(500):
            Mf, Mg = rng.choice(pairs)
            f = random_holomorphic(rng, level=Mf)
            g = random_holomorphic(rng, level=Mg)
            fg = compose(f, g)
            af = order_vector(f, Mf).orders24
            ag = order_vector(g, Mg).orders24
            a = order_vector(fg, Mf * Mg).orders24
            for t in divisors(Mf):
                for tp in divisors(Mg):
                    assert a[t * tp] == af[t] * ag[tp]


def test_criterion_10_bound_values():
    with timer(1.0):
        assert exponent_norm_bound(1, 6) == 6
        assert exponent_norm_bound(1, 4) == 9
        assert doubling_product(6) == 1_658_880
        assert quasi_weight_bound(4) == 3
        assert quasi_weight_bound(12) == 12
        assert factor_level_bound(F6) == 12
        assert min_level_bound(6, 2).bound == 24**32 * 1_658_880


def _partitions_by_recurrence(n):
    # independent of the series code: generalized-pentagonal recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p


def test_criterion_11_series_oracle():
    with timer(30.0):
        rng = random.Random(20241)
        for _ in range(200):
            f = random_holomorphic(rng)
            qs = qexp(f, 48)
            assert qs.coeffs[0] != 0
            assert qs.offset24 == order_vector(f).orders24[f.level]
        qs = qexp(parse("1:-1"), 24 * 50)
        got = [qs.coeffs[24 * n] for n in range(51)]
        expect = _partitions_by_recurrence(50)
        assert got == expect
        assert expect[4] == 5 and expect[49] == 173_525


def test_criterion_12_brute_force_equivalence():
    with timer(300.0):
        rng = random.Random(20242)
        done = 0
        while done < 50:
            f = random_holomorphic(rng, max_level=60, max_weight2=8)
            M = f.level
            if box_volume(f, M) > 10**6:
                continue
            w = factorize_on(f, M)
            assert (w is not None) == naive_has_split(f, M)
            if w is not None:
                assert w.g * w.h == f
                assert is_factor(w.g, f) and is_factor(w.h, f)
                assert w.g.weight2 >= 1 and w.h.weight2 >= 1
            done += 1
