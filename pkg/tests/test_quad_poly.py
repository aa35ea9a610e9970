import math

import pytest

from quadtotient import (
    ParityClass,
    QuadPoly,
    kronecker,
    prime_power_roots,
    primes_up_to,
    reduce_at_root,
    rho,
    rho_prime_power,
    roots_mod,
)

# Coefficient battery: content > 1, p | a, p | D, square and zero
# discriminants, negative leading terms.
BATTERY = [
    (1, 0, 1), (1, 1, 1), (1, 0, -2), (1, 1, -1), (2, 3, 1), (1, 0, 3),
    (2, 2, 2), (3, 0, 3), (4, 4, 1), (1, 0, 0), (6, 5, 1), (5, 0, 5),
    (1, 2, 3), (-1, 0, -1), (2, 0, 1), (3, 2, 5), (1, 0, -1), (9, 6, 1),
    (2, 1, 3), (1, 5, 6), (12, 10, 2), (7, 3, -5), (1, 1, 41),
]


def brute_root_count(poly: QuadPoly, m: int) -> int:
    return sum(1 for x in range(m) if ((poly.a * x + poly.b) * x + poly.c) % m == 0)


def brute_roots(poly: QuadPoly, m: int) -> list[int]:
    return [x for x in range(m) if ((poly.a * x + poly.b) * x + poly.c) % m == 0]


def test_construction_guards():
    with pytest.raises(ValueError):
        QuadPoly(0, 1, 1)
    with pytest.raises(ValueError):
        QuadPoly(1, (1 << 31) + 1, 0)
    QuadPoly(1 << 31, 0, -(1 << 31))  # boundary accepted


def test_parse_round_trip():
    poly = QuadPoly.parse("2, -1, 3")
    assert (poly.a, poly.b, poly.c) == (2, -1, 3)
    assert poly.to_text() == "2,-1,3"
    with pytest.raises(ValueError):
        QuadPoly.parse("1,2")
    with pytest.raises(ValueError):
        QuadPoly.parse("1,x,3")


def test_discriminant():
    assert QuadPoly(1, 0, 1).discriminant() == -4
    assert QuadPoly(1, 1, 1).discriminant() == -3
    assert QuadPoly(2, 3, 1).discriminant() == 1


def test_is_irreducible():
    assert QuadPoly(1, 0, 1).is_irreducible()
    assert not QuadPoly(2, 3, 1).is_irreducible()
    assert QuadPoly(1, 0, -2).is_irreducible()
    assert not QuadPoly(1, 0, 0).is_irreducible()


def test_eval():
    assert QuadPoly(1, 0, 1)(7) == 50
    assert QuadPoly(1, 0, 1)(0) == 1
    assert QuadPoly(2, -1, 3)(10) == 193
    with pytest.raises(OverflowError):
        QuadPoly(1, 0, 1)(1 << 33)


def test_parity_class_examples():
    assert QuadPoly(1, 1, 1).parity_class() is ParityClass.ALWAYS_ODD
    assert QuadPoly(1, 0, 1).parity_class() is ParityClass.NEVER_DIV_BY_4
    assert QuadPoly(1, 0, 3).parity_class() is ParityClass.GENERIC


def test_parity_class_matches_values():
    for coeffs in BATTERY:
        poly = QuadPoly(*coeffs)
        values = [poly(n) for n in range(-10**4, 10**4 + 1)]
        always_odd = all(v % 2 for v in values)
        assert (poly.parity_class() is ParityClass.ALWAYS_ODD) == always_odd
        if poly.parity_class() is ParityClass.NEVER_DIV_BY_4:
            assert all(v % 4 for v in values)


def test_rho_prime_power_examples():
    poly = QuadPoly(1, 0, 1)
    assert rho_prime_power(poly, 5, 1) == 2
    assert rho_prime_power(poly, 3, 1) == 0
    assert rho_prime_power(poly, 5, 2) == 2
    assert rho_prime_power(poly, 2, 1) == 1


def test_rho_prime_power_brute_battery():
    # every battery entry against exhaustive counting over all prime
    # powers p^r <= 10^5 with p <= 10^3; also records that the counts at
    # primes away from the content stay bounded for irreducible entries
    moduli = []
    for p in primes_up_to(1000):
        pr, r = p, 1
        while pr <= 10**5:
            moduli.append((p, r, pr))
            pr *= p
            r += 1
    for coeffs in BATTERY:
        poly = QuadPoly(*coeffs)
        vals = [(poly.a * x + poly.b) * x + poly.c for x in range(10**5)]
        content = math.gcd(math.gcd(abs(poly.a), abs(poly.b)), abs(poly.c))
        bounded_max = 0
        for p, r, pr in moduli:
            got = rho_prime_power(poly, p, r)
            assert got == sum(vals[x] % pr == 0 for x in range(pr)), (coeffs, p, r)
            if poly.is_irreducible() and content % p != 0:
                bounded_max = max(bounded_max, got)
        if poly.is_irreducible():
            assert bounded_max <= 8, coeffs  # empirical boundedness only


def test_prime_power_roots_match_brute():
    for coeffs in [(1, 0, 1), (2, 2, 2), (4, 4, 1), (1, 1, -1), (6, 5, 1)]:
        poly = QuadPoly(*coeffs)
        for p, r in [(2, 5), (3, 4), (5, 3), (7, 2), (11, 2), (13, 1)]:
            assert prime_power_roots(poly, p, r) == brute_roots(poly, p**r)


def test_rho_multiplicative():
    pairs = [(3, 4), (5, 8), (7, 9), (25, 16), (11, 27), (13, 125), (49, 81),
             (2, 9), (101, 64), (243, 49), (17, 288)]
    for coeffs in [(1, 0, 1), (2, 2, 2), (1, 1, -1), (12, 10, 2)]:
        poly = QuadPoly(*coeffs)
        for k1, k2 in pairs:
            assert math.gcd(k1, k2) == 1
            assert rho(poly, k1 * k2) == rho(poly, k1) * rho(poly, k2)
            assert rho(poly, k1 * k2) == brute_root_count(poly, k1 * k2)
    assert rho(QuadPoly(1, 0, 1), 1) == 1


def test_rho_examples():
    poly = QuadPoly(1, 0, 1)
    assert rho(poly, 65) == 4
    assert rho(poly, 1) == 1
    assert rho(poly, 3) == 0
    assert brute_roots(poly, 65) == [8, 18, 47, 57]


def test_hensel_stability():
    # p not dividing 2aD: the count mod p^r never moves, and the fast path
    # agrees with explicit lifting
    for coeffs in [(1, 0, 1), (1, 1, -1), (3, 2, 5), (1, 1, 41)]:
        poly = QuadPoly(*coeffs)
        disc = poly.discriminant()
        for p in primes_up_to(50):
            if (2 * poly.a * disc) % p == 0:
                continue
            base = rho_prime_power(poly, p, 1)
            assert base in (0, 2)
            r = 2
            while p**r <= 10**6:
                assert rho_prime_power(poly, p, r) == base
                assert len(prime_power_roots(poly, p, r)) == base
                r += 1


def test_split_dichotomy():
    for coeffs in BATTERY:
        poly = QuadPoly(*coeffs)
        disc = poly.discriminant()
        for q in primes_up_to(500):
            if (2 * poly.a * disc) % q == 0:
                continue
            expected = 1 + kronecker(disc, q)
            assert rho(poly, q) == expected
            assert expected in (0, 2)


def test_roots_mod_examples():
    poly = QuadPoly(1, 0, 1)
    assert roots_mod(poly, 5) == [2, 3]
    assert roots_mod(poly, 65) == [8, 18, 47, 57]
    assert roots_mod(poly, 3) == []
    assert roots_mod(poly, 1) == [0]


def test_roots_mod_matches_brute():
    for coeffs in [(1, 0, 1), (2, 2, 2), (1, 1, -1), (6, 5, 1), (12, 10, 2)]:
        poly = QuadPoly(*coeffs)
        for v in list(range(1, 200)) + [360, 1001, 4096, 9800]:
            got = roots_mod(poly, v)
            assert got == brute_roots(poly, v), (coeffs, v)
            assert len(got) == rho(poly, v)


def test_reduce_at_root_examples():
    poly = QuadPoly(1, 0, 1)
    r5 = reduce_at_root(poly, 5, 2)
    assert (r5.a, r5.b, r5.c) == (5, 4, 2)
    assert r5(1) == poly(7) // 5 + 1 == 11
    r1 = reduce_at_root(poly, 1, 0)
    assert (r1.a, r1.b, r1.c) == (1, 0, 2)
    r53 = reduce_at_root(poly, 5, 3)
    assert (r53.a, r53.b, r53.c) == (5, 6, 3)
    assert r53.discriminant() == -24 == poly.discriminant() - 4 * poly.a * 5
    with pytest.raises(ValueError):
        reduce_at_root(poly, 5, 1)  # 5 does not divide P(1) = 2


def test_reduce_at_root_progression_identity():
    for coeffs in [(1, 0, 1), (1, 1, -1), (2, 0, 1), (1, 2, 3)]:
        poly = QuadPoly(*coeffs)
        disc = poly.discriminant()
        for v in [1, 2, 5, 13, 50, 130, 425, 2210, 9997]:
            for t in roots_mod(poly, v):
                reduced = reduce_at_root(poly, v, t)
                assert reduced.discriminant() == disc - 4 * poly.a * v
                for u in range(101):
                    assert reduced(u) == poly(u * v + t) // v + 1
