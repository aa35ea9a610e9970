"""Shared brute-force oracles, kept independent of the package internals."""

import math

import pytest


def simple_prime_sieve(limit: int) -> bytearray:
    """Plain Eratosthenes membership table, the reference for prime tests."""
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return sieve


def brute_phi_table(limit: int) -> list[int]:
    """phi(m) for m <= limit by the classic multiplicative sieve."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


def legendre_euler(d: int, q: int) -> int:
    """Legendre symbol by Euler's criterion; q an odd prime."""
    d %= q
    if d == 0:
        return 0
    return 1 if pow(d, (q - 1) // 2, q) == 1 else -1


@pytest.fixture(scope="session")
def prime_sieve_1e6():
    return simple_prime_sieve(10**6)


@pytest.fixture(scope="session")
def phi_map_1e5():
    """Complete fiber map value -> sorted preimages m <= 10^5."""
    table = brute_phi_table(10**5)
    fibers: dict[int, list[int]] = {}
    for m in range(1, 10**5 + 1):
        fibers.setdefault(table[m], []).append(m)
    return fibers
