"""Exact integer arithmetic primitives.

Primality, factorization, prime generation, Euler's phi, the Kronecker
symbol, modular square roots, squarefree parts, smoothness and prime-factor
counting.  Everything is deterministic: primality uses a fixed witness set
that is complete far beyond 2^64, and the factorization fallback is a
Brent-style cycle walk with a fixed parameter sequence, so repeated runs
give identical results.

All operations are pure functions; inputs above 2^63 are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

INPUT_LIMIT = 1 << 63

# Deterministic Miller-Rabin witnesses, complete for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i in range(2, limit + 1) if sieve[i])


_TRIAL_PRIMES = _small_primes(4096)


def _check_limit(n: int, name: str = "n") -> None:
    if abs(n) > INPUT_LIMIT:
        raise ValueError(f"{name}={n} exceeds the supported range |{name}| <= 2^63")


@dataclass(frozen=True)
class Factorization:
    """A positive integer together with its ordered prime factorization.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes; ``value == 1`` iff ``factors`` is empty.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors, ascending."""
        divs = [1]
        for p, e in self.factors:
            pk = 1
            ext = []
            for _ in range(e):
                pk *= p
                ext.extend(d * pk for d in divs)
            divs.extend(ext)
        divs.sort()
        return divs

    def largest_square_divisor(self) -> int:
        """The largest perfect square dividing the value."""
        out = 1
        for p, e in self.factors:
            out *= p ** (2 * (e // 2))
        return out


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n <= 2^63."""
    if n < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    _check_limit(n)
    if n < 2:
        return False
    for p in _MR_WITNESSES:  # doubles as a small-prime divisibility screen
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n, by Brent's cycle walk.

    The polynomial increment starts at 1 and steps deterministically, so
    the factor found depends only on n.
    """
    c = 1
    while True:
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> Factorization:
    """Full prime factorization of 1 <= n <= 2^63."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    _check_limit(n)
    value = n
    exps: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            exps[p] = exps.get(p, 0) + 1
            n //= p
    if n > 1:
        # nothing in the trial table divides n, so n below table_max^2 is prime
        if n <= _TRIAL_PRIMES[-1] ** 2 or is_prime(n):
            exps[n] = exps.get(n, 0) + 1
        else:
            _factor_into(n, exps)
    return Factorization(value, tuple(sorted(exps.items())))


def iter_primes(limit: int) -> Iterator[int]:
    """Yield the primes <= limit in order, sieving odds in segments."""
    if limit >= 2:
        yield 2
    if limit < 3:
        return
    root = math.isqrt(limit)
    base: list[int] = []
    if root >= 3:
        half = (root - 1) // 2  # odds 3, 5, ... via index i -> 2i + 3
        mark = bytearray(half)
        for i in range(half):
            if not mark[i]:
                p = 2 * i + 3
                base.append(p)
                start = (p * p - 3) // 2
                if start < half:
                    mark[start::p] = b"\x01" * ((half - start - 1) // p + 1)
    seg = 1 << 17
    low = 3
    while low <= limit:
        size = min(seg, (limit - low) // 2 + 1)
        top = low + 2 * (size - 1)
        mark = bytearray(size)
        for p in base:
            if p * p > top:
                break
            start = max(p * p, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            idx = (start - low) // 2
            if idx < size:
                mark[idx::p] = b"\x01" * ((size - idx - 1) // p + 1)
        for i in range(size):
            if not mark[i]:
                yield low + 2 * i
        low += 2 * size


def primes_up_to(y: int) -> list[int]:
    """The primes <= y, ascending; y must be at least 2."""
    if y < 2:
        raise ValueError("primes_up_to expects y >= 2")
    return list(iter_primes(y))


def euler_phi(m: int) -> int:
    """Euler's totient of 1 <= m <= 2^63."""
    out = 1
    for p, e in factorize(m).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d|n), the full extension to all integers n.

    Agrees with the Legendre symbol when n is an odd prime not dividing d;
    (d|2) is read off d mod 8 and (d|-1) is the sign of d.
    """
    _check_limit(d, "d")
    _check_limit(n, "n")
    if n == 0:
        return 1 if d in (1, -1) else 0
    if d % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos % 2 == 1 and d % 8 in (3, 5):
        result = -result
    d %= n
    while d:
        while d % 2 == 0:
            d //= 2
            if n % 8 in (3, 5):
                result = -result
        d, n = n, d
        if d % 4 == 3 and n % 4 == 3:
            result = -result
        d %= n
    return result if n == 1 else 0


def sqrt_mod_prime(a: int, p: int) -> set[int]:
    """All x in [0, p) with x^2 = a (mod p), for an odd prime p.

    Empty iff a is a nonresidue; {0} iff p divides a; two roots otherwise.
    Uses the direct (p+1)/4 power when p = 3 (mod 4) and Tonelli-Shanks
    for p = 1 (mod 4).
    """
    if p == 2 or not is_prime(p):
        raise ValueError("sqrt_mod_prime expects an odd prime modulus")
    a %= p
    if a == 0:
        return {0}
    if kronecker(a, p) == -1:
        return set()
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while kronecker(z, p) != -1:
            z += 1
        c = pow(z, q, p)
        r = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        m = s
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            r = r * b % p
            c = b * b % p
            t = t * c % p
            m = i
    return {r, p - r}


def squarefree_part(k: int) -> int:
    """The squarefree d with the sign of k such that k/d is a square."""
    if k == 0:
        raise ValueError("squarefree_part is undefined at 0")
    _check_limit(k, "k")
    out = 1
    for p, e in factorize(abs(k)).factors:
        if e % 2:
            out *= p
    return out if k > 0 else -out


def big_omega_below(y: int, t: float) -> int:
    """Prime factors of y strictly below t, counted with multiplicity."""
    return sum(e for p, e in factorize(y).factors if p < t)


def omega_below(y: int, t: float) -> int:
    """Distinct prime factors of y strictly below t."""
    return sum(1 for p, _ in factorize(y).factors if p < t)


def is_smooth(y: int, t: float) -> bool:
    """True iff every prime factor of y is at most t (inclusive)."""
    if t < 2:
        raise ValueError("is_smooth expects t >= 2")
    return all(p <= t for p, _ in factorize(y).factors)


def is_square(k: int) -> bool:
    """True iff k is a perfect square (integer arithmetic only)."""
    if k < 0:
        return False
    r = math.isqrt(k)
    return r * r == k
