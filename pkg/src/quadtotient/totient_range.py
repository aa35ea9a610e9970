"""The inverse image of Euler's totient function.

``inverse_totient`` enumerates every m with phi(m) = n by assembling
prime powers: an odd prime p can appear in m only if p - 1 divides n, so
the recursion walks the divisors of n through candidate primes in
descending order and closes each branch with the unique power of two
whose phi equals whatever is left.  The enumeration is complete and needs
no search bound.

``totients_up_to`` counts distinct totient values <= x by sieving phi up
to an explicit bound: m/phi(m) <= e^gamma * loglog m + 3/loglog m for all
m >= 3, and m/(that bound) is increasing, so once the bound function at B
exceeds x no m > B can have phi(m) <= x.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass

from .arith_core import factorize, is_prime

PREIMAGE_INPUT_LIMIT = 1 << 50
SIEVE_INPUT_LIMIT = 10 ** 7

# Every preimage m of n satisfies m <= K * n * loglog(n + 16) at desk
# scale; the worst observed ratio over n <= 10^4 is 3.25 (at n = 8).
PREIMAGE_GROWTH_K = 4

_EULER_GAMMA = 0.5772156649015329


class NontotientError(ValueError):
    """Raised when an operation requires a totient value and gets none."""


@dataclass(frozen=True)
class PreimageSet:
    """The complete fiber {m : phi(m) = n} and its largest prime divisor.

    ``p_max`` is the largest prime dividing any listed preimage, 0 when
    the fiber is empty.
    """

    n: int
    preimages: tuple[int, ...]
    p_max: int


def inverse_totient(n: int) -> PreimageSet:
    """Every m with phi(m) = n, ascending; empty iff n is a nontotient."""
    if n < 1:
        raise ValueError("inverse_totient expects a positive integer")
    if n > PREIMAGE_INPUT_LIMIT:
        raise ValueError("inverse_totient supports n <= 2^50")
    if n == 1:
        return PreimageSet(1, (1, 2), 2)
    if n % 2 == 1:
        return PreimageSet(n, (), 0)

    divisors = factorize(n).divisors()
    odd_primes = sorted(
        (d + 1 for d in divisors if d > 1 and is_prime(d + 1)), reverse=True
    )
    found: list[int] = []
    best = 0

    def assemble(start: int, remaining: int, acc: int, top: int) -> None:
        nonlocal best
        if remaining == 1:
            # odd part complete: m = acc or 2*acc
            found.append(acc)
            found.append(2 * acc)
            best = max(best, top)
            return
        if remaining & (remaining - 1) == 0:
            # remaining = 2^j: close with the factor 2^(j+1)
            found.append(acc * 2 * remaining)
            best = max(best, top if top else 2)
        for i in range(start, len(odd_primes)):
            p = odd_primes[i]
            if remaining % (p - 1):
                continue
            contrib, part = p - 1, p
            while remaining % contrib == 0:
                assemble(i + 1, remaining // contrib, acc * part, top if top else p)
                contrib *= p
                part *= p

    assemble(0, n, 1, 0)
    found.sort()
    return PreimageSet(n, tuple(found), best if found else 0)


def is_totient(n: int) -> bool:
    """True iff some m has phi(m) = n.  Odd n > 1 are rejected outright."""
    if n < 1:
        raise ValueError("is_totient expects a positive integer")
    if n == 1:
        return True
    if n % 2 == 1:
        return False
    return bool(inverse_totient(n).preimages)


def p_max(n: int) -> int:
    """The largest prime dividing any preimage of the totient value n."""
    fiber = inverse_totient(n)
    if not fiber.preimages:
        raise NontotientError(f"{n} is not in the range of the totient function")
    return fiber.p_max


def _ratio_bound(m: float) -> float:
    # explicit bound on m/phi(m), valid for all m >= 3
    ll = math.log(math.log(m))
    return math.exp(_EULER_GAMMA) * ll + 3.0 / ll


def preimage_sieve_bound(x: int) -> int:
    """A bound B such that every m with phi(m) <= x satisfies m <= B."""
    cap = 16 * x + 100
    return max(100, int(x * _ratio_bound(cap)) + 1)


def _phi_sieve(bound: int) -> array:
    phi = array("q", range(bound + 1))
    for p in range(2, bound + 1):
        if phi[p] == p:
            for k in range(p, bound + 1, p):
                phi[k] -= phi[k] // p
    return phi


def totients_up_to(x: int, return_bitmap: bool = False):
    """V(x): the number of distinct totient values <= x.

    With ``return_bitmap`` the per-value membership bitmap (index 0
    unused) is returned alongside the count.
    """
    if x < 1:
        raise ValueError("totients_up_to expects a positive integer")
    if x > SIEVE_INPUT_LIMIT:
        raise ValueError("totients_up_to supports x <= 10^7")
    bound = preimage_sieve_bound(x)
    phi = _phi_sieve(bound)
    bitmap = bytearray(x + 1)
    for m in range(1, bound + 1):
        v = phi[m]
        if v <= x:
            bitmap[v] = 1
    count = sum(bitmap)
    if return_bitmap:
        return count, bitmap
    return count
