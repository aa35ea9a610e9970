"""Integer quadratics and their congruence structure.

A quadratic a*x^2 + b*x + c is held exactly; the module counts and lists
its roots modulo prime powers and general moduli, and builds the reduced
quadratic obtained by following an arithmetic progression through a root.

Root counts modulo a prime p not dividing 2*a*D come straight from the
Kronecker symbol of the discriminant D (0 or 2 roots, constant across
prime powers).  Singular primes -- p | 2aD, or p dividing all three
coefficients -- are handled by exact lifting: content extraction first,
then level-by-level Hensel steps with a brute split at singular roots.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .arith_core import factorize, is_prime, is_square, kronecker, sqrt_mod_prime

COEF_LIMIT = 1 << 31
VALUE_LIMIT = 1 << 63

# Lifting keeps every root of every prime-power modulus in memory; beyond
# this many residues the modulus is outside the supported range.
_ROOT_SET_LIMIT = 1 << 21


class ParityClass(enum.Enum):
    ALWAYS_ODD = "AlwaysOdd"
    NEVER_DIV_BY_4 = "NeverDivBy4"
    GENERIC = "Generic"


@dataclass(frozen=True)
class QuadPoly:
    """a*x^2 + b*x + c with a != 0 and |a|, |b|, |c| <= 2^31."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a == 0:
            raise ValueError("leading coefficient must be nonzero")
        for name, coef in (("a", self.a), ("b", self.b), ("c", self.c)):
            if abs(coef) > COEF_LIMIT:
                raise ValueError(f"|{name}| exceeds the supported bound 2^31")

    @classmethod
    def parse(cls, text: str) -> "QuadPoly":
        """Build from the text form "a,b,c" (three comma-separated integers)."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected 'a,b,c', got {text!r}")
        try:
            a, b, c = (int(part.strip()) for part in parts)
        except ValueError:
            raise ValueError(f"expected 'a,b,c' with integer entries, got {text!r}") from None
        return cls(a, b, c)

    def to_text(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, n: int) -> int:
        """Exact value at n; values beyond 2^63 in magnitude are rejected."""
        value = (self.a * n + self.b) * n + self.c
        if abs(value) > VALUE_LIMIT:
            raise OverflowError(
                f"value at n={n} exceeds the supported range |value| <= 2^63"
            )
        return value

    def is_irreducible(self) -> bool:
        """Irreducible over the rationals, i.e. the discriminant is not a square."""
        return not is_square(self.discriminant())

    def parity_class(self) -> ParityClass:
        residues = {(((self.a * n + self.b) * n + self.c) % 4) for n in range(4)}
        if residues <= {1, 3}:
            return ParityClass.ALWAYS_ODD
        if 0 not in residues:
            return ParityClass.NEVER_DIV_BY_4
        return ParityClass.GENERIC


def _raw(poly: QuadPoly, n: int) -> int:
    # internal evaluation without the public range guard
    return (poly.a * n + poly.b) * n + poly.c


def _content_valuation(poly: QuadPoly, p: int) -> int:
    g = math.gcd(math.gcd(abs(poly.a), abs(poly.b)), abs(poly.c))
    s = 0
    while g % p == 0:
        g //= p
        s += 1
    return s


def _roots_mod_prime(poly: QuadPoly, p: int) -> list[int]:
    """Roots of poly mod p, assuming p does not divide all coefficients."""
    if p == 2:
        return [t for t in (0, 1) if _raw(poly, t) % 2 == 0]
    if poly.a % p == 0:
        if poly.b % p != 0:
            return [(-poly.c * pow(poly.b, -1, p)) % p]
        return []  # a, b = 0 mod p forces c != 0 mod p: no roots
    disc = poly.discriminant()
    sqrts = sqrt_mod_prime(disc % p, p)
    if not sqrts:
        return []
    inv2a = pow(2 * poly.a, -1, p)
    return sorted({(-poly.b + s) * inv2a % p for s in sqrts})


def prime_power_roots(poly: QuadPoly, p: int, r: int) -> list[int]:
    """All x in [0, p^r) with poly(x) = 0 (mod p^r), ascending.

    Content (a power of p dividing all coefficients) is stripped first;
    the remaining roots are lifted level by level, with a unique Hensel
    step where the derivative is invertible and a p-way split elsewhere.
    """
    if r < 1:
        raise ValueError("exponent must be positive")
    if not is_prime(p):
        raise ValueError("modulus base must be prime")
    if p ** r > VALUE_LIMIT:
        raise ValueError("prime power exceeds the supported range 2^63")
    sigma = _content_valuation(poly, p)
    if sigma >= r:
        if p ** r > _ROOT_SET_LIMIT:
            raise ValueError("root set too large to enumerate")
        return list(range(p ** r))
    if sigma > 0:
        scale = p ** sigma
        stripped = QuadPoly(poly.a // scale, poly.b // scale, poly.c // scale)
        sub = prime_power_roots(stripped, p, r - sigma)
        step = p ** (r - sigma)
        if len(sub) * scale > _ROOT_SET_LIMIT:
            raise ValueError("root set too large to enumerate")
        return sorted(t + j * step for t in sub for j in range(scale))

    roots = _roots_mod_prime(poly, p)
    mod = p
    for _ in range(r - 1):
        nxt = mod * p
        lifted: list[int] = []
        for t in roots:
            deriv = 2 * poly.a * t + poly.b
            if deriv % p:
                inv = pow(deriv % nxt, -1, nxt)
                lifted.append((t - _raw(poly, t) * inv) % nxt)
            elif _raw(poly, t) % nxt == 0:
                lifted.extend(t + j * mod for j in range(p))
            if len(lifted) > _ROOT_SET_LIMIT:
                raise ValueError("root set too large to enumerate")
        roots = lifted
        mod = nxt
    return sorted(roots)


def rho_prime_power(poly: QuadPoly, p: int, r: int) -> int:
    """Number of roots of poly modulo p^r.

    For p not dividing 2*a*D (and no content at p) this is
    1 + kronecker(D, p) for every r; other primes are counted by exact
    lifting.
    """
    if r < 1:
        raise ValueError("exponent must be positive")
    if not is_prime(p):
        raise ValueError("modulus base must be prime")
    if p ** r > VALUE_LIMIT:
        raise ValueError("prime power exceeds the supported range 2^63")
    sigma = _content_valuation(poly, p)
    if sigma >= r:
        return p ** r
    if sigma > 0:
        scale = p ** sigma
        stripped = QuadPoly(poly.a // scale, poly.b // scale, poly.c // scale)
        return scale * rho_prime_power(stripped, p, r - sigma)
    if p != 2 and poly.a % p != 0:
        disc = poly.discriminant()
        if disc % p != 0:
            return 1 + kronecker(disc, p)  # 2 if D splits mod p, else 0
    return len(prime_power_roots(poly, p, r))


def rho(poly: QuadPoly, k: int) -> int:
    """Root count of poly modulo k; multiplicative in k, with rho(1) = 1."""
    if k < 1:
        raise ValueError("modulus must be positive")
    out = 1
    for p, e in factorize(k).factors:
        out *= rho_prime_power(poly, p, e)
        if out == 0:
            return 0
    return out


def roots_mod(poly: QuadPoly, v: int) -> list[int]:
    """The solutions of poly(t) = 0 (mod v) in [0, v), ascending.

    Prime-power root sets are combined with the Chinese Remainder Theorem;
    an empty prime-power set short-circuits to [].
    """
    if v < 1:
        raise ValueError("modulus must be positive")
    parts = []
    for p, e in factorize(v).factors:
        rs = prime_power_roots(poly, p, e)
        if not rs:
            return []
        parts.append((p ** e, rs))
    combined = [0]
    mod = 1
    for pe, rs in parts:
        inv = pow(mod, -1, pe)
        combined = [s + mod * ((t - s) * inv % pe) for s in combined for t in rs]
        if len(combined) > _ROOT_SET_LIMIT:
            raise ValueError("root set too large to enumerate")
        mod *= pe
    return sorted(combined)


def reduce_at_root(poly: QuadPoly, v: int, t: int) -> QuadPoly:
    """The quadratic in u tracing poly(u*v + t)/v + 1 along n = u*v + t.

    Requires v | poly(t).  The result is
    (a*v) u^2 + (2*a*t + b) u + (poly(t)/v + 1), whose discriminant is
    D - 4*a*v.
    """
    if v < 1:
        raise ValueError("v must be positive")
    value = _raw(poly, t)
    if value % v != 0:
        raise ValueError(f"v={v} does not divide the value at t={t}")
    return QuadPoly(poly.a * v, 2 * poly.a * t + poly.b, value // v + 1)
