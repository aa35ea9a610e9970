"""Exponent functions, balance solving, and character-twisted prime products.

The two middle-range exponent curves A log A - A + 1 and
(A + 1/2) log(A + 1/2) - A + 1/2 cross once in (1/2, 1); bisecting their
difference gives the balance point near 0.7604 and a common exponent near
0.0313.  Natural logarithms throughout: the identities of the form
B^(A loglog T) = (log T)^(A log B) need the same base in both positions,
and only the natural log produces the companion constants e*log(2)/2 and
1/log(2) as stated.

Products over primes are accumulated in ascending order in float mode for
reproducibility; an exact Fraction mode (y <= 10^4) calibrates the float
error.  Root solving is bisection with sign-checked brackets, never a
derivative method.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith_core import is_square, kronecker, primes_up_to, squarefree_part

EULER_GAMMA = 0.5772156649015329

_RESIDUAL_CEILING = 1e-12
_EXACT_Y_LIMIT = 10 ** 4
_FLOAT_Y_LIMIT = 10 ** 8


@dataclass(frozen=True)
class ExponentSolution:
    """Balance point of the two middle-range exponents.

    residual = |v2_exponent(a_star) - v3_exponent(a_star)| <= 1e-12.
    """

    a_star: float
    common_exponent: float
    residual: float
    iterations: int


def v2_exponent(a_param: float) -> float:
    """A log A - A + 1 for A in (0, 1]."""
    if not 0.0 < a_param <= 1.0:
        raise ValueError("A must lie in (0, 1]")
    return a_param * math.log(a_param) - a_param + 1.0


def v3_exponent(a_param: float) -> float:
    """(A + 1/2) log(A + 1/2) - A + 1/2 for A in (0, 1]."""
    if not 0.0 < a_param <= 1.0:
        raise ValueError("A must lie in (0, 1]")
    half_up = a_param + 0.5
    return half_up * math.log(half_up) - a_param + 0.5


def b_exponent(a_param: float, b_param: float) -> float:
    """A log B - B + 1; maximized in B at B = A, where it equals v2_exponent(A)."""
    if not 0.0 < a_param <= 1.0:
        raise ValueError("A must lie in (0, 1]")
    if b_param <= 0.0:
        raise ValueError("B must be positive")
    return a_param * math.log(b_param) - b_param + 1.0


def excess_factor_exponent(eps: float) -> float:
    """(1 + eps) log(1 + eps) - eps for eps > 0."""
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    return (1.0 + eps) * math.log(1.0 + eps) - eps


def holder_objective(a_param: float) -> float:
    """2^A / (2A); its minimum over A > 0 is e*log(2)/2, at A = 1/log 2."""
    if a_param <= 0.0:
        raise ValueError("A must be positive")
    return 2.0 ** a_param / (2.0 * a_param)


def v1_exponent() -> float:
    """1 - e*log(2)/2, the log-power saving in the huge-prime case."""
    return 1.0 - math.e * math.log(2.0) / 2.0


def solve_balance_A(tolerance: float = 1e-12) -> ExponentSolution:
    """Bisect v2_exponent - v3_exponent on (1/2, 1) down to ``tolerance``.

    Refinement continues until the bracket is within tolerance and the
    residual is at most 1e-12, so the returned solution always satisfies
    the type invariant regardless of a looser tolerance.
    """
    if tolerance < 1e-14:
        raise ValueError("tolerance must be at least 1e-14")
    gap = lambda A: v2_exponent(A) - v3_exponent(A)
    lo, hi = 0.5, 1.0
    if not gap(lo) > 0.0 > gap(hi):
        raise ArithmeticError("no sign change on (1/2, 1)")
    iterations = 0
    while hi - lo > tolerance or abs(gap((lo + hi) / 2.0)) > _RESIDUAL_CEILING:
        mid = (lo + hi) / 2.0
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
        if iterations > 200:
            break
    a_star = (lo + hi) / 2.0
    return ExponentSolution(
        a_star=a_star,
        common_exponent=v2_exponent(a_star),
        residual=abs(gap(a_star)),
        iterations=iterations,
    )


def crossover_inequality_holds(eps: float) -> bool:
    """Whether (1 + eps/2) log(1 + eps/2) - eps/2 < eps * log(2) / 4."""
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    return excess_factor_exponent(eps / 2.0) < eps * math.log(2.0) / 4.0


def crossover_eps(tolerance: float = 1e-12) -> float:
    """The eps in (0.1, 3) where the crossover inequality turns false."""
    if tolerance < 1e-12:
        raise ValueError("tolerance must be at least 1e-12")
    diff = lambda eps: excess_factor_exponent(eps / 2.0) - eps * math.log(2.0) / 4.0
    lo, hi = 0.1, 3.0
    if not diff(lo) < 0.0 < diff(hi):
        raise ArithmeticError("no sign change on (0.1, 3)")
    while hi - lo > tolerance:
        mid = (lo + hi) / 2.0
        if diff(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _check_product_args(d: int, y: float, exact: bool) -> None:
    if d == 0:
        raise ValueError("d must be nonzero")
    if abs(d) > 1 << 63:
        raise ValueError("|d| exceeds the supported range 2^63")
    if y < 3:
        raise ValueError("y must be at least 3")
    if exact and y > _EXACT_Y_LIMIT:
        raise ValueError("exact mode supports y <= 10^4")
    if y > _FLOAT_Y_LIMIT:
        raise ValueError("y exceeds the supported range 10^8")


def product_split(d: int, y: float, exact: bool = False) -> Union[float, Fraction]:
    """prod (1 - 2/q) over odd primes q <= y with (d|q) = 1, ascending."""
    _check_product_args(d, y, exact)
    acc: Union[float, Fraction] = Fraction(1) if exact else 1.0
    for q in primes_up_to(int(y)):
        if q == 2 or kronecker(d, q) != 1:
            continue
        acc *= Fraction(q - 2, q) if exact else 1.0 - 2.0 / q
    return acc


def product_twisted(d: int, y: float, exact: bool = False) -> Union[float, Fraction]:
    """prod (1 - (d|q)/q) over odd primes q <= y, ascending."""
    _check_product_args(d, y, exact)
    acc: Union[float, Fraction] = Fraction(1) if exact else 1.0
    for q in primes_up_to(int(y)):
        if q == 2:
            continue
        chi = kronecker(d, q)
        if chi:
            acc *= Fraction(q - chi, q) if exact else 1.0 - chi / q
    return acc


def split_fraction(disc: int, a_coef: int, y: int) -> Fraction:
    """Fraction of odd primes q <= y, q not dividing 2aD, with (D|q) = 1."""
    if disc == 0 or a_coef == 0:
        raise ValueError("D and a must be nonzero")
    if is_square(disc):
        raise ValueError("square discriminant gives a degenerate character")
    if y < 3:
        raise ValueError("y must be at least 3")
    excluded = 2 * a_coef * disc
    split = total = 0
    for q in primes_up_to(y):
        if q == 2 or excluded % q == 0:
            continue
        total += 1
        if kronecker(disc, q) == 1:
            split += 1
    return Fraction(split, total)


def twisted_exception_scan(limit: int, y: float) -> tuple[list[int], Fraction]:
    """Flag d in [2, limit] whose twisted product exceeds (loglog|3d|)^2.

    The product is taken at the squarefree part of d.  Returns the flagged
    d values and their fraction of the scanned range.
    """
    if not 2 <= limit <= 10 ** 5:
        raise ValueError("limit must lie in [2, 10^5]")
    if y < 3 or y > _FLOAT_Y_LIMIT:
        raise ValueError("y must lie in [3, 10^8]")
    odd_primes = [q for q in primes_up_to(int(y)) if q > 2]
    flagged = []
    for d in range(2, limit + 1):
        core = squarefree_part(d)
        prod = 1.0
        for q in odd_primes:
            chi = kronecker(core, q)
            if chi:
                prod *= 1.0 - chi / q
        if prod > math.log(math.log(3 * d)) ** 2:
            flagged.append(d)
    return flagged, Fraction(len(flagged), limit - 1)


def bounds_summary() -> dict:
    """The solved constants: balance point, common exponent, and companions."""
    solution = solve_balance_A(1e-12)
    return {
        "A_star": solution.a_star,
        "common_exponent": solution.common_exponent,
        "v1_exponent": v1_exponent(),
        "cor54_crossover": crossover_eps(1e-12),
        "holder_min": holder_objective(1.0 / math.log(2.0)),
    }
