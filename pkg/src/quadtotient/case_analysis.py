"""Case decomposition of the totient hits of a quadratic.

For each n <= x with P(n) a totient value, the largest prime p dividing
any preimage of P(n) sorts n into one of four bins: p > 4ax (a huge
prime-minus-one divisor), p <= T (only small primes), or the middle range
T < p <= 4ax split by whether Omega_T(p - 1) clears A * loglog T.
``survey`` aggregates the bins over a full range; the report serializes
to CSV (one row per n) or a JSON summary.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith_core import big_omega_below, factorize, is_prime
from .quad_poly import QuadPoly
from .totient_range import inverse_totient

_MIN_X_FOR_THRESHOLD = math.exp(math.e)  # loglog must exceed 1
_MIN_T = math.e  # loglog T must be positive

CSV_HEADER = "n,value,case,p_max,v,omega_T_pm1"


class Case(enum.Enum):
    NOT_TOTIENT = "NotTotient"
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    SMALL_P = "SmallP"


@dataclass(frozen=True)
class CaseRecord:
    n: int
    value: int
    totient: bool
    p_max: Optional[int]
    v: Optional[int]
    omega_T_pm1: Optional[int]
    case: Case

    def csv_row(self) -> str:
        tail = ("" if f is None else str(f) for f in (self.p_max, self.v, self.omega_T_pm1))
        return f"{self.n},{self.value},{self.case.value}," + ",".join(tail)


@dataclass(frozen=True)
class CaseReport:
    """Aggregated survey: V_P = v1 + v2 + v3 + smallp and V_P + nontotient = x."""

    poly: QuadPoly
    x: int
    T: float
    A: float
    v_p: int
    v1: int
    v2: int
    v3: int
    smallp: int
    nontotient: int
    records: Optional[tuple[CaseRecord, ...]] = None

    def to_csv(self) -> str:
        if self.records is None:
            raise ValueError("survey was run without keep_records")
        lines = [CSV_HEADER]
        lines.extend(record.csv_row() for record in self.records)
        return "\n".join(lines) + "\n"

    def summary_dict(self) -> dict:
        return {
            "poly": self.poly.to_text(),
            "x": self.x,
            "T": self.T,
            "A": self.A,
            "V_P": self.v_p,
            "V1": self.v1,
            "V2": self.v2,
            "V3": self.v3,
            "smallp": self.smallp,
            "nontotient": self.nontotient,
        }


def threshold_T(x: float, a_param: float, delta: float = 0.0) -> float:
    """exp(((1 - delta)/A) * (log x / loglog x)), the survey cutoff scale."""
    if x <= _MIN_X_FOR_THRESHOLD:
        raise ValueError("threshold_T requires x > e^e")
    if not 0.5 < a_param < 1.0:
        raise ValueError("A must lie in (1/2, 1)")
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1]")
    return math.exp(((1.0 - delta) / a_param) * (math.log(x) / math.log(math.log(x))))


def classify(poly: QuadPoly, n: int, x: int, t_cut: float, a_param: float) -> CaseRecord:
    """Classify a single n <= x by the largest preimage prime of poly(n).

    Ties Omega_T(p - 1) == A * loglog T go to Case3 (the side whose bound
    binds in the exponent balance).
    """
    if not 1 <= n <= x:
        raise ValueError("classify requires 1 <= n <= x")
    if t_cut <= _MIN_T:
        raise ValueError("T must exceed e so that loglog T is positive")
    value = poly(n)
    if value < 1:
        raise ValueError(f"polynomial value at n={n} is {value}; must be positive")
    fiber = inverse_totient(value)
    if not fiber.preimages:
        return CaseRecord(n, value, False, None, None, None, Case.NOT_TOTIENT)
    pm = fiber.p_max
    assert value % (pm - 1) == 0  # p | m forces p - 1 | phi(m)
    cofactor = value // (pm - 1)
    omega = big_omega_below(pm - 1, t_cut)
    if pm > 4 * poly.a * x:
        case = Case.CASE1
    elif pm <= t_cut:
        case = Case.SMALL_P
    elif omega < a_param * math.log(math.log(t_cut)):
        case = Case.CASE2
    else:
        case = Case.CASE3
    return CaseRecord(n, value, True, pm, cofactor, omega, case)


def survey(
    poly: QuadPoly,
    x: int,
    t_cut: float,
    a_param: float,
    keep_records: bool = False,
) -> CaseReport:
    """Classify every n in [1, x] and tally the cases."""
    if x < 1:
        raise ValueError("survey requires x >= 1")
    poly(x)  # fail fast on range overflow before the sweep
    tallies = {case: 0 for case in Case}
    records: list[CaseRecord] = []
    for n in range(1, x + 1):
        record = classify(poly, n, x, t_cut, a_param)
        tallies[record.case] += 1
        if keep_records:
            records.append(record)
    v1, v2, v3 = tallies[Case.CASE1], tallies[Case.CASE2], tallies[Case.CASE3]
    smallp = tallies[Case.SMALL_P]
    return CaseReport(
        poly=poly,
        x=x,
        T=t_cut,
        A=a_param,
        v_p=v1 + v2 + v3 + smallp,
        v1=v1,
        v2=v2,
        v3=v3,
        smallp=smallp,
        nontotient=tallies[Case.NOT_TOTIENT],
        records=tuple(records) if keep_records else None,
    )


def square_divisor_count(poly: QuadPoly, x: int, bound: int) -> int:
    """How many n <= x have poly(n) divisible by a square above bound."""
    if x < 1 or bound < 1:
        raise ValueError("square_divisor_count requires x >= 1 and bound >= 1")
    poly(x)
    count = 0
    for n in range(1, x + 1):
        value = poly(n)
        if value < 1:
            raise ValueError(f"polynomial value at n={n} is {value}; must be positive")
        if factorize(value).largest_square_divisor() > bound:
            count += 1
    return count


def ew_density_probe(poly: QuadPoly, t_cut: float, x: int) -> Fraction:
    """Fraction of n <= x admitting a prime p > T with (p - 1) | poly(n)."""
    if x < 1:
        raise ValueError("ew_density_probe requires x >= 1")
    poly(x)
    count = 0
    for n in range(1, x + 1):
        value = poly(n)
        if value < 1:
            raise ValueError(f"polynomial value at n={n} is {value}; must be positive")
        divisors = factorize(value).divisors()
        if any(d + 1 > t_cut and is_prime(d + 1) for d in divisors):
            count += 1
    return Fraction(count, x)
