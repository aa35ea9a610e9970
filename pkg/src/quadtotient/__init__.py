"""Totient values of integer quadratics.

Exact arithmetic primitives, root counting for quadratic congruences,
inverse-totient enumeration, the largest-prime case survey, and the
numerical exponent lab, with a CLI front end (``quadtotient``).
"""

from .arith_core import (
    Factorization,
    big_omega_below,
    euler_phi,
    factorize,
    is_prime,
    is_smooth,
    is_square,
    iter_primes,
    kronecker,
    omega_below,
    primes_up_to,
    sqrt_mod_prime,
    squarefree_part,
)
from .bound_lab import (
    ExponentSolution,
    b_exponent,
    bounds_summary,
    crossover_eps,
    crossover_inequality_holds,
    holder_objective,
    twisted_exception_scan,
    excess_factor_exponent,
    product_split,
    product_twisted,
    solve_balance_A,
    split_fraction,
    v1_exponent,
    v2_exponent,
    v3_exponent,
)
from .case_analysis import (
    Case,
    CaseRecord,
    CaseReport,
    classify,
    ew_density_probe,
    square_divisor_count,
    survey,
    threshold_T,
)
from .quad_poly import (
    ParityClass,
    QuadPoly,
    prime_power_roots,
    reduce_at_root,
    rho,
    rho_prime_power,
    roots_mod,
)
from .totient_range import (
    NontotientError,
    PreimageSet,
    inverse_totient,
    is_totient,
    p_max,
    totients_up_to,
)

__version__ = "0.1.0"

__all__ = [
    "Case",
    "CaseRecord",
    "CaseReport",
    "ExponentSolution",
    "Factorization",
    "NontotientError",
    "ParityClass",
    "PreimageSet",
    "QuadPoly",
    "b_exponent",
    "big_omega_below",
    "bounds_summary",
    "classify",
    "crossover_eps",
    "crossover_inequality_holds",
    "euler_phi",
    "ew_density_probe",
    "factorize",
    "holder_objective",
    "inverse_totient",
    "is_prime",
    "is_smooth",
    "is_square",
    "is_totient",
    "iter_primes",
    "kronecker",
    "twisted_exception_scan",
    "excess_factor_exponent",
    "omega_below",
    "p_max",
    "prime_power_roots",
    "primes_up_to",
    "product_split",
    "product_twisted",
    "reduce_at_root",
    "rho",
    "rho_prime_power",
    "roots_mod",
    "solve_balance_A",
    "split_fraction",
    "square_divisor_count",
    "squarefree_part",
    "sqrt_mod_prime",
    "survey",
    "threshold_T",
    "totients_up_to",
    "v1_exponent",
    "v2_exponent",
    "v3_exponent",
]
