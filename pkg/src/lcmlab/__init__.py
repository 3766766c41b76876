"""lcmlab: exact lower bounds, divisors, and period tables for lcms of
integer sequences, with a brute-force verification harness."""

from .errors import (
    BadRange,
    DomainError,
    HypothesisViolated,
    KTooLarge,
    RepeatedTerm,
    ZeroSum,
    ZeroTerm,
)
from .exact_arith import (
    binomial,
    factorial,
    gcd,
    is_integer_multiple,
    is_prime,
    lcm,
    lcm_list,
    lemma_t3_check,
    valuation,
)
from .sequences import (
    ArithmeticProgression,
    QuadraticSequence,
    SequenceWindow,
    difference_products,
    explicit_window,
    lcm_window,
    require_positive_coprime,
    window,
)
from .identities import (
    central_binomial_estimate_check,
    identity8_check,
    identity9_check,
    lemma1_gamma,
    theorem1_multiple_check,
)
from .bounds import (
    BoundReport,
    N2Plus1Bound,
    c1_bound,
    conjecture1_bound,
    headline_bound,
    lcm_squares_plus_one,
    n2plus1_bound,
    t2_divisor,
    t3_equality,
    t4_bounds,
    t5_t6_ratio_scan,
    t7_divisor,
    vk_argmax,
    vk_value,
)
from .consecutive import (
    GkTable,
    gk_closed_form,
    gk_direct,
    gk_recurrence,
    gk_table,
    lcm_binomials,
    lcm_consecutive,
    t8_divisor,
    t8_equality,
    t9_equality,
    t9_multiple,
    write_gk_csv,
)

__version__ = "0.1.0"
