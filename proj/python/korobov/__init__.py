"""Spectrum, information complexity and tractability of worst-case L2
approximation in weighted Korobov spaces."""

from ._korobov import (
    C_tau_q,
    DimensionMismatch,
    DomainError,
    Error,
    InsufficientBox,
    MonotonicityViolation,
    NotApplicable,
    Params,
    RangeViolation,
    ResourceLimit,
    approximate,
    brute_force_spectrum,
    classify,
    count_box_oracle,
    curse_witness,
    delta,
    eigen_sum_tau,
    enumerate_top,
    fit_exponent,
    h_norm,
    info_complexity,
    info_complexity_upper_bound,
    l2_error,
    nth_eigenvalue,
    optimal_index_set,
    product_r,
    riemann_zeta,
    spt_exponent,
    univariate_r,
    worst_case_error,
    worst_case_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
