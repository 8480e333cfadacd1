"""Prime adjacency to squarefree multiples of 6: experiment harness."""

from ._primebias import (
    BiasReport,
    RunResult,
    Tally,
    adjacent_multiple_of_six,
    bias_ratio,
    count_isolated,
    count_nonsqf_twins,
    count_sqf_neighbors,
    count_sqf_twins,
    count_twins,
    excess,
    is_prime,
    is_squarefree,
    nth_prime_bound,
    redistribution_report,
    relative_difference,
    run_experiment,
    small_primes,
    unbiased_ratio,
    unbiased_ratio_all_integers,
)

__all__ = [
    "BiasReport",
    "RunResult",
    "Tally",
    "adjacent_multiple_of_six",
    "bias_ratio",
    "count_isolated",
    "count_nonsqf_twins",
    "count_sqf_neighbors",
    "count_sqf_twins",
    "count_twins",
    "excess",
    "is_prime",
    "is_squarefree",
    "nth_prime_bound",
    "redistribution_report",
    "relative_difference",
    "run_experiment",
    "small_primes",
    "unbiased_ratio",
    "unbiased_ratio_all_integers",
]
