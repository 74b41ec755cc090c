"""Exact-arithmetic toolkit for Gibbs fragmentation processes.

Conditioned record-vector and partition laws, Strassen-type monotone
couplings solved by exact max-flow, and seedable samplers. All
probabilities are `fractions.Fraction` values, never floats.
"""

from gibbsfrag._core import (
    bell_polynomial,
    block_count_distribution,
    conditional_bernoulli,
    couple,
    crp_partition,
    efron_check,
    gamma_coeff,
    gibbs_partition_law,
    p_record_last,
    partition_strassen_explore,
    poisson_binomial_pmf,
    record_law,
    record_law_oracle,
    rising_factorial,
    run_verify,
    sample_fragmentation_crp,
    sample_fragmentation_recursive,
    sample_record_chain,
    split_check,
    stirling_table,
    threshold_law,
    v_array,
    verify_v_recursion,
    weights,
)

__all__ = [
    "bell_polynomial",
    "block_count_distribution",
    "conditional_bernoulli",
    "couple",
    "crp_partition",
    "efron_check",
    "gamma_coeff",
    "gibbs_partition_law",
    "p_record_last",
    "partition_strassen_explore",
    "poisson_binomial_pmf",
    "record_law",
    "record_law_oracle",
    "rising_factorial",
    "run_verify",
    "sample_fragmentation_crp",
    "sample_fragmentation_recursive",
    "sample_record_chain",
    "split_check",
    "stirling_table",
    "threshold_law",
    "v_array",
    "verify_v_recursion",
    "weights",
]

__version__ = "0.1.0"
