"""Exact arithmetic for finite cycle sets.

The library works with a cycle set given as a table of n permutations of
{1..n} (row i is the left translation by the i-th generator), represents
elements of the structure group as exponent-vector/permutation pairs,
and builds on that the word calculus, the divisibility lattice, the finite
germ quotient, coprime-class composition, and a desk-scale census engine.
"""

from .calculus import (
    bracket_power,
    cp_to_element,
    germ_words_equal,
    left_fraction,
    omega,
    omega_recursive,
    pi,
    pi_expression,
    right_fraction,
    word_to_element,
    words_equal,
)
from .census import (
    CensusRecord,
    canonical_form,
    dmax_table,
    enumerate_cycle_sets,
    run_census,
    stats,
)
from .core import (
    Component,
    CycleSet,
    DiagonalInfo,
    PermGroupInfo,
    ValidationResult,
    Witness,
    decompose,
    diagonal_map,
    pairing_is_bijective,
    perm_group,
    transpose_cycle_set,
    validate,
)
from .cys import format_cys, parse_cys, read_cys, write_cys
from .garside import (
    BalanceReport,
    delta,
    divisors_of_delta,
    gcd_left,
    gcd_right,
    is_balanced,
    lcm_left,
    lcm_right,
    left_divides,
    right_divides,
)
from .germ import (
    ClassBounds,
    ClassReport,
    ConjectureReport,
    ExchangeResult,
    Germ,
    GermElement,
    a_n_closed_form,
    class_bounds,
    conjecture_report,
    dehornoy_class,
    dehornoy_class_value,
    exchange_check,
    germ,
    germ_length,
    is_permutation_free,
    landau_g,
    max_product_distinct_partition,
    prime_divisors,
    retraction,
)
from .monomial import (
    MonomialElement,
    conjugate_cp,
    identity_element,
    inverse,
    multiply,
    naive_matmul,
    naive_matrix,
    theta,
    transpose,
)
from .zappa import (
    SylowChecks,
    SylowFactor,
    ZappaResult,
    bezout_pair,
    germs_commute_check,
    mixed_equation_check,
    sylow_decompose,
    sylow_group_checks,
    sylow_recompose,
    zappa_compose,
)

__version__ = "0.1.0"
