"""
Core package for Dedekind Lab.

This package contains the exact rational substrate and the sum engine.
"""

from .errors import DomainError, RangeError

from .rational import (
    ArithOp,
    rational_make,
    rational_arith,
    floor_of,
    mod_inverse,
    is_prime,
    distinct_prime_factor_count,
    units,
    format_rational,
    parse_rational
)

from .models import SumArgs, RadArgs, make_sum_args, make_rad_args

from .sums import (
    sawtooth,
    chi,
    dedekind_naive,
    dedekind_fast,
    dedekind_reciprocity_rhs,
    rademacher_naive,
    rademacher_reciprocity_rhs,
    dedekind_integrality,
    rademacher_integrality
)

__all__ = [
    # From errors.py
    'DomainError',
    'RangeError',

    # From rational.py
    'ArithOp',
    'rational_make',
    'rational_arith',
    'floor_of',
    'mod_inverse',
    'is_prime',
    'distinct_prime_factor_count',
    'units',
    'format_rational',
    'parse_rational',

    # From models.py
    'SumArgs',
    'RadArgs',
    'make_sum_args',
    'make_rad_args',

    # From sums.py
    'sawtooth',
    'chi',
    'dedekind_naive',
    'dedekind_fast',
    'dedekind_reciprocity_rhs',
    'rademacher_naive',
    'rademacher_reciprocity_rhs',
    'dedekind_integrality',
    'rademacher_integrality'
]
