"""
Sweeps of the reciprocity laws and the integrality bounds.

Each sweep returns the inputs at which the identity fails; an empty list
means every case in range passed.
"""

from math import gcd
from typing import List, Tuple

from loguru import logger

from dedekind_lab.core import (
    dedekind_integrality,
    dedekind_naive,
    dedekind_reciprocity_rhs,
    rademacher_integrality,
    rademacher_naive,
    rademacher_reciprocity_rhs,
    units,
)


def _coprime_pairs(b_max: int) -> List[Tuple[int, int]]:
    return [
        (a, b)
        for a in range(1, b_max + 1)
        for b in range(1, b_max + 1)
        if gcd(a, b) == 1
    ]


def verify_dedekind_reciprocity(b_max: int) -> List[Tuple[int, int]]:
    """Coprime pairs 1 <= a, b <= b_max where s(a,b) + s(b,a) differs from the closed form."""
    failures = []
    pairs = _coprime_pairs(b_max)
    for a, b in pairs:
        if dedekind_naive(a, b) + dedekind_naive(b, a) != dedekind_reciprocity_rhs(a, b):
            failures.append((a, b))
    logger.info(f"Dedekind reciprocity: {len(pairs)} pair(s), {len(failures)} failure(s)")
    return failures


def verify_rademacher_reciprocity(b_max: int) -> List[Tuple[int, int, int]]:
    """Triples (n, a, b), coprime a, b <= b_max and 1 <= n <= a + b, where the law fails."""
    failures = []
    checked = 0
    for a, b in _coprime_pairs(b_max):
        for n in range(1, a + b + 1):
            checked += 1
            lhs = rademacher_naive(n, a, b) + rademacher_naive(n, b, a)
            if lhs != rademacher_reciprocity_rhs(n, a, b):
                failures.append((n, a, b))
    logger.info(f"Dedekind-Rademacher reciprocity: {checked} triple(s), {len(failures)} failure(s)")
    return failures


def verify_integrality(b_max: int, n_max: int) -> List[Tuple[int, int, int]]:
    """
    Inputs where 6b s(a, b) or 12b r_n(a, b) fails to be an integer.

    Dedekind failures are reported with n = -1; units a of every
    b <= b_max are covered, with shifts 0 <= n <= n_max.
    """
    failures = []
    for b in range(1, b_max + 1):
        for a in units(b) or [0]:
            if not dedekind_integrality(a, b):
                failures.append((-1, a, b))
            for n in range(n_max + 1):
                if not rademacher_integrality(n, a, b):
                    failures.append((n, a, b))
    logger.info(f"Integrality up to b={b_max}, n={n_max}: {len(failures)} failure(s)")
    return failures


def verify_reciprocity_integrality(s_max: int, r_max: int) -> List[Tuple[int, int, int]]:
    """
    Integrality over the inputs the reciprocity sweeps cover.

    Every coprime pair with 1 <= a, b <= s_max is checked for 6b s(a, b),
    and every triple with coprime a, b <= r_max and 1 <= n <= a + b for
    12b r_n(a, b). Failures use the same (n, a, b) layout as
    `verify_integrality`.
    """
    failures = []
    for a, b in _coprime_pairs(s_max):
        if not dedekind_integrality(a, b):
            failures.append((-1, a, b))
    checked = 0
    for a, b in _coprime_pairs(r_max):
        for n in range(1, a + b + 1):
            checked += 1
            if not rademacher_integrality(n, a, b):
                failures.append((n, a, b))
    logger.info(f"Integrality over reciprocity inputs ({checked} triple(s)): {len(failures)} failure(s)")
    return failures
