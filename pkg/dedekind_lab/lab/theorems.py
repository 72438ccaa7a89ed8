"""
Divisibility theorems, prime-modulus corollaries and the two counterexamples.

Every check here is a necessary-condition scan: sums are grouped by exact
value and each pair inside a group must satisfy the divisibility. The naive
evaluators are the ground truth for all scans.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Callable, Dict, List, Optional, Tuple

from loguru import logger

from dedekind_lab.core import (
    DomainError,
    dedekind_naive,
    is_prime,
    rademacher_naive,
    units,
)
from dedekind_lab.lab.models import TheoremReport, Verdict


def _require_units(b: int, *residues: int) -> None:
    if b < 1:
        raise DomainError(f"Modulus must be positive, got {b}")
    for a in residues:
        if gcd(a, b) != 1:
            raise DomainError(f"{a} is not coprime to {b}")


def thm1_divisibility(a1: int, a2: int, b: int) -> bool:
    """
    Whether b | (1 - a1 a2)(a1 - a2).

    Raises:
        DomainError: If a1 or a2 is not coprime to b
    """
    _require_units(b, a1, a2)
    return (1 - a1 * a2) * (a1 - a2) % b == 0


def thm3_divisibility(n: int, a1: int, a2: int, b: int) -> bool:
    """
    Whether b | (6n^2 + 1 - a1 a2)(a2 - a1).

    Raises:
        DomainError: If n < 0, or a1 or a2 is not coprime to b
    """
    if n < 0:
        raise DomainError(f"Shift must be non-negative, got {n}")
    _require_units(b, a1, a2)
    return (6 * n * n + 1 - a1 * a2) * (a2 - a1) % b == 0


def _report(b: int, n: Optional[int], a1: int, a2: int, s1: Fraction, s2: Fraction) -> TheoremReport:
    sums_equal = s1 == s2
    if n is None:
        divisible = thm1_divisibility(a1, a2, b)
    else:
        divisible = thm3_divisibility(n, a1, a2, b)
    return TheoremReport(
        b=b,
        n=n,
        a1=a1,
        a2=a2,
        s1=s1,
        s2=s2,
        sums_equal=sums_equal,
        divisibility_holds=divisible,
        verdict=Verdict.VIOLATION if sums_equal and not divisible else Verdict.CONSISTENT,
    )


def check_pair(a1: int, a2: int, b: int, n: Optional[int] = None) -> TheoremReport:
    """
    Check one pair of units against a divisibility theorem.

    Args:
        a1: First unit modulo b
        a2: Second unit modulo b
        b: Modulus
        n: Shift; None checks the Dedekind-sum theorem, an integer the
           Dedekind-Rademacher one

    Returns:
        TheoremReport for the pair
    """
    if n is None:
        s1, s2 = dedekind_naive(a1, b), dedekind_naive(a2, b)
    else:
        s1, s2 = rademacher_naive(n, a1, b), rademacher_naive(n, a2, b)
    return _report(b, n, a1, a2, s1, s2)


def _unit_values(b: int, evaluate: Callable[[int], Fraction]) -> Dict[int, Fraction]:
    return {a: evaluate(a) for a in units(b)}


def _equal_pairs(values: Dict[int, Fraction]) -> List[Tuple[int, int]]:
    groups: Dict[Fraction, List[int]] = defaultdict(list)
    for a, value in values.items():
        groups[value].append(a)
    pairs = [pair for members in groups.values() for pair in combinations(members, 2)]
    return sorted(pairs)


def _scan(b: int, n: Optional[int], values: Dict[int, Fraction]) -> List[TheoremReport]:
    reports = [check_pair(a1, a2, b, n) for a1, a2 in _equal_pairs(values)]
    bad = violations(reports)
    if bad:
        logger.warning(f"{len(bad)} violation(s) at b={b}, n={n}")
    logger.debug(f"Scanned b={b}, n={n}: {len(reports)} equal pair(s)")
    return reports


def scan_theorem1(b: int) -> List[TheoremReport]:
    """
    Report every unit pair a1 < a2 modulo b with s(a1, b) = s(a2, b).

    A correct implementation of a true theorem yields no violations.
    """
    if b < 1:
        raise DomainError(f"Modulus must be positive, got {b}")
    return _scan(b, None, _unit_values(b, lambda a: dedekind_naive(a, b)))


def scan_theorem3(n: int, b: int) -> List[TheoremReport]:
    """Report every unit pair a1 < a2 modulo b with r_n(a1, b) = r_n(a2, b)."""
    if b < 1:
        raise DomainError(f"Modulus must be positive, got {b}")
    if n < 0:
        raise DomainError(f"Shift must be non-negative, got {n}")
    return _scan(b, n, _unit_values(b, lambda a: rademacher_naive(n, a, b)))


def violations(reports: List[TheoremReport]) -> List[TheoremReport]:
    return [report for report in reports if report.verdict == Verdict.VIOLATION]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def verify_corollary1(p: int) -> bool:
    """
    Check both directions of: s(a1, p) = s(a2, p) iff a1 = a2 or a1 a2 = 1 (mod p).

    Raises:
        DomainError: If p is not prime
    """
    _require_prime(p)
    values = _unit_values(p, lambda a: dedekind_naive(a, p))
    holds = True
    for a1, a2 in combinations(values, 2):
        equal = values[a1] == values[a2]
        paired = a1 * a2 % p == 1
        if equal != paired:
            logger.warning(f"Corollary fails at p={p}: ({a1}, {a2}) equal={equal} paired={paired}")
            holds = False
    return holds


def verify_corollary2(p: int, n: int) -> bool:
    """
    Check the necessary direction: r_n(a1, p) = r_n(a2, p) forces
    a1 = a2 or a1 a2 = 1 + 6n^2 (mod p). The converse is not claimed.
    """
    _require_prime(p)
    if n < 0:
        raise DomainError(f"Shift must be non-negative, got {n}")
    values = _unit_values(p, lambda a: rademacher_naive(n, a, p))
    holds = True
    for a1, a2 in _equal_pairs(values):
        if (a1 * a2 - 1 - 6 * n * n) % p != 0:
            logger.warning(f"Corollary fails at p={p}, n={n}: ({a1}, {a2})")
            holds = False
    return holds


def corollary2_converse_failures(p: int, n: int) -> List[Tuple[int, int]]:
    """
    Unit pairs a1 < a2 with a1 a2 = 1 + 6n^2 (mod p) whose r_n values differ.

    Exploratory only: these are places where the converse fails.
    """
    _require_prime(p)
    if n < 0:
        raise DomainError(f"Shift must be non-negative, got {n}")
    values = _unit_values(p, lambda a: rademacher_naive(n, a, p))
    return [
        (a1, a2)
        for a1, a2 in combinations(values, 2)
        if (a1 * a2 - 1 - 6 * n * n) % p == 0 and values[a1] != values[a2]
    ]


def counterexample_fixtures() -> List[Tuple[str, bool]]:
    """
    Re-derive the two converse counterexamples.

    Each fixture holds when the divisibility is satisfied while the two
    sums differ and take the documented values.
    """
    dedekind = check_pair(37, 33, 40)
    dedekind_holds = (
        dedekind.divisibility_holds
        and not dedekind.sums_equal
        and dedekind.s1 == Fraction(-13, 16)
        and dedekind.s2 == Fraction(-5, 16)
    )

    rademacher = check_pair(3, 11, 23, n=6)
    rademacher_holds = (
        rademacher.divisibility_holds
        and not rademacher.sums_equal
        and rademacher.s1 == Fraction(-3, 92)
        and rademacher.s2 == Fraction(43, 92)
    )

    return [
        ("b | (1-a1a2)(a1-a2) at (37, 33, 40) yet s(37,40) != s(33,40)", dedekind_holds),
        ("b | (6n^2+1-a1a2)(a2-a1) at (6, 3, 11, 23) yet r_6(3,23) != r_6(11,23)", rademacher_holds),
    ]
