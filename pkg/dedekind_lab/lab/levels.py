"""
Level sets of s(., b) over the units modulo b, and the class-size census.

The census only records data; it makes no claim about how many solutions
s(x, b) = c has.
"""

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List

from loguru import logger

from dedekind_lab.core import (
    DomainError,
    dedekind_fast,
    dedekind_naive,
    distinct_prime_factor_count,
    units,
)
from dedekind_lab.lab.models import CensusRow, LevelSetTable, Method


def evaluator(method: Method) -> Callable[[int, int], Fraction]:
    """The s(a, b) evaluator for a method."""
    return dedekind_fast if Method(method) == Method.FAST else dedekind_naive


def level_sets(b: int, method: Method = Method.NAIVE) -> LevelSetTable:
    """
    Partition the units modulo b by the exact value of s(x, b).

    Args:
        b: Positive modulus
        method: Evaluator used for the sums

    Returns:
        LevelSetTable with keys ascending and members ascending
    """
    if b < 1:
        raise DomainError(f"Modulus must be positive, got {b}")
    evaluate = evaluator(method)
    groups: Dict[Fraction, List[int]] = defaultdict(list)
    for a in units(b):
        groups[evaluate(a, b)].append(a)
    return LevelSetTable(b=b, entries={value: groups[value] for value in sorted(groups)})


def count_solutions(b: int, c: Fraction, method: Method = Method.NAIVE) -> int:
    """Number of units x modulo b with s(x, b) = c; 0 when c is not attained."""
    return len(level_sets(b, method).members_of(c))


def census_row(b: int, method: Method = Method.NAIVE) -> CensusRow:
    table = level_sets(b, method)
    sizes = table.class_sizes()
    return CensusRow(
        b=b,
        r=distinct_prime_factor_count(b),
        unit_count=table.unit_count,
        num_classes=len(sizes),
        min_class_size=min(sizes, default=0),
        max_class_size=max(sizes, default=0),
    )


def census(b_min: int, b_max: int, method: Method = Method.NAIVE, workers: int = 1) -> List[CensusRow]:
    """
    One CensusRow per modulus in [b_min, b_max], ordered by b.

    With workers > 1 the moduli are spread over a process pool; rows are
    sorted afterwards so the output does not depend on scheduling.
    """
    if not 1 <= b_min <= b_max:
        raise DomainError(f"Expected 1 <= b_min <= b_max, got [{b_min}, {b_max}]")
    moduli = range(b_min, b_max + 1)
    logger.info(f"Census over b in [{b_min}, {b_max}] with {workers} worker(s), method={Method(method).value}")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(census_row, moduli, [method] * len(moduli)))
    else:
        rows = [census_row(b, method) for b in moduli]
    return sorted(rows, key=lambda row: row.b)
