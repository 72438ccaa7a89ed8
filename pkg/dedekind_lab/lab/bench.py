"""
Naive versus fast timing of s(a, b).

Inputs are drawn from ``random.Random(seed)``: every modulus b is uniform in
[2^(bits-1), 2^bits) and a is uniform in [1, b), redrawn until coprime. The
same seed gives the same batch on every machine, so checksums are
reproducible even though timings are not.
"""

import random
import statistics
import time
from fractions import Fraction
from math import gcd
from typing import Callable, List, Optional, Sequence, Tuple

from loguru import logger

from dedekind_lab import config
from dedekind_lab.core import DomainError, dedekind_fast, dedekind_naive
from dedekind_lab.lab.models import BenchRecord, Method


def random_coprime_pairs(bits: int, count: int, seed: int) -> List[Tuple[int, int]]:
    """Draw `count` coprime pairs (a, b) with b of exactly `bits` bits."""
    if bits < 2:
        raise DomainError(f"bits must be at least 2, got {bits}")
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        b = rng.randrange(1 << (bits - 1), 1 << bits)
        a = rng.randrange(1, b)
        if gcd(a, b) == 1:
            pairs.append((a, b))
    return pairs


def time_evaluator(
    evaluate: Callable[[int, int], Fraction],
    pairs: Sequence[Tuple[int, int]]
) -> Tuple[float, Fraction]:
    """
    Time one evaluator over a batch.

    Returns:
        Mean nanoseconds per evaluation, and the exact sum of all results
    """
    start = time.perf_counter_ns()
    values = [evaluate(a, b) for a, b in pairs]
    elapsed = time.perf_counter_ns() - start
    return elapsed / len(pairs), sum(values, Fraction(0))


def bench(bits: int, trials: int, seed: int, naive_max_bits: Optional[int] = None) -> List[BenchRecord]:
    """
    Time both evaluators on the same batch.

    Above `naive_max_bits` the O(b) evaluator is not run and its record is
    marked skipped.
    """
    if trials < 1:
        raise DomainError(f"trials must be at least 1, got {trials}")
    if naive_max_bits is None:
        naive_max_bits = config.NAIVE_MAX_BITS
    pairs = random_coprime_pairs(bits, trials, seed)

    records = []
    if bits <= naive_max_bits:
        mean_ns, checksum = time_evaluator(dedekind_naive, pairs)
        records.append(BenchRecord(method=Method.NAIVE, b_bits=bits, trials=trials,
                                   mean_time_ns=mean_ns, checksum=checksum))
        logger.info(f"naive: {trials} trial(s) at {bits} bits, {mean_ns:.0f} ns mean")
    else:
        logger.warning(f"Skipping naive evaluator at {bits} bits (limit {naive_max_bits})")
        records.append(BenchRecord(method=Method.NAIVE, b_bits=bits, trials=trials, skipped=True))

    mean_ns, checksum = time_evaluator(dedekind_fast, pairs)
    records.append(BenchRecord(method=Method.FAST, b_bits=bits, trials=trials,
                               mean_time_ns=mean_ns, checksum=checksum))
    logger.info(f"fast: {trials} trial(s) at {bits} bits, {mean_ns:.0f} ns mean")
    return records


def checksums_agree(records: Sequence[BenchRecord]) -> bool:
    """Whether every evaluator that ran produced the same checksum."""
    checksums = {record.checksum for record in records if not record.skipped}
    return len(checksums) <= 1


def naive_scaling_ratio(bits: int, trials: int, seed: int, repeats: int = 5) -> float:
    """
    Time ratio of the naive evaluator between moduli 2b and b.

    The batch pairs odd b of `bits - 1` bits with odd a coprime to b, so
    (a, b) and (a, 2b) are both valid. Small and large batches are timed
    alternately and the median of the per-repeat ratios is returned.
    """
    if bits < 3:
        raise DomainError(f"bits must be at least 3, got {bits}")
    if repeats < 1:
        raise DomainError(f"repeats must be at least 1, got {repeats}")
    rng = random.Random(seed)
    small = []
    while len(small) < trials:
        b = rng.randrange(1 << (bits - 2), 1 << (bits - 1)) | 1
        a = rng.randrange(1, b) | 1
        if a < b and gcd(a, b) == 1:
            small.append((a, b))
    large = [(a, 2 * b) for a, b in small]

    # warm-up
    time_evaluator(dedekind_naive, small[:1])
    ratios = []
    for _ in range(repeats):
        small_ns = time_evaluator(dedekind_naive, small)[0]
        large_ns = time_evaluator(dedekind_naive, large)[0]
        ratios.append(large_ns / small_ns)

    ratio = statistics.median(ratios)
    logger.info(f"naive scaling at {bits} bits: ratios {[round(r, 2) for r in ratios]}, median {ratio:.2f}")
    return ratio
