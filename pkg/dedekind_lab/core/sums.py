"""
Dedekind sums and Dedekind-Rademacher sums.

Two evaluators are provided for s(a, b): the defining O(b) sum and a
reciprocity-driven recursion with O(log b) steps. The Dedekind-Rademacher
sum r_n(a, b) only has the defining sum; its reciprocity law is exposed as
an independent right-hand side for cross-checking.
"""

from fractions import Fraction
from math import gcd

from dedekind_lab.core.errors import DomainError, RangeError
from dedekind_lab.core.models import make_rad_args, make_sum_args
from dedekind_lab.core.rational import floor_of, mod_inverse

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
TWELFTH = Fraction(1, 12)


def sawtooth(x: Fraction) -> Fraction:
    """
    The sawtooth ((x)).

    Returns {x} - 1/2 for non-integer x and 0 for integer x, where
    {x} = x - floor(x) lies in [0, 1) for negative x as well.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor_of(x) - HALF


def chi(a: int, n: int) -> int:
    """Indicator of a | n."""
    if a < 1:
        raise DomainError(f"chi expects a positive divisor, got {a}")
    return 1 if n % a == 0 else 0


def dedekind_naive(a: int, b: int, reduce: bool = False) -> Fraction:
    """
    Evaluate s(a, b) by its defining sum over k = 0..b-1.

    Each factor ((m/b)) equals (2(m mod b) - b) / 2b off the multiples of b,
    so the sum is accumulated as an integer over the common denominator 4b^2.

    Args:
        a: First argument, coprime to b
        b: Positive modulus
        reduce: Reduce a modulo b before summing

    Returns:
        Exact value of s(a, b)

    Raises:
        DomainError: If b < 1 or gcd(a, b) != 1
    """
    args = make_sum_args(a, b)
    a, b = args.a, args.b
    if reduce:
        a %= b
    # k = 0 contributes ((0)) = 0
    total = sum(
        (2 * r - b) * (2 * k - b)
        for k in range(1, b)
        if (r := k * a % b)
    )
    return Fraction(total, 4 * b * b)


def _reciprocity_rhs(a: int, b: int) -> Fraction:
    # -1/4 + (a/b + 1/ab + b/a) / 12 over the common denominator 12ab
    return Fraction(a * a + b * b + 1 - 3 * a * b, 12 * a * b)


def dedekind_fast(a: int, b: int) -> Fraction:
    """
    Evaluate s(a, b) with the Euclidean recursion.

    Reduce a into [0, b) by periodicity, then trade s(a, b) for
    rhs(a, b) - s(b, a) by reciprocity, until the reduced argument is 0
    (which forces b = 1, where the sum is empty).

    Raises:
        DomainError: If b < 1 or gcd(a, b) != 1
    """
    args = make_sum_args(a, b)
    a, b = args.a % args.b, args.b
    total = Fraction(0)
    sign = 1
    while a != 0:
        total += sign * _reciprocity_rhs(a, b)
        sign = -sign
        a, b = b % a, a
    return total


def dedekind_reciprocity_rhs(a: int, b: int) -> Fraction:
    """
    Right-hand side of Dedekind reciprocity:
    -1/4 + (a/b + 1/(ab) + b/a) / 12.

    Raises:
        DomainError: If a or b is not positive, or gcd(a, b) != 1
    """
    if a < 1 or b < 1:
        raise DomainError(f"Reciprocity needs positive arguments, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise DomainError(f"Reciprocity needs coprime arguments, got ({a}, {b})")
    return -QUARTER + TWELFTH * (Fraction(a, b) + Fraction(1, a * b) + Fraction(b, a))


def rademacher_naive(n: int, a: int, b: int) -> Fraction:
    """
    Evaluate r_n(a, b) by its defining sum of (((ka + n)/b)) ((k/b)).

    Raises:
        DomainError: If n < 0, b < 1 or gcd(a, b) != 1
    """
    args = make_rad_args(n, a, b)
    n, a, b = args.n, args.a, args.b
    total = sum(
        (2 * r - b) * (2 * k - b)
        for k in range(1, b)
        if (r := (k * a + n) % b)
    )
    return Fraction(total, 4 * b * b)


def rademacher_reciprocity_rhs(n: int, a: int, b: int) -> Fraction:
    """
    Right-hand side of the reciprocity law for Dedekind-Rademacher sums.

    The law is stated for n = 1, ..., a + b only, so other shifts are
    rejected rather than extrapolated.

    Args:
        n: Shift, 1 <= n <= a + b
        a: Positive argument
        b: Positive argument, coprime to a

    Returns:
        The closed form that r_n(a, b) + r_n(b, a) must equal

    Raises:
        RangeError: If n lies outside [1, a + b]
        DomainError: If a or b is not positive, or gcd(a, b) != 1
    """
    if a < 1 or b < 1:
        raise DomainError(f"Reciprocity needs positive arguments, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise DomainError(f"Reciprocity needs coprime arguments, got ({a}, {b})")
    if not 1 <= n <= a + b:
        raise RangeError(f"Shift n = {n} outside [1, {a + b}] for ({a}, {b})")

    # Modulo 1 every residue is 0, and the sawtooth of an integer vanishes
    a_inv = mod_inverse(a, b) if b > 1 else 0
    b_inv = mod_inverse(b, a) if a > 1 else 0

    quadratic = Fraction(n * n, 2 * a * b)
    linear = Fraction(n, 2) * (Fraction(1, a) + Fraction(1, b) + Fraction(1, a * b))
    constant = TWELFTH * (Fraction(b, a) + Fraction(a, b) + Fraction(1, a * b))
    saw = HALF * (
        sawtooth(Fraction(a_inv * n, b))
        + sawtooth(Fraction(b_inv * n, a))
        + sawtooth(Fraction(n, a))
        + sawtooth(Fraction(n, b))
    )
    indicator = QUARTER * (1 + chi(a, n) + chi(b, n))
    return quadratic - linear + constant + saw + indicator


def dedekind_integrality(a: int, b: int) -> bool:
    """True when 6b * s(a, b) is an integer."""
    return (6 * b * dedekind_naive(a, b)).denominator == 1


def rademacher_integrality(n: int, a: int, b: int) -> bool:
    """True when 12b * r_n(a, b) is an integer."""
    return (12 * b * rademacher_naive(n, a, b)).denominator == 1
