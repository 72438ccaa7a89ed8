"""
Exact rational arithmetic and integer helpers.

Every sum value in the package is a ``fractions.Fraction``. Fractions are
always kept in lowest terms with a positive denominator, so two values are
equal exactly when their numerators and denominators are.
"""

from enum import Enum
from fractions import Fraction
from math import gcd
from typing import List

from dedekind_lab.core.errors import DomainError


class ArithOp(str, Enum):
    """Field operations supported by rational_arith."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def rational_make(num: int, den: int) -> Fraction:
    """
    Build a canonical rational num/den.

    Args:
        num: Numerator
        den: Denominator, must be nonzero

    Returns:
        Fraction in lowest terms, sign carried by the numerator

    Raises:
        DomainError: If den is zero
    """
    if den == 0:
        raise DomainError(f"Zero denominator in {num}/{den}")
    return Fraction(num, den)


def rational_arith(x: Fraction, y: Fraction, op: ArithOp) -> Fraction:
    """
    Apply one exact field operation.

    Args:
        x: Left operand
        y: Right operand
        op: Operation to apply

    Returns:
        Canonical result

    Raises:
        DomainError: On division by zero
    """
    op = ArithOp(op)
    if op == ArithOp.ADD:
        return x + y
    if op == ArithOp.SUB:
        return x - y
    if op == ArithOp.MUL:
        return x * y
    if y == 0:
        raise DomainError(f"Division of {format_rational(x)} by zero")
    return x / y


def floor_of(x: Fraction) -> int:
    """Greatest integer <= x (rounds toward minus infinity for negatives too)."""
    return x.numerator // x.denominator


def mod_inverse(a: int, m: int) -> int:
    """
    Inverse of a modulo m.

    Args:
        a: Residue, coprime to m
        m: Modulus, at least 2

    Returns:
        u with 1 <= u <= m - 1 and a*u = 1 (mod m)

    Raises:
        DomainError: If m < 2 or gcd(a, m) != 1
    """
    if m < 2:
        raise DomainError(f"Modulus must be at least 2, got {m}")
    if gcd(a, m) != 1:
        raise DomainError(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


def is_prime(p: int) -> bool:
    """Deterministic trial division."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def distinct_prime_factor_count(b: int) -> int:
    """
    Number of distinct primes dividing b (0 for b = 1).

    Raises:
        DomainError: If b < 1
    """
    if b < 1:
        raise DomainError(f"Expected a positive integer, got {b}")
    count = 0
    d = 2
    while d * d <= b:
        if b % d == 0:
            count += 1
            while b % d == 0:
                b //= d
        d += 1 if d == 2 else 2
    if b > 1:
        count += 1
    return count


def units(b: int) -> List[int]:
    """Residues in [1, b - 1] coprime to b, ascending. Empty for b = 1."""
    if b < 1:
        raise DomainError(f"Modulus must be positive, got {b}")
    return [a for a in range(1, b) if gcd(a, b) == 1]


def format_rational(x: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse the "p/q" or "p" form written by format_rational.

    Raises:
        DomainError: If the text is malformed or the denominator is zero
    """
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return rational_make(int(parts[0]), int(parts[1]))
    except ValueError as e:
        if isinstance(e, DomainError):
            raise
        raise DomainError(f"Invalid rational {text!r}: {e}") from e
    raise DomainError(f"Invalid rational {text!r}")
