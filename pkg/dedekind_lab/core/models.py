"""
Validated argument bundles for the sum engine.

These models define the contract every evaluator checks before summing:
a positive modulus and a first argument coprime to it.
"""

from math import gcd

from pydantic import BaseModel, Field, ConfigDict, ValidationError, model_validator

from dedekind_lab.core.errors import DomainError


class SumArgs(BaseModel):
    """Arguments (a, b) of the classical Dedekind sum s(a, b)."""
    a: int = Field(..., description="First argument, coprime to b")
    b: int = Field(..., ge=1, description="Modulus")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_coprime(self) -> "SumArgs":
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) = {gcd(self.a, self.b)}, arguments must be coprime")
        return self


class RadArgs(BaseModel):
    """Arguments (n, a, b) of the Dedekind-Rademacher sum r_n(a, b)."""
    n: int = Field(..., ge=0, description="Non-negative shift")
    a: int = Field(..., description="First argument, coprime to b")
    b: int = Field(..., ge=1, description="Modulus")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_coprime(self) -> "RadArgs":
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) = {gcd(self.a, self.b)}, arguments must be coprime")
        return self


def _summarize(exc: ValidationError) -> str:
    messages = []
    for error in exc.errors():
        field = ".".join(str(loc) for loc in error["loc"])
        messages.append(f"{field}: {error['msg']}" if field else error["msg"])
    return "; ".join(messages)


def make_sum_args(a: int, b: int) -> SumArgs:
    """
    Validate (a, b) for s(a, b).

    Raises:
        DomainError: If b < 1 or gcd(a, b) != 1
    """
    try:
        return SumArgs(a=a, b=b)
    except ValidationError as e:
        raise DomainError(f"Invalid arguments s({a}, {b}): {_summarize(e)}") from e


def make_rad_args(n: int, a: int, b: int) -> RadArgs:
    """
    Validate (n, a, b) for r_n(a, b).

    Raises:
        DomainError: If n < 0, b < 1 or gcd(a, b) != 1
    """
    try:
        return RadArgs(n=n, a=a, b=b)
    except ValidationError as e:
        raise DomainError(f"Invalid arguments r_{n}({a}, {b}): {_summarize(e)}") from e
