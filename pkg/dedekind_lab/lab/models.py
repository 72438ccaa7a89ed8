"""
Record models for the theorem lab and the command-line harness.

This module defines the pydantic models that carry scan verdicts,
level-set partitions, census rows, bench timings and parsed commands.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, ConfigDict, field_serializer, model_validator

from dedekind_lab.core import format_rational, units


class Verdict(str, Enum):
    """Outcome of checking one pair against a divisibility theorem."""
    CONSISTENT = "consistent"
    VIOLATION = "violation"


class Method(str, Enum):
    """Which evaluator computes s(a, b)."""
    NAIVE = "naive"
    FAST = "fast"


class OutputFormat(str, Enum):
    """Report formats written to standard output."""
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


class Subcommand(str, Enum):
    """Subcommands of the command-line harness."""
    EVAL_S = "eval-s"
    EVAL_R = "eval-r"
    RECIP_CHECK = "recip-check"
    RECIP_CHECK_R = "recip-check-r"
    CLASSES = "classes"
    COUNT = "count"
    VERIFY = "verify"
    CENSUS = "census"
    BENCH = "bench"


class VerifyTarget(str, Enum):
    """What `verify` checks."""
    THM1 = "thm1"
    THM3 = "thm3"
    COR1 = "cor1"
    COR2 = "cor2"
    FIXTURES = "fixtures"
    RECIP = "recip"
    RECIP_R = "recip-r"
    INTEGRALITY = "integrality"


class TheoremReport(BaseModel):
    """
    Verdict for one unit pair under a divisibility theorem.

    With n unset the pair is checked against b | (1 - a1 a2)(a1 - a2) and
    s1, s2 hold Dedekind sums; with n set it is checked against
    b | (6n^2 + 1 - a1 a2)(a2 - a1) and s1, s2 hold r_n values.
    """
    b: int = Field(..., ge=1, description="Modulus")
    n: Optional[int] = Field(None, ge=0, description="Shift for Dedekind-Rademacher scans")
    a1: int = Field(..., description="First unit of the pair")
    a2: int = Field(..., description="Second unit of the pair")
    s1: Fraction = Field(..., description="Sum value at a1")
    s2: Fraction = Field(..., description="Sum value at a2")
    sums_equal: bool = Field(..., description="Whether s1 == s2")
    divisibility_holds: bool = Field(..., description="Whether the theorem's divisibility holds")
    verdict: Verdict = Field(..., description="violation iff sums are equal and divisibility fails")

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_verdict(self) -> "TheoremReport":
        expected = (
            Verdict.VIOLATION
            if self.sums_equal and not self.divisibility_holds
            else Verdict.CONSISTENT
        )
        if self.verdict != expected:
            raise ValueError(f"verdict {self.verdict.value} contradicts the flags (expected {expected.value})")
        return self

    @field_serializer("s1", "s2", when_used="json")
    def _serialize_sum(self, value: Fraction) -> str:
        return format_rational(value)


class LevelSetTable(BaseModel):
    """
    Partition of the units modulo b by the value of s(x, b).

    Keys are exact sum values in ascending order; each member list is
    strictly increasing, and together the lists are exactly the units in
    [1, b-1].
    """
    b: int = Field(..., ge=1, description="Modulus")
    entries: Dict[Fraction, List[int]] = Field(
        default_factory=dict,
        description="Sum value -> residues attaining it"
    )

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_partition(self) -> "LevelSetTable":
        seen = set()
        for value, members in self.entries.items():
            if any(x >= y for x, y in zip(members, members[1:])):
                raise ValueError(f"members of class {format_rational(value)} are not strictly increasing")
            if seen.intersection(members):
                raise ValueError(f"class {format_rational(value)} overlaps another class")
            seen.update(members)
        expected = set(units(self.b))
        if seen != expected:
            missing = sorted(expected - seen)
            extra = sorted(seen - expected)
            raise ValueError(f"classes do not cover the units mod {self.b}: missing {missing}, extra {extra}")
        return self

    @property
    def unit_count(self) -> int:
        return sum(len(members) for members in self.entries.values())

    def class_sizes(self) -> List[int]:
        return [len(members) for members in self.entries.values()]

    def members_of(self, value: Fraction) -> List[int]:
        return list(self.entries.get(Fraction(value), []))

    @field_serializer("entries", when_used="json")
    def _serialize_entries(self, entries: Dict[Fraction, List[int]]) -> List[Dict[str, object]]:
        return [
            {"value": format_rational(value), "size": len(members), "members": members}
            for value, members in entries.items()
        ]


class CensusRow(BaseModel):
    """Class-size statistics of s(., b) for one modulus."""
    b: int = Field(..., ge=1, description="Modulus")
    r: int = Field(..., ge=0, description="Number of distinct prime factors of b")
    unit_count: int = Field(..., ge=0, description="Units in [1, b - 1]")
    num_classes: int = Field(..., ge=0, description="Number of distinct sum values")
    min_class_size: int = Field(..., ge=0, description="Smallest level set")
    max_class_size: int = Field(..., ge=0, description="Largest level set")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_sizes(self) -> "CensusRow":
        if self.min_class_size > self.max_class_size:
            raise ValueError("min_class_size exceeds max_class_size")
        return self


class BenchRecord(BaseModel):
    """Timing of one evaluator on one batch of random coprime pairs."""
    method: Method = Field(..., description="Evaluator timed")
    b_bits: int = Field(..., ge=1, description="Bit length of every modulus in the batch")
    trials: int = Field(..., ge=1, description="Pairs in the batch")
    mean_time_ns: Optional[float] = Field(None, description="Mean time per evaluation, None if skipped")
    checksum: Optional[Fraction] = Field(None, description="Exact sum of all results, None if skipped")
    skipped: bool = Field(False, description="Whether the evaluator was skipped at this magnitude")

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_serializer("checksum", when_used="json")
    def _serialize_checksum(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else format_rational(value)


# Request model
class CommandRequest(BaseModel):
    """A parsed command-line request, validated before dispatch."""
    subcommand: Subcommand
    args: List[int] = Field(default_factory=list, description="Positional integer arguments")
    target: Optional[Fraction] = Field(None, description="Value c for `count`")
    check: Optional[VerifyTarget] = Field(None, description="What `verify` checks")
    output_format: OutputFormat = Field(OutputFormat.TABLE, description="Report format")
    method: Method = Field(Method.NAIVE, description="Evaluator for level sets and census")
    b_min: Optional[int] = Field(None, ge=1)
    b_max: Optional[int] = Field(None, ge=1)
    n_max: Optional[int] = Field(None, ge=0)
    p_max: Optional[int] = Field(None, ge=2)
    bits: Optional[int] = Field(None, ge=2)
    trials: Optional[int] = Field(None, ge=1)
    seed: int = Field(0, ge=0)
    workers: int = Field(1, ge=1)
    scaling: bool = False

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def _check_arity(self) -> "CommandRequest":
        arity = {
            Subcommand.EVAL_S: 2,
            Subcommand.EVAL_R: 3,
            Subcommand.RECIP_CHECK: 2,
            Subcommand.RECIP_CHECK_R: 3,
            Subcommand.CLASSES: 1,
            Subcommand.COUNT: 1,
        }.get(self.subcommand, 0)
        if len(self.args) != arity:
            raise ValueError(f"{self.subcommand.value} takes {arity} integer argument(s), got {len(self.args)}")

        if self.subcommand == Subcommand.COUNT and self.target is None:
            raise ValueError("count needs a value c")
        if self.subcommand == Subcommand.VERIFY:
            self._check_verify_flags()
        if self.subcommand == Subcommand.CENSUS:
            if self.b_min is None or self.b_max is None:
                raise ValueError("census needs --b-min and --b-max")
            if self.b_min > self.b_max:
                raise ValueError(f"--b-min {self.b_min} exceeds --b-max {self.b_max}")
        if self.subcommand == Subcommand.BENCH and (self.bits is None or self.trials is None):
            raise ValueError("bench needs --bits and --trials")
        return self

    def _check_verify_flags(self) -> None:
        needs = {
            VerifyTarget.THM1: ["b_max"],
            VerifyTarget.THM3: ["b_max", "n_max"],
            VerifyTarget.COR1: ["p_max"],
            VerifyTarget.COR2: ["p_max", "n_max"],
            VerifyTarget.FIXTURES: [],
            VerifyTarget.RECIP: ["b_max"],
            VerifyTarget.RECIP_R: ["b_max"],
            VerifyTarget.INTEGRALITY: ["b_max", "n_max"],
        }
        if self.check is None:
            raise ValueError("verify needs a target")
        for name in needs[self.check]:
            if getattr(self, name) is None:
                raise ValueError(f"verify {self.check.value} needs --{name.replace('_', '-')}")
