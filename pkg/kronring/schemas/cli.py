"""
Pydantic Data Models for the Command Line

This module defines request/result schemas with validation. Ring values are
always rendered as strings so arbitrary-precision rationals stay lossless.
"""

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from kronring.core.config import settings
from kronring.rings import parse_ring

Subcommand = Literal["mul", "pow", "table", "check", "bench"]
StrategyName = Literal["naive", "kronecker", "regular", "representation"]
OutputFormat = Literal["plain", "json"]


class CliRequest(BaseModel):
    """
    Schema for one CLI invocation

    Example:
        {
            "subcommand": "mul",
            "ring": "mod:7",
            "modulus": "x^3-1",
            "operands": ["1+2*x+3*x^2", "4+5*x+6*x^2"]
        }
    """

    subcommand: Subcommand
    ring: str = Field("rational", description="Ring selection string")
    modulus: Optional[str] = Field(None, description="Modulus polynomial text")
    operands: List[str] = Field(default_factory=list, description="Operand texts")
    exponent: Optional[int] = Field(None, ge=0, description="Exponent for pow")
    strategy: StrategyName = Field(
        default_factory=lambda: settings.DEFAULT_STRATEGY,
        description="Multiplication strategy",
    )
    output: OutputFormat = Field(default_factory=lambda: settings.DEFAULT_OUTPUT)
    verify: bool = Field(False, description="Run every strategy and compare")

    # check / bench
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0)
    max_degree: int = Field(default_factory=lambda: settings.CHECK_MAX_DEGREE, ge=1)
    trials: int = Field(default_factory=lambda: settings.CHECK_MODULI_PER_DEGREE, ge=1)
    pairs: int = Field(default_factory=lambda: settings.CHECK_PAIRS_PER_MODULUS, ge=1)
    degrees: Union[List[int], str] = Field(
        default_factory=lambda: list(settings.BENCH_DEGREES)
    )
    reps: int = Field(default_factory=lambda: settings.BENCH_REPS, ge=1)
    strategies: Optional[List[StrategyName]] = None

    @field_validator("ring")
    @classmethod
    def check_ring(cls, v: str) -> str:
        """Reject malformed ring selections early"""
        parse_ring(v)
        return v

    @field_validator("degrees", mode="before")
    @classmethod
    def parse_degrees(cls, v):
        """Parse degrees from comma-separated string or list"""
        if isinstance(v, str):
            try:
                v = [int(d.strip()) for d in v.split(",") if d.strip()]
            except ValueError:
                raise ValueError(f"degrees must be comma-separated integers: {v!r}")
        if not v or any(d < 1 for d in v):
            raise ValueError("every degree must be >= 1")
        return v

    @model_validator(mode="after")
    def check_arguments(self) -> "CliRequest":
        """Per-subcommand required arguments"""
        if self.subcommand in ("mul", "pow", "table") and not self.modulus:
            raise ValueError(f"{self.subcommand} requires --modulus")
        if self.subcommand == "mul" and len(self.operands) != 2:
            raise ValueError("mul takes exactly two operands")
        if self.subcommand == "pow" and self.exponent is None:
            raise ValueError("pow requires an exponent")
        return self


class MulResult(BaseModel):
    """Coordinates of a product; the JSON shape of `mul`"""

    ring: str = Field(..., description="Ring selection string")
    modulus: List[str] = Field(..., description="Ascending modulus coefficients")
    coordinates: List[str] = Field(..., description="Ascending coordinates")


class PowResult(MulResult):
    """Coordinates of xi^k"""

    exponent: int = Field(..., ge=0)


class TableResult(BaseModel):
    """Structure matrix M_f rendered block by block"""

    ring: str
    modulus: List[str]
    block_size: int = Field(..., ge=1)
    rows: List[List[str]] = Field(..., description="n rows of n^2 entries")


class BenchRow(BaseModel):
    """One (degree, strategy) measurement"""

    degree: int = Field(..., ge=1)
    strategy: str
    setup_ns: int = Field(..., ge=0)
    per_product_ns: int = Field(..., ge=0)
    reps: int = Field(..., ge=1)
    checksum: str


class BenchReport(BaseModel):
    """Benchmark rows; checksums agree across strategies at every degree"""

    ring: str
    seed: int
    rows: List[BenchRow] = Field(default_factory=list)

    def rows_for(self, degree: int) -> List[BenchRow]:
        return [row for row in self.rows if row.degree == degree]


class PropertyResult(BaseModel):
    """Outcome of one property over one ring (and degree, when it applies)"""

    name: str
    ring: str
    degree: Optional[int] = None
    cases: int = Field(0, ge=0)
    passed: bool = True
    counterexample: Optional[str] = None


class CheckReport(BaseModel):
    """Full verification run"""

    seed: int
    results: List[PropertyResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[PropertyResult]:
        return [result for result in self.results if not result.passed]
