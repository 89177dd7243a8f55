"""
Run configuration and selector models for the zeta-relations command line.

Enums here are shared by the exact and numeric layers; the pydantic models
carry the validated flags from argparse to the command classes.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator


class Command(str, Enum):
    """Top-level subcommands"""
    BASIS = "basis"
    MATRIX = "matrix"
    SERIES = "series"
    AUX = "aux"
    VERIFY = "verify"
    CHECK = "check"


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"
    LATEX = "latex"


class RelationStyle(str, Enum):
    PHI_PSI = "phi-psi"
    ZETA_FIBONACCI = "zeta-fibonacci"


class SeriesKind(str, Enum):
    """The four series attached to each s, in column order"""
    PHI = "phi"
    PHI_STAR = "phi*"
    PSI = "psi"
    PSI_STAR = "psi*"

    @property
    def offset(self) -> int:
        return SERIES_KINDS.index(self)

    @property
    def is_phi(self) -> bool:
        return self in (SeriesKind.PHI, SeriesKind.PHI_STAR)

    @property
    def is_alternating(self) -> bool:
        return self in (SeriesKind.PHI_STAR, SeriesKind.PSI_STAR)


SERIES_KINDS = (SeriesKind.PHI, SeriesKind.PHI_STAR, SeriesKind.PSI, SeriesKind.PSI_STAR)


class CoeffFamily(str, Enum):
    """Coefficient tables dumped by the series subcommand"""
    C = "c"
    D = "d"
    E = "e"
    F = "f"
    A = "a"
    B = "b"


class CheckName(str, Enum):
    LEMMA54 = "lemma54"
    FIB8 = "fib8"
    CLOSEDFORMS = "closedforms"


class SequenceSpec(BaseModel):
    """Selector for the recurrence pair; resolved by numeric.sequences"""
    selector: str = Field(default="fibonacci", description="fibonacci, a registry name, trace=<int> or beta=<decimal>")

    @field_validator("selector")
    @classmethod
    def _non_empty(cls, value: str) -> str:
        value = value.strip()
        if not value:
            raise ValueError("sequence selector must not be empty")
        return value


class RunConfig(BaseModel):
    """Validated command-line configuration"""
    command: Command = Field(..., description="Subcommand to run")
    m: int = Field(default=1, ge=1, description="Number of s values (relation space V_m)")
    precision: int = Field(default=60, ge=10, description="Decimal digits for numeric work")
    sequence: SequenceSpec = Field(default_factory=SequenceSpec, description="Recurrence selector")
    format: OutputFormat = Field(default=OutputFormat.TEXT, description="Output format")
    style: RelationStyle = Field(default=RelationStyle.PHI_PSI, description="Relation rendering style")
    out: Optional[str] = Field(default=None, description="Write the document here instead of stdout")
    guard_digits: int = Field(default=10, ge=0, description="Base guard digits")
    scalar: bool = Field(default=False, description="Include the scalar expansion in matrix dumps")
    family: CoeffFamily = Field(default=CoeffFamily.C, description="Coefficient family for the series dump")
    max_j: int = Field(default=4, ge=0, description="Largest j for series/aux dumps")
    check: Optional[CheckName] = Field(default=None, description="Certification to run")
    max_s: int = Field(default=6, ge=1, description="Largest s for the closed-form check")
    points: int = Field(default=20, ge=1, description="Random points for the doubling-identity check")
    seed: int = Field(default=0, description="Seed for random points")
    cross_check_max_m: int = Field(default=6, ge=0, description="Largest m for the dual-path kernel check")
    pole_threshold: str = Field(default="1e-20", description="Pole proximity threshold")
    progress: bool = Field(default=False, description="Show progress bars on stderr")

    class Config:
        use_enum_values = True
