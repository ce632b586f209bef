"""
Pydantic schemas for CLI command validation
"""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from vcloud.vcloud_mpc.schemas.params_schemas import (
    MAX_SECURITY_BITS,
    RUNNABLE_GROUP_PROFILES,
    CheatMode,
    ProtocolParams,
)
from vcloud.vcloud_mpc.utils import settings


class RunConfig(BaseModel):
    """Options shared by the end-to-end demos"""

    n: int = Field(default_factory=settings.get_default_n, ge=2, le=32, description="Number of garblers")
    k: int = Field(default_factory=settings.get_default_k, ge=1, le=MAX_SECURITY_BITS, description="Security bits")
    modulus_bits: int = Field(default_factory=settings.get_modulus_bits, description="BBS modulus size |N|")
    group_profile: str = Field(default_factory=settings.get_group_profile, description="OT group profile")
    seed: int = Field(0, ge=0, description="Scheduler seed")
    cheat: CheatMode | None = Field(None, description="none, random or flip:<wire>:<pos>")
    csv: Path | None = Field(None, description="Write the traffic ledger here as CSV")
    out: Path | None = Field(None, description="Write the message trace here as JSON lines")
    threads: bool = Field(False, description="Run one thread per party")
    full_accounting: bool = Field(False, description="Print costs at full-size parameters")

    @field_validator("cheat", mode="before")
    @classmethod
    def validate_cheat(cls, v):
        if isinstance(v, str):
            return CheatMode.parse(v)
        return v

    @field_validator("group_profile")
    @classmethod
    def validate_group_profile(cls, v: str) -> str:
        if v not in RUNNABLE_GROUP_PROFILES:
            raise ValueError(f"Group profile must be one of {', '.join(RUNNABLE_GROUP_PROFILES)}")
        return v

    def protocol_params(self) -> ProtocolParams:
        return ProtocolParams(
            n=self.n, k=self.k, modulus_bits=self.modulus_bits, group_profile=self.group_profile
        )


class DemoAdderRequest(RunConfig):
    """demo-adder validation"""

    x: int = Field(..., ge=0, description="First addend")
    y: int = Field(..., ge=0, description="Second addend")
    bits: int = Field(8, ge=1, le=32, description="Adder width")

    @model_validator(mode="after")
    def validate_operands(self) -> "DemoAdderRequest":
        limit = 1 << self.bits
        if self.x >= limit or self.y >= limit:
            raise ValueError(f"Operands must fit in {self.bits} bits")
        return self


class DemoAtmRequest(RunConfig):
    """demo-atm validation; coordinates are blocks East / South of the origin"""

    east: int = Field(..., ge=0, lt=1 << 11, description="Client blocks East")
    south: int = Field(..., ge=0, lt=1 << 11, description="Client blocks South")
    locations_csv: Path | None = Field(None, description="ATM table, bundled downtown table when omitted")

    @field_validator("locations_csv")
    @classmethod
    def validate_locations_csv(cls, v: Path | None) -> Path | None:
        if v is not None and not v.is_file():
            raise ValueError(f"No such file: {v}")
        return v


class CircuitRequest(BaseModel):
    """circuit info | check | convert"""

    action: Literal["info", "check", "convert"]
    path: str = Field(..., min_length=1, description="Circuit file or builtin:<name>[:<width>]")
    output: Path | None = Field(None, description="Destination of convert, stdout when omitted")

    @field_validator("path")
    @classmethod
    def validate_path(cls, v: str) -> str:
        if not v.startswith("builtin:") and not Path(v).is_file():
            raise ValueError(f"No such file: {v}")
        return v


class AnalyzeRequest(BaseModel):
    """analyze: cost formulas over a range of n"""

    n_min: int = Field(2, ge=1, description="Smallest number of garblers")
    n_max: int = Field(8, ge=1, description="Largest number of garblers")
    k: int = Field(128, ge=1, description="Security bits")
    p_bits: int = Field(3072, ge=2, description="OT group modulus size |p|")
    modulus_bits: int = Field(3072, ge=2, description="BBS modulus size |N|")
    circuit: str = Field("builtin:adder32", description="Circuit file or builtin:<name>[:<width>]")
    csv: Path | None = Field(None, description="Write the table here, stdout when omitted")

    @model_validator(mode="after")
    def validate_range(self) -> "AnalyzeRequest":
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        return self
