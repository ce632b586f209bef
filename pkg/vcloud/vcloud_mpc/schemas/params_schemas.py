"""
Pydantic schemas for protocol, cost and circuit parameters
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

RUNNABLE_GROUP_PROFILES = ("test", "desk256")
MAX_SECURITY_BITS = 256


class ProtocolParams(BaseModel):
    """Parameters of one garbling/evaluation session"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, le=32, description="Number of garbling servers")
    k: int = Field(..., ge=1, le=MAX_SECURITY_BITS, description="Security parameter in bits")
    modulus_bits: int = Field(128, ge=16, le=1024, description="Bit length of the BBS modulus N")
    group_profile: str = Field("test", description="OT group profile")

    @field_validator("modulus_bits")
    @classmethod
    def validate_modulus_bits(cls, v: int) -> int:
        if v % 2:
            raise ValueError("Modulus size must be even (two primes of equal size)")
        return v

    @field_validator("group_profile")
    @classmethod
    def validate_group_profile(cls, v: str) -> str:
        if v not in RUNNABLE_GROUP_PROFILES:
            raise ValueError(f"Group profile must be one of {', '.join(RUNNABLE_GROUP_PROFILES)}")
        return v

    @property
    def value_bits(self) -> int:
        """Length nk+1 of a garbled value"""
        return self.n * self.k + 1


class CostParams(BaseModel):
    """Inputs of the closed-form cost formulas"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Number of garbling servers")
    k: int = Field(..., ge=1, description="Security parameter in bits")
    p_bits: int = Field(3072, ge=2, description="Bit length of the OT group modulus |p|")
    modulus_bits: int = Field(3072, ge=2, description="Bit length of the BBS modulus |N|")
    W: int = Field(..., ge=1, description="Total wire count")
    W_i: int = Field(..., ge=1, description="Input wire count")
    W_o: int = Field(..., ge=1, description="Output wire count")
    N_g: int = Field(..., ge=1, description="Gate count")

    @model_validator(mode="after")
    def validate_wire_count(self) -> "CostParams":
        if self.W != self.W_i + self.N_g:
            raise ValueError(f"W must equal W_i + N_g ({self.W} != {self.W_i} + {self.N_g})")
        if self.W_o > self.W:
            raise ValueError("W_o cannot exceed W")
        return self


class GateCountReport(BaseModel):
    """XOR-/AND-class gate totals with a per-block breakdown"""

    xor_class: int = Field(..., ge=0)
    and_class: int = Field(..., ge=0)
    breakdown: dict[str, tuple[int, int]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_totals(self) -> "GateCountReport":
        if self.breakdown:
            xor_total = sum(x for x, _ in self.breakdown.values())
            and_total = sum(a for _, a in self.breakdown.values())
            if (xor_total, and_total) != (self.xor_class, self.and_class):
                raise ValueError("Totals must equal the sum of the breakdown")
        return self

    @property
    def total(self) -> int:
        return self.xor_class + self.and_class


class AtmLocation(BaseModel):
    """One row of the ATM table; coordinates are blocks East / South of the origin"""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Bank name")
    east: int = Field(..., ge=0, description="Blocks East")
    south: int = Field(..., ge=0, description="Blocks South")

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        v = v.strip()
        if not v:
            raise ValueError("Name must not be blank")
        return v

    def describe(self) -> str:
        return f"{self.name} {self.south} South {self.east} East"


class CheatMode(BaseModel):
    """Evaluator misbehaviour used to exercise verification"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["random-outputs", "flip-bit"]
    wire: int = Field(0, ge=0, description="Output position whose value is tampered")
    pos: int = Field(0, ge=0, description="Bit position, 0 is the signal bit")

    @classmethod
    def parse(cls, text: str) -> "CheatMode | None":
        """``none``, ``random`` / ``random-outputs``, or ``flip:<wire>:<pos>``"""
        text = text.strip().lower()
        if text in ("", "none"):
            return None
        if text in ("random", "random-outputs"):
            return cls(kind="random-outputs")
        if text.startswith(("flip:", "flip-bit:")):
            _, _, rest = text.partition(":")
            wire, _, pos = rest.partition(":")
            if not wire.isdigit() or not (pos or "0").isdigit():
                raise ValueError("flip mode must look like flip:<wire>:<pos>")
            return cls(kind="flip-bit", wire=int(wire), pos=int(pos or 0))
        raise ValueError(f"Unknown cheat mode {text!r}")
