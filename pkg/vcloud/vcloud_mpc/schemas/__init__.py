"""
Pydantic schemas for parameters and CLI validation
"""

from vcloud.vcloud_mpc.schemas.cli_schemas import (
    AnalyzeRequest,
    CircuitRequest,
    DemoAdderRequest,
    DemoAtmRequest,
    RunConfig,
)
from vcloud.vcloud_mpc.schemas.params_schemas import (
    AtmLocation,
    CheatMode,
    CostParams,
    GateCountReport,
    ProtocolParams,
)

__all__ = [
    "AnalyzeRequest",
    "AtmLocation",
    "CheatMode",
    "CircuitRequest",
    "CostParams",
    "DemoAdderRequest",
    "DemoAtmRequest",
    "GateCountReport",
    "ProtocolParams",
    "RunConfig",
]
