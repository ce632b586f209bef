from vcloud.vcloud_mpc.simnet.ledger import Phase, TrafficLedger
from vcloud.vcloud_mpc.simnet.network import (
    CLIENT_ID,
    COMBINER_ID,
    EVALUATOR_ID,
    Message,
    Network,
    PartyContext,
    PartyId,
    Recv,
    cloud_parties,
)
from vcloud.vcloud_mpc.simnet.scheduler import run_deterministic, run_threaded

__all__ = [
    "CLIENT_ID",
    "COMBINER_ID",
    "EVALUATOR_ID",
    "Message",
    "Network",
    "PartyContext",
    "PartyId",
    "Phase",
    "Recv",
    "TrafficLedger",
    "cloud_parties",
    "run_deterministic",
    "run_threaded",
]
