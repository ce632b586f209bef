from vcloud.vcloud_mpc.oblivious_transfer.group import DESK_GROUP, TEST_GROUP, SafePrimeGroup, get_group
from vcloud.vcloud_mpc.oblivious_transfer.naor_pinkas import (
    Ot2Chooser,
    Ot2Sender,
    Ot2Transcript,
    Ot4Chooser,
    Ot4Sender,
    Ot4Transcript,
    ot2,
    ot4,
)

__all__ = [
    "DESK_GROUP",
    "TEST_GROUP",
    "Ot2Chooser",
    "Ot2Sender",
    "Ot2Transcript",
    "Ot4Chooser",
    "Ot4Sender",
    "Ot4Transcript",
    "SafePrimeGroup",
    "get_group",
    "ot2",
    "ot4",
]
