from vcloud.vcloud_mpc.gmw.engine import (
    GmwParty,
    GmwStats,
    eval_and_gate,
    eval_linear_gate,
    r_index,
    run_goldreich,
    share_input,
    xor_shares,
)
from vcloud.vcloud_mpc.gmw.protocol import and_round, gmw_program, round_session, run_parties

__all__ = [
    "GmwParty",
    "GmwStats",
    "and_round",
    "eval_and_gate",
    "eval_linear_gate",
    "gmw_program",
    "r_index",
    "round_session",
    "run_goldreich",
    "run_parties",
    "share_input",
    "xor_shares",
]
