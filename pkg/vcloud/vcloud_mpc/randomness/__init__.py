from vcloud.vcloud_mpc.randomness.bbs import (
    BBS_STATS,
    BbsGenerator,
    BbsPublic,
    BbsTrapdoor,
    bbs_bit_at,
    bbs_next_bit,
    generate_trapdoor,
    random_seed,
)
from vcloud.vcloud_mpc.randomness.expanders import (
    EXPANDER_STATS,
    expand_G,
    expand_pair,
    expand_R,
    expand_R_bits,
    keyed_mask,
)
from vcloud.vcloud_mpc.randomness.wire_shares import (
    WireShareLayout,
    WireShares,
    derive_wire_shares,
    shares_from_stream,
    shares_from_trapdoor,
)

__all__ = [
    "BBS_STATS",
    "EXPANDER_STATS",
    "BbsGenerator",
    "BbsPublic",
    "BbsTrapdoor",
    "WireShareLayout",
    "WireShares",
    "bbs_bit_at",
    "bbs_next_bit",
    "derive_wire_shares",
    "expand_G",
    "expand_R",
    "expand_R_bits",
    "expand_pair",
    "generate_trapdoor",
    "keyed_mask",
    "random_seed",
    "shares_from_stream",
    "shares_from_trapdoor",
]
