"""
Per-wire share layout over a party's BBS bit stream

Wire w uses the 2k+1 bits after offset w(2k+1) (bit indices start at 1):
k bits for the share of w0, k bits for the share of w1, then the lambda share.
Shares are read most significant bit first.
"""

from collections.abc import Callable, Sequence
from typing import NamedTuple

from vcloud.vcloud_mpc.randomness.bbs import BbsTrapdoor, bbs_bit_at
from vcloud.vcloud_mpc.utils.bits import msb_bits_to_int


class WireShares(NamedTuple):
    share0: int
    share1: int
    lam: int

    def share(self, b: int) -> int:
        return self.share1 if b else self.share0


class WireShareLayout:
    def __init__(self, k: int):
        self.k = k
        self.stride = 2 * k + 1

    def base(self, wire: int) -> int:
        return wire * self.stride

    def indices(self, wire: int) -> range:
        return range(self.base(wire) + 1, self.base(wire) + self.stride + 1)

    def share_indices(self, wire: int, b: int) -> range:
        start = self.base(wire) + 1 + b * self.k
        return range(start, start + self.k)

    def lambda_index(self, wire: int) -> int:
        return self.base(wire) + self.stride

    def total_bits(self, n_wires: int) -> int:
        return n_wires * self.stride


def derive_wire_shares(bit_at: Callable[[int], int], wire: int, k: int) -> WireShares:
    """Shares of ``wire`` from any 1-based bit source"""
    layout = WireShareLayout(k)
    return WireShares(
        share0=msb_bits_to_int(bit_at(j) for j in layout.share_indices(wire, 0)),
        share1=msb_bits_to_int(bit_at(j) for j in layout.share_indices(wire, 1)),
        lam=bit_at(layout.lambda_index(wire)),
    )


def shares_from_stream(stream: Sequence[int], wire: int, k: int) -> WireShares:
    """``stream[0]`` holds bit 1"""
    return derive_wire_shares(lambda j: stream[j - 1], wire, k)


def shares_from_trapdoor(trapdoor: BbsTrapdoor, seed: int, wire: int, k: int) -> WireShares:
    return derive_wire_shares(lambda j: bbs_bit_at(trapdoor, seed, j), wire, k)


def share_from_trapdoor(trapdoor: BbsTrapdoor, seed: int, wire: int, k: int, b: int) -> int:
    """Only the k bits of one share, what the client needs for an input wire"""
    layout = WireShareLayout(k)
    return msb_bits_to_int(bbs_bit_at(trapdoor, seed, j) for j in layout.share_indices(wire, b))


def lambda_from_trapdoor(trapdoor: BbsTrapdoor, seed: int, wire: int, k: int) -> int:
    return bbs_bit_at(trapdoor, seed, WireShareLayout(k).lambda_index(wire))
