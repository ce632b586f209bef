"""
Client-to-garbler seed message

    N (|N| bits) | s_i (|N| bits) | s_ij for each peer j in ascending order (k bits each) | circuit digest (256 bits)
"""

from dataclasses import dataclass

from vcloud.vcloud_mpc.utils.bits import pack_fields, unpack_fields
from vcloud.vcloud_mpc.utils.errors import ParameterError, SessionMismatch, throw

DIGEST_BITS = 256


@dataclass(frozen=True)
class SeedMessage:
    N: int
    seed: int
    pair_seeds: dict[int, int]
    digest: bytes

    def peers(self) -> list[int]:
        return sorted(self.pair_seeds)


def seed_message_widths(n: int, k: int, modulus_bits: int) -> list[int]:
    return [modulus_bits, modulus_bits, *([k] * (n - 1)), DIGEST_BITS]


def seed_message_bits(n: int, k: int, modulus_bits: int) -> int:
    return sum(seed_message_widths(n, k, modulus_bits))


def encode_seed_message(message: SeedMessage, n: int, k: int, modulus_bits: int) -> tuple[bytes, int]:
    if len(message.pair_seeds) != n - 1:
        throw(f"seed message needs {n - 1} pairwise seeds", ParameterError)
    widths = seed_message_widths(n, k, modulus_bits)
    values = [
        message.N,
        message.seed,
        *(message.pair_seeds[j] for j in message.peers()),
        int.from_bytes(message.digest, "big"),
    ]
    try:
        return pack_fields(values, widths), sum(widths)
    except ValueError as e:
        throw(f"seed message field out of range: {e}", ParameterError)


def decode_seed_message(data: bytes, party: int, n: int, k: int, modulus_bits: int) -> SeedMessage:
    try:
        values = unpack_fields(data, seed_message_widths(n, k, modulus_bits))
    except ValueError as e:
        throw(f"malformed seed message: {e}", SessionMismatch)
    peers = [j for j in range(1, n + 1) if j != party]
    return SeedMessage(
        N=values[0],
        seed=values[1],
        pair_seeds=dict(zip(peers, values[2:-1])),
        digest=values[-1].to_bytes(DIGEST_BITS // 8, "big"),
    )
