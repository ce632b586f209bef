"""
Keyed pseudorandom expanders built on AES

G(key) is the AES-OFB keystream (zero IV) under ``key``, truncated to 2nk+2 bits;
G0 is its first half and G1 its second half, each nk+1 bits.

R(s, j, gate, entry) is the most significant bit of the AES-CTR keystream block with
counter ``gate << 64 | entry << 62 | j`` under the pairwise seed s, so a run of
consecutive j costs one cipher call.

Keys shorter than 128 bits are left-padded with zero bytes to an AES-128 key,
longer ones to an AES-256 key.
"""

import hashlib
from dataclasses import dataclass
from functools import lru_cache

from Crypto.Cipher import AES

from vcloud.vcloud_mpc.utils.bits import byte_len, int_to_bytes
from vcloud.vcloud_mpc.utils.errors import ParameterError, throw

GMW_MASK_DOMAIN = b"vcloud/gmw-mask"

_BLOCK = 16


@dataclass
class ExpanderStats:
    g_bits: int = 0
    r_bits: int = 0

    def reset(self) -> None:
        self.g_bits = 0
        self.r_bits = 0


EXPANDER_STATS = ExpanderStats()


def aes_key(key: int, k: int) -> bytes:
    if key < 0 or key.bit_length() > k:
        throw(f"expander key must be {k} bits", ParameterError)
    size = 16 if k <= 128 else 32
    return key.to_bytes(size, "big")


def _ctr(key: bytes, counter: int):
    return AES.new(key, AES.MODE_CTR, nonce=b"", initial_value=counter)


def _keystream_int(cipher, nbits: int) -> int:
    stream = cipher.encrypt(bytes(byte_len(nbits)))
    return int.from_bytes(stream, "big") >> (8 * len(stream) - nbits)


@lru_cache(maxsize=1 << 16)
def _expand_pair(key: int, k: int, n: int) -> tuple[int, int]:
    half = n * k + 1
    cipher = AES.new(aes_key(key, k), AES.MODE_OFB, iv=bytes(_BLOCK))
    stream = _keystream_int(cipher, 2 * half)
    return stream >> half, stream & ((1 << half) - 1)


def expand_pair(key: int, k: int, n: int) -> tuple[int, int]:
    """(G0(key), G1(key)), each nk+1 bits"""
    EXPANDER_STATS.g_bits += 2 * (n * k + 1)
    return _expand_pair(key, k, n)


def expand_G(key: int, selector: int, k: int, n: int) -> int:
    return expand_pair(key, k, n)[selector & 1]


def r_counter(gate_id: int, entry_id: int, j: int) -> int:
    if not 0 <= entry_id < 4:
        throw(f"entry id must be 0..3, got {entry_id}", ParameterError)
    if not 0 <= j < 1 << 62 or not 0 <= gate_id < 1 << 64:
        throw("gate id or bit index out of range", ParameterError)
    return gate_id << 64 | entry_id << 62 | j


def expand_R_bits(pair_seed: int, k: int, gate_id: int, entry_id: int, start: int, count: int) -> list[int]:
    """R bits for j = start, ..., start + count - 1"""
    if count <= 0:
        return []
    r_counter(gate_id, entry_id, start + count - 1)
    EXPANDER_STATS.r_bits += count
    stream = _ctr(aes_key(pair_seed, k), r_counter(gate_id, entry_id, start)).encrypt(bytes(_BLOCK * count))
    return [stream[_BLOCK * i] >> 7 for i in range(count)]


def expand_R(pair_seed: int, j: int, gate_id: int, entry_id: int, k: int) -> int:
    return expand_R_bits(pair_seed, k, gate_id, entry_id, j, 1)[0]


def keyed_mask(key: int, index: int, k: int) -> int:
    """F_key(index): k pseudorandom bits, index in 1..4"""
    return _keystream_int(_ctr(aes_key(key, k), index << 8), k)


def private_mask_key(seed: int, modulus_bits: int) -> bytes:
    """AES-256 key only the seed owner can derive, domain-separated from G and R"""
    return hashlib.sha256(GMW_MASK_DOMAIN + int_to_bytes(seed, modulus_bits)).digest()


def private_mask_bits(key: bytes, gate_id: int, entry_id: int, peer: int, count: int) -> list[int]:
    """Fresh masks for the AND-class gates (by ordinal) of one entry run against ``peer``"""
    if count <= 0:
        return []
    counter = gate_id << 64 | entry_id << 62 | peer << 40
    stream = _ctr(key, counter).encrypt(bytes(_BLOCK * count))
    return [stream[_BLOCK * i] >> 7 for i in range(count)]
