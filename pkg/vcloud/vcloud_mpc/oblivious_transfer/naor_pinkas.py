"""
Naor-Pinkas 1-out-of-2 OT and the 1-out-of-4 OT built from two of them

1-of-2 flow: the sender publishes a random C; the chooser answers PK0 where
PK_sigma = g^kappa and PK_{1-sigma} = C / PK_sigma; the sender derives PK1 = C / PK0 and
returns E_i = (g^r_i, H(PK_i^r_i) xor M_i); the chooser unmasks E_sigma with kappa.

1-of-4: the sender draws key pairs (L0, L1) and (R0, R1), transfers L_sigma1 and R_sigma2
with two 1-of-2 runs, and sends E_ij = M_ij xor F_Li(2i+j+1) xor F_Rj(2i+j+1).
"""

import hashlib
from dataclasses import dataclass

from Crypto.Random import random as crypto_random

from vcloud.vcloud_mpc.oblivious_transfer.group import SafePrimeGroup
from vcloud.vcloud_mpc.randomness.expanders import keyed_mask
from vcloud.vcloud_mpc.utils.bits import byte_len
from vcloud.vcloud_mpc.utils.errors import OtAbort, ParameterError, throw
from vcloud.vcloud_mpc.utils.logger import logger


def hash_to_bits(group: SafePrimeGroup, element: int, k: int) -> int:
    """H: SHA-256 of the fixed-width element, truncated to k bits"""
    digest = hashlib.sha256(element.to_bytes(byte_len(group.p_bits), "big")).digest()
    return int.from_bytes(digest, "big") >> (256 - k)


def _check_message(value: int, k: int) -> int:
    if value < 0 or value >> k:
        throw(f"OT message must be {k} bits", ParameterError)
    return value


@dataclass(frozen=True)
class Ot2Transcript:
    C: int
    PK0: int
    E0: tuple[int, int]
    E1: tuple[int, int]

    @staticmethod
    def payload_bits(p_bits: int, k: int) -> int:
        return 4 * p_bits + 2 * k


@dataclass(frozen=True)
class Ot4Transcript:
    left: Ot2Transcript
    right: Ot2Transcript
    ciphertexts: tuple[int, int, int, int]

    @staticmethod
    def payload_bits(p_bits: int, k: int) -> int:
        return 2 * Ot2Transcript.payload_bits(p_bits, k) + 4 * k


class Ot2Sender:
    def __init__(self, group: SafePrimeGroup, m0: int, m1: int, k: int, *, rng=crypto_random, C: int | None = None, session=None):
        self.group = group
        self.k = k
        self.messages = (_check_message(m0, k), _check_message(m1, k))
        self.rng = rng
        self.session = session
        self.C = C if C is not None else group.exp(rng.randint(1, group.q))
        self.PK0 = None

    @property
    def random_bits(self) -> int:
        """C plus the two exponents r0, r1"""
        return 3 * self.group.p_bits

    def open(self) -> int:
        return self.C

    def respond(self, PK0: int) -> tuple[tuple[int, int], tuple[int, int]]:
        group = self.group
        if not group.contains(PK0):
            throw(f"OT session {self.session}: PK0 is not in the subgroup", OtAbort, session=self.session)
        self.PK0 = PK0
        PK1 = group.mul(self.C, group.inv(PK0))
        out = []
        for PK, message in ((PK0, self.messages[0]), (PK1, self.messages[1])):
            r = self.rng.randint(1, group.q)
            out.append((group.exp(r), hash_to_bits(group, pow(PK, r, group.p), self.k) ^ message))
        return out[0], out[1]


class Ot2Chooser:
    def __init__(self, group: SafePrimeGroup, sigma: int, k: int, *, rng=crypto_random, kappa: int | None = None, session=None):
        if sigma not in (0, 1):
            throw(f"choice bit must be 0 or 1, got {sigma}", ParameterError)
        self.group = group
        self.sigma = sigma
        self.k = k
        self.session = session
        self.kappa = kappa if kappa is not None else rng.randint(1, group.q)

    @property
    def random_bits(self) -> int:
        return self.group.p_bits - 1

    def _require_member(self, x: int, what: str) -> None:
        if not self.group.contains(x):
            throw(f"OT session {self.session}: {what} is not in the subgroup", OtAbort, session=self.session)

    def reply(self, C: int) -> int:
        group = self.group
        self._require_member(C, "C")
        pk_sigma = group.exp(self.kappa)
        if self.sigma == 0:
            return pk_sigma
        return group.mul(C, group.inv(pk_sigma))

    def finish(self, E0: tuple[int, int], E1: tuple[int, int]) -> int:
        element, masked = E1 if self.sigma else E0
        self._require_member(element, "g^r")
        return hash_to_bits(self.group, pow(element, self.kappa, self.group.p), self.k) ^ masked


class Ot4Sender:
    def __init__(self, group: SafePrimeGroup, messages, k: int, *, rng=crypto_random, session=None):
        messages = tuple(_check_message(m, k) for m in messages)
        if len(messages) != 4:
            throw("1-of-4 OT needs four messages", ParameterError)
        self.messages = messages
        self.k = k
        self.keys_left = (rng.getrandbits(k), rng.getrandbits(k))
        self.keys_right = (rng.getrandbits(k), rng.getrandbits(k))
        self.left = Ot2Sender(group, *self.keys_left, k, rng=rng, session=session)
        self.right = Ot2Sender(group, *self.keys_right, k, rng=rng, session=session)

    @property
    def random_bits(self) -> int:
        return self.left.random_bits + self.right.random_bits + 4 * self.k

    def open(self) -> tuple[int, int]:
        return self.left.open(), self.right.open()

    def respond(self, pk0_left: int, pk0_right: int):
        e_left = self.left.respond(pk0_left)
        e_right = self.right.respond(pk0_right)
        ciphertexts = []
        for i in (0, 1):
            for j in (0, 1):
                index = 2 * i + j + 1
                mask = keyed_mask(self.keys_left[i], index, self.k) ^ keyed_mask(self.keys_right[j], index, self.k)
                ciphertexts.append(self.messages[2 * i + j] ^ mask)
        return e_left, e_right, tuple(ciphertexts)


class Ot4Chooser:
    def __init__(self, group: SafePrimeGroup, sigma1: int, sigma2: int, k: int, *, rng=crypto_random, session=None):
        self.sigma = (sigma1, sigma2)
        self.k = k
        self.left = Ot2Chooser(group, sigma1, k, rng=rng, session=session)
        self.right = Ot2Chooser(group, sigma2, k, rng=rng, session=session)

    @property
    def random_bits(self) -> int:
        return self.left.random_bits + self.right.random_bits

    def reply(self, C_left: int, C_right: int) -> tuple[int, int]:
        return self.left.reply(C_left), self.right.reply(C_right)

    def finish(self, e_left, e_right, ciphertexts) -> int:
        key_left = self.left.finish(*e_left)
        key_right = self.right.finish(*e_right)
        s1, s2 = self.sigma
        index = 2 * s1 + s2 + 1
        return ciphertexts[2 * s1 + s2] ^ keyed_mask(key_left, index, self.k) ^ keyed_mask(key_right, index, self.k)


def ot2(group: SafePrimeGroup, m0: int, m1: int, sigma: int, k: int, *, rng=crypto_random, C=None, kappa=None):
    """Run both sides in-process; returns (M_sigma, transcript)"""
    sender = Ot2Sender(group, m0, m1, k, rng=rng, C=C)
    chooser = Ot2Chooser(group, sigma, k, rng=rng, kappa=kappa)
    C = sender.open()
    PK0 = chooser.reply(C)
    E0, E1 = sender.respond(PK0)
    return chooser.finish(E0, E1), Ot2Transcript(C, PK0, E0, E1)


def ot4(group: SafePrimeGroup, messages, sigma1: int, sigma2: int, k: int, *, rng=crypto_random):
    """Run both sides in-process; returns (M_sigma1sigma2, transcript)"""
    sender = Ot4Sender(group, messages, k, rng=rng)
    chooser = Ot4Chooser(group, sigma1, sigma2, k, rng=rng)
    C_left, C_right = sender.open()
    pk_left, pk_right = chooser.reply(C_left, C_right)
    e_left, e_right, ciphertexts = sender.respond(pk_left, pk_right)
    result = chooser.finish(e_left, e_right, ciphertexts)
    logger("ot").debug(f"1-of-4 OT done, choice {sigma1}{sigma2}")
    return result, Ot4Transcript(
        Ot2Transcript(C_left, pk_left, *e_left),
        Ot2Transcript(C_right, pk_right, *e_right),
        ciphertexts,
    )
