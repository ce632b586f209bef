"""
Blum-Blum-Shub generator

Parties run the generator sequentially from their seed: x_0 = s, x_j = x_{j-1}^2 mod N,
bit j = LSB(x_j) for j >= 1. The client holds the factors of N and jumps straight to
any x_j through the Carmichael function C(N) = lcm(p-1, q-1).
"""

import random
from dataclasses import dataclass, field
from math import lcm

from Crypto.Util.number import GCD, getPrime

from vcloud.vcloud_mpc.utils.errors import ClientError, ParameterError, throw
from vcloud.vcloud_mpc.utils.logger import logger
from vcloud.vcloud_mpc.utils.settings import get_prime_retries


@dataclass
class BbsStats:
    """Process-wide instrumentation of generator work"""

    sequential_squarings: int = 0
    shortcut_calls: int = 0
    shortcut_modmuls: int = 0

    def reset(self) -> None:
        self.sequential_squarings = 0
        self.shortcut_calls = 0
        self.shortcut_modmuls = 0


BBS_STATS = BbsStats()


@dataclass(frozen=True)
class BbsPublic:
    N: int
    seed: int

    def __post_init__(self):
        if self.N <= 8 or self.N % 2 == 0:
            throw(f"BBS modulus must be odd and larger than 8, got {self.N}")
        if not 0 < self.seed < self.N or GCD(self.seed, self.N) != 1:
            throw("BBS seed must be a unit modulo N")


@dataclass(frozen=True)
class BbsTrapdoor:
    p: int
    q: int
    N: int = field(init=False)
    carmichael: int = field(init=False)

    def __post_init__(self):
        if self.p % 4 != 3 or self.q % 4 != 3:
            throw("BBS primes must be congruent to 3 mod 4")
        if self.p == self.q:
            throw("BBS primes must be distinct")
        object.__setattr__(self, "N", self.p * self.q)
        object.__setattr__(self, "carmichael", lcm(self.p - 1, self.q - 1))


class BbsGenerator:
    """Sequential generator owned by one party"""

    def __init__(self, public: BbsPublic):
        self.N = public.N
        self.x = public.seed
        self.j = 0

    def next_bit(self) -> int:
        self.x = self.x * self.x % self.N
        self.j += 1
        BBS_STATS.sequential_squarings += 1
        return self.x & 1

    def bits(self, count: int) -> list[int]:
        return [self.next_bit() for _ in range(count)]


def bbs_next_bit(state: BbsGenerator) -> int:
    return state.next_bit()


def _modmuls(exponent: int) -> int:
    """Square-and-multiply cost of one exponentiation"""
    if exponent <= 1:
        return 0
    return exponent.bit_length() - 1 + bin(exponent).count("1") - 1


def bbs_residue_at(trapdoor: BbsTrapdoor, seed: int, j: int) -> int:
    if j < 1:
        throw(f"BBS bit index starts at 1, got {j}", ClientError)
    exponent = pow(2, j, trapdoor.carmichael)
    BBS_STATS.shortcut_calls += 1
    BBS_STATS.shortcut_modmuls += _modmuls(j) + _modmuls(exponent)
    return pow(seed, exponent, trapdoor.N)


def bbs_bit_at(trapdoor: BbsTrapdoor, seed: int, j: int) -> int:
    """Bit j of the sequential generator for ``seed``, computed without the intermediate steps"""
    return bbs_residue_at(trapdoor, seed, j) & 1


def generate_trapdoor(modulus_bits: int, rng: random.Random | None = None) -> BbsTrapdoor:
    """
    Random N = p*q of exactly ``modulus_bits`` bits with p = q = 3 (mod 4)

    :param modulus_bits: even bit length of N
    :param rng: source of randomness, the OS generator when omitted
    """
    if modulus_bits < 16 or modulus_bits % 2:
        throw(f"BBS modulus size must be an even number >= 16, got {modulus_bits}")
    randfunc = rng.randbytes if rng is not None else None
    half = modulus_bits // 2
    retries = get_prime_retries()
    for _ in range(retries):
        p = getPrime(half, randfunc=randfunc)
        q = getPrime(half, randfunc=randfunc)
        if p % 4 == 3 and q % 4 == 3 and p != q and (p * q).bit_length() == modulus_bits:
            return BbsTrapdoor(p, q)
    throw(f"no Blum modulus of {modulus_bits} bits found after {retries} attempts", ParameterError)


def random_seed(N: int, rng: random.Random | None = None) -> int:
    """Uniform unit of Z_N, resampled until gcd(s, N) = 1"""
    rng = rng or random.SystemRandom()
    while True:
        s = rng.randrange(2, N - 1)
        if GCD(s, N) == 1:
            return s
        logger("randomness").debug("resampling BBS seed sharing a factor with N")
