"""
Safe-prime groups for oblivious transfer

Elements live in the order-q subgroup of Z*_p with p = 2q + 1, i.e. the quadratic residues.
"""

from dataclasses import dataclass
from functools import cached_property

from Crypto.Util.number import inverse, isPrime

from vcloud.vcloud_mpc.utils import get_attr
from vcloud.vcloud_mpc.utils.errors import ParameterError, throw


@dataclass(frozen=True)
class SafePrimeGroup:
    name: str
    p: int
    g: int

    def __post_init__(self):
        if self.p < 7 or not isPrime(self.p) or not isPrime(self.q):
            throw(f"group {self.name}: p must be a safe prime", ParameterError)
        if self.g in (0, 1) or pow(self.g, self.q, self.p) != 1:
            throw(f"group {self.name}: g must generate the order-q subgroup", ParameterError)

    @property
    def q(self) -> int:
        return (self.p - 1) // 2

    @cached_property
    def p_bits(self) -> int:
        return self.p.bit_length()

    def contains(self, x: int) -> bool:
        return 0 < x < self.p and pow(x, self.q, self.p) == 1

    def exp(self, e: int) -> int:
        return pow(self.g, e, self.p)

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        return inverse(a, self.p)


TEST_GROUP = SafePrimeGroup("test", p=23, g=4)

# 256-bit safe prime generated for this project; p and (p-1)/2 both pass
# `openssl prime`. 4 = 2^2 is a quadratic residue, hence of order q.
DESK_GROUP = SafePrimeGroup(
    "desk256",
    p=104449231871382615397385066597903320836550181887831440453185892372615845299463,
    g=4,
)


def get_group(profile: str) -> SafePrimeGroup:
    """Resolve a runnable group profile through the hooks registry"""
    from vcloud import hooks

    path = hooks.group_profiles.get(profile)
    if path is None:
        throw(f"unknown group profile {profile!r}; choose one of {', '.join(hooks.group_profiles)}")
    return get_attr(path)
