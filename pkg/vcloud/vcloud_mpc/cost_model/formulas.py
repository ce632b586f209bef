"""
Closed-form costs of garbling and evaluation

All quantities are exact integers in bits. Only the display helpers return floats,
with MB and Mbit counted in powers of two (2^20).
"""

from typing import NamedTuple

from vcloud.vcloud_mpc.schemas.params_schemas import CostParams
from vcloud.vcloud_mpc.utils.errors import ParameterError, throw

MEGA = 1 << 20
DIGEST_BITS = 256


class RandomBits(NamedTuple):
    """Random bits generated by all n garblers while building one garbled circuit"""

    b1: int  # BBS bits for wire shares and masks
    b2: int  # expander output over the consumed wires
    b3: int  # R bits sharing the private inputs of every entry circuit
    b4: int  # randomness inside the 1-of-4 OTs

    @property
    def total(self) -> int:
        return self.b1 + self.b2 + self.b3 + self.b4


def _positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            throw(f"{name} must be positive, got {value}", ParameterError)


def garbled_value_bits(n: int, k: int) -> int:
    _positive(n=n, k=k)
    return n * k + 1


def pairs(n: int) -> int:
    return n * (n - 1) // 2


def bprime_counts(n: int, k: int, and_class: bool = True) -> tuple[int, int]:
    """(XOR-class, AND-class) gates of the entry circuit; the gate op itself joins its class"""
    if n < 2:
        throw(f"entry circuit needs n >= 2, got {n}", ParameterError)
    _positive(k=k)
    xor_count = 3 * n + 2 * n * k + 2 * n * (n * k + 1)
    and_count = n * k
    if and_class:
        return xor_count, and_count + 1
    return xor_count + 1, and_count


def ot_sizes(p_bits: int, k: int) -> tuple[int, int]:
    """(s12, s14): payload bits of one 1-of-2 and one 1-of-4 transfer"""
    _positive(p_bits=p_bits, k=k)
    return 4 * (p_bits + k), 8 * (p_bits + k)


def entry_ot_count(n: int, k: int) -> int:
    """t14, the 1-of-4 transfers for one table entry"""
    return bprime_counts(n, k)[1] * pairs(n)


def entry_traffic(n: int, k: int, p_bits: int) -> int:
    """T: OT traffic plus the n shares of one table entry"""
    _, s14 = ot_sizes(p_bits, k)
    return entry_ot_count(n, k) * s14 + n * garbled_value_bits(n, k)


def gc_size(N_g: int, n: int, k: int) -> int:
    _positive(N_g=N_g)
    return 4 * N_g * garbled_value_bits(n, k)


def ot_random_bits(p_bits: int, k: int) -> int:
    """Random bits of one 1-of-4 transfer, chooser and sender together"""
    return 8 * p_bits + 4 * k - 2


def random_bits(params: CostParams) -> RandomBits:
    n, k, value = params.n, params.k, garbled_value_bits(params.n, params.k)
    m = 3 + 2 * value + 2 * k
    return RandomBits(
        b1=n * (2 * k + 1) * params.W,
        b2=4 * n * value * (params.W - params.W_o),
        b3=8 * n * (n - 1) * m * params.N_g,
        b4=4 * params.N_g * value * pairs(n) * ot_random_bits(params.p_bits, k),
    )


def seed_bits(n: int, k: int, modulus_bits: int) -> int:
    """b_s, what the client generates for seeds: one modulus share per garbler and the pairwise seeds"""
    return n * modulus_bits + n * (n - 1) * k


def client_bits(params: CostParams) -> int:
    n, k = params.n, params.k
    return n * (params.modulus_bits + (n - 1) * k + params.W_i * (k + 1) + params.W_o * (2 * k + 1))


def seed_traffic(n: int, k: int, modulus_bits: int) -> int:
    """Seed messages on the wire: N, s_i, n-1 pairwise seeds and the circuit digest per garbler"""
    return n * (2 * modulus_bits + (n - 1) * k + DIGEST_BITS)


def fhe_ciphertext_bits(k: int) -> int:
    """Order of magnitude of a fully homomorphic ciphertext per plaintext bit"""
    _positive(k=k)
    return k**5


def megabytes(bits: int) -> float:
    return bits / 8 / MEGA


def megabits(bits: int) -> float:
    return bits / MEGA
