"""
Client side: seeds, garbled inputs, output expectations and verification

Everything here reads the garblers' BBS streams through the trapdoor shortcut,
never sequentially, and only at the wires it needs.
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import NamedTuple

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.garbler.garbled_circuit import join_garbled_value
from vcloud.vcloud_mpc.garbler.seed_message import SeedMessage
from vcloud.vcloud_mpc.randomness.bbs import BbsTrapdoor, generate_trapdoor, random_seed
from vcloud.vcloud_mpc.randomness.wire_shares import lambda_from_trapdoor, share_from_trapdoor
from vcloud.vcloud_mpc.schemas.params_schemas import ProtocolParams
from vcloud.vcloud_mpc.utils.errors import ClientError, InputArityError, ParameterError, throw
from vcloud.vcloud_mpc.utils.logger import logger


@dataclass
class ClientLedger:
    """Bits the client generates, by purpose"""

    seed_bits: int = 0
    input_bits: int = 0
    output_bits: int = 0

    @property
    def total(self) -> int:
        return self.seed_bits + self.input_bits + self.output_bits


@dataclass(frozen=True)
class ClientSecrets:
    n: int
    k: int
    modulus_bits: int
    trapdoor: BbsTrapdoor = field(repr=False)
    seeds: dict[int, int] = field(repr=False)
    pair_seeds: dict[tuple[int, int], int] = field(repr=False)

    @property
    def N(self) -> int:
        return self.trapdoor.N

    def pair_seed(self, i: int, j: int) -> int:
        return self.pair_seeds[(min(i, j), max(i, j))]

    def seed_message(self, party: int, digest: bytes) -> SeedMessage:
        return SeedMessage(
            N=self.N,
            seed=self.seeds[party],
            pair_seeds={j: self.pair_seed(party, j) for j in range(1, self.n + 1) if j != party},
            digest=digest,
        )


class OutputExpectation(NamedTuple):
    zero: int
    one: int
    lam: int


@dataclass
class Verdict:
    accepted: bool
    outputs: list[int] | None
    mismatched: list[int] = field(default_factory=list)

    @property
    def first_mismatch(self) -> int | None:
        return self.mismatched[0] if self.mismatched else None


def setup(
    params: ProtocolParams,
    circuit: BooleanCircuit,
    rng: random.Random | None = None,
    ledger: ClientLedger | None = None,
) -> tuple[ClientSecrets, dict[int, SeedMessage]]:
    """Fresh modulus, n seeds and the pairwise seeds; one seed message per garbler"""
    n, k = params.n, params.k
    rng = rng or random.SystemRandom()
    trapdoor = generate_trapdoor(params.modulus_bits, rng)
    seeds = {i: random_seed(trapdoor.N, rng) for i in range(1, n + 1)}
    pair_seeds = {(i, j): rng.getrandbits(k) for i, j in itertools.combinations(range(1, n + 1), 2)}
    secrets = ClientSecrets(n, k, params.modulus_bits, trapdoor, seeds, pair_seeds)
    if ledger is not None:
        ledger.seed_bits += n * params.modulus_bits + n * (n - 1) * k
    logger("client").info(f"set up {n} seeds over a {params.modulus_bits}-bit modulus")
    return secrets, {i: secrets.seed_message(i, circuit.digest) for i in range(1, n + 1)}


def wire_lambda(secrets: ClientSecrets, wire: int) -> int:
    lam = 0
    for i in range(1, secrets.n + 1):
        lam ^= lambda_from_trapdoor(secrets.trapdoor, secrets.seeds[i], wire, secrets.k)
    return lam


def _garbled(secrets: ClientSecrets, wire: int, signal: int) -> int:
    parts = [
        share_from_trapdoor(secrets.trapdoor, secrets.seeds[i], wire, secrets.k, signal)
        for i in range(1, secrets.n + 1)
    ]
    return join_garbled_value(parts, signal, secrets.k)


def derive_garbled_input(
    secrets: ClientSecrets, circuit: BooleanCircuit, wire: int, bit: int, ledger: ClientLedger | None = None
) -> int:
    if wire not in circuit.inputs:
        throw(f"wire {wire} is not an input wire of {circuit.name}", ParameterError)
    signal = (bit & 1) ^ wire_lambda(secrets, wire)
    if ledger is not None:
        ledger.input_bits += secrets.n * secrets.k + secrets.n
    return _garbled(secrets, wire, signal)


def derive_garbled_inputs(
    secrets: ClientSecrets, circuit: BooleanCircuit, bits: list[int], ledger: ClientLedger | None = None
) -> list[int]:
    """``bits`` covers every input wire in order, const_one included"""
    if len(bits) != circuit.W_i:
        throw(f"expected {circuit.W_i} input bits, got {len(bits)}", InputArityError)
    return [derive_garbled_input(secrets, circuit, w, bit, ledger) for w, bit in zip(circuit.inputs, bits)]


def expect_outputs(
    secrets: ClientSecrets, circuit: BooleanCircuit, ledger: ClientLedger | None = None
) -> list[OutputExpectation]:
    expectations = []
    for wire in circuit.outputs:
        expectations.append(OutputExpectation(_garbled(secrets, wire, 0), _garbled(secrets, wire, 1), wire_lambda(secrets, wire)))
        if ledger is not None:
            ledger.output_bits += 2 * secrets.n * secrets.k + secrets.n
    return expectations


def recover_and_verify(expectations: list[OutputExpectation], returned: list[int]) -> Verdict:
    """Accept only when every returned value is one of its wire's two garbled values"""
    if len(returned) != len(expectations):
        throw(f"expected {len(expectations)} garbled outputs, got {len(returned)}", ClientError)
    outputs = []
    mismatched = []
    for position, (expect, value) in enumerate(zip(expectations, returned)):
        if value not in (expect.zero, expect.one):
            mismatched.append(position)
            continue
        outputs.append((value & 1) ^ expect.lam)
    if mismatched:
        logger("client").warning(f"verification failed on {len(mismatched)} output wires, first {mismatched[0]}")
        return Verdict(False, None, mismatched)
    logger("client").info("verification accepted")
    return Verdict(True, outputs)


def lambda_candidates(known: dict[int, int], n: int) -> set[int]:
    """Values of lambda consistent with the lambda shares of the parties in ``known``"""
    missing = [i for i in range(1, n + 1) if i not in known]
    base = 0
    for share in known.values():
        base ^= share & 1
    return {base ^ (sum(guess) & 1) for guess in itertools.product((0, 1), repeat=len(missing))}
