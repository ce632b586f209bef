"""
Goldreich's n-party evaluation over XOR shares

Party i holds one bit per wire; the XOR over all parties is the wire value.
A gate f(u, v) = c0 ^ c1 u ^ c2 v ^ c3 uv is evaluated as:

    linear part   c1 u_i ^ c2 v_i, plus c0 at party 1 only (local)
    product part  (XOR u)(XOR v) = XOR_{i<j} (u_i ^ u_j)(v_i ^ v_j) ^ (n mod 2) XOR_i u_i v_i

Each pair (i, j), i < j, computes its cross term with one 1-of-4 OT: sender i keeps a
fresh mask rho and offers rho ^ (u_i ^ x)(v_i ^ y) for every (x, y); chooser j selects
(x, y) = (u_j, v_j). OT messages are k bits with the payload in the least significant bit.
"""

import random
from collections.abc import Callable
from dataclasses import dataclass

from Crypto.Random import random as crypto_random

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit, Gate, anf
from vcloud.vcloud_mpc.oblivious_transfer.group import SafePrimeGroup
from vcloud.vcloud_mpc.oblivious_transfer.naor_pinkas import ot4
from vcloud.vcloud_mpc.randomness.expanders import expand_R_bits
from vcloud.vcloud_mpc.utils.errors import ClassificationError, InputArityError, throw

MaskSource = Callable[[int, int], int]


@dataclass
class GmwStats:
    """Per-party counters: OTs run, R bits drawn, OT-internal random bits"""

    ots: int = 0
    r_bits: int = 0
    ot_random_bits: int = 0


def r_index(owner: int, j_local: int, m: int) -> int:
    """Global R bit index of the owner's j-th input bit (both 1-based)"""
    return (owner - 1) * m + j_local


def share_input(
    party: int,
    n: int,
    own_bits: list[int],
    pair_seeds: dict[int, int],
    k: int,
    gate_id: int,
    entry_id: int,
    stats: GmwStats | None = None,
) -> list[int]:
    """
    Party's shares of every party's m private bits, owner blocks in party order

    Party k's share of p_i's j-th bit is R(s_ik, j, gate, entry); p_i keeps
    x_ij ^ XOR_k R(s_ik, j, gate, entry). Nothing is sent.
    """
    m = len(own_bits)
    vector: list[int] = []
    for owner in range(1, n + 1):
        start = r_index(owner, 1, m)
        if owner == party:
            block = list(own_bits)
            for peer in range(1, n + 1):
                if peer != party:
                    mask = expand_R_bits(pair_seeds[peer], k, gate_id, entry_id, start, m)
                    if stats is not None:
                        stats.r_bits += m
                    block = [x ^ r for x, r in zip(block, mask)]
        else:
            block = expand_R_bits(pair_seeds[owner], k, gate_id, entry_id, start, m)
            if stats is not None:
                stats.r_bits += m
        vector.extend(block)
    return vector


def xor_shares(share_vectors: list[list[int]]) -> list[int]:
    """Reconstruction; only a test harness holding every party's shares can do this"""
    out = [0] * len(share_vectors[0])
    for vector in share_vectors:
        out = [a ^ b for a, b in zip(out, vector, strict=True)]
    return out


class GmwParty:
    """One party's view of one circuit evaluation"""

    def __init__(self, index: int, n: int, circuit: BooleanCircuit, input_shares: list[int], masks: MaskSource):
        if len(input_shares) != circuit.W_i:
            throw(f"expected {circuit.W_i} input shares, got {len(input_shares)}", InputArityError)
        self.index = index
        self.n = n
        self.circuit = circuit
        self.masks = masks
        self.values: list[int | None] = [None] * circuit.W
        for wire, bit in zip(circuit.inputs, input_shares):
            self.values[wire] = bit & 1
        self.and_ordinal = {gate.out: t for t, gate in enumerate(g for g in circuit.gates if g.and_class)}
        self._acc: dict[int, int] = {}

    def _inputs(self, gate: Gate) -> tuple[int, int]:
        return self.values[gate.left], self.values[gate.right]

    def _affine(self, gate: Gate) -> int:
        c0, c1, c2, _ = anf(gate.table)
        u, v = self._inputs(gate)
        return (c1 & u) ^ (c2 & v) ^ (c0 if self.index == 1 else 0)

    def eval_linear_gate(self, gate: Gate) -> int:
        if gate.and_class:
            throw(f"gate writing wire {gate.out} is AND-class", ClassificationError)
        self.values[gate.out] = self._affine(gate)
        return self.values[gate.out]

    def start_and_gate(self, gate: Gate) -> None:
        if not gate.and_class:
            throw(f"gate writing wire {gate.out} is XOR-class", ClassificationError)
        u, v = self._inputs(gate)
        self._acc[gate.out] = self._affine(gate) ^ (u & v & self.n & 1)

    def mask(self, gate: Gate, peer: int) -> int:
        return self.masks(self.and_ordinal[gate.out], peer) & 1

    def sender_messages(self, gate: Gate, peer: int) -> tuple[int, int, int, int]:
        """M_xy = rho ^ (u_i ^ x)(v_i ^ y); the sender's sub-share is rho"""
        rho = self.mask(gate, peer)
        u, v = self._inputs(gate)
        self._acc[gate.out] ^= rho
        return tuple(rho ^ ((u ^ x) & (v ^ y)) for x in (0, 1) for y in (0, 1))

    def choice(self, gate: Gate) -> tuple[int, int]:
        return self._inputs(gate)

    def receive_product(self, gate: Gate, bit: int) -> None:
        self._acc[gate.out] ^= bit & 1

    def finish_and_gate(self, gate: Gate) -> int:
        self.values[gate.out] = self._acc.pop(gate.out)
        return self.values[gate.out]

    def output_shares(self) -> list[int]:
        return [self.values[w] for w in self.circuit.outputs]


def random_masks(rng: random.Random) -> MaskSource:
    cache: dict[tuple[int, int], int] = {}

    def mask(ordinal: int, peer: int) -> int:
        if (ordinal, peer) not in cache:
            cache[(ordinal, peer)] = rng.getrandbits(1)
        return cache[(ordinal, peer)]

    return mask


def eval_linear_gate(party: GmwParty, gate: Gate) -> int:
    return party.eval_linear_gate(gate)


def eval_and_gate(parties: list[GmwParty], gate: Gate, group: SafePrimeGroup, k: int, rng=crypto_random) -> list[int]:
    """In-process evaluation of one AND-class gate: n(n-1)/2 OTs; returns per-party output shares"""
    for party in parties:
        party.start_and_gate(gate)
    for i, sender in enumerate(parties):
        for chooser in parties[i + 1 :]:
            offers = sender.sender_messages(gate, chooser.index)
            received, _ = ot4(group, list(offers), *chooser.choice(gate), k, rng=rng)
            chooser.receive_product(gate, received)
    return [party.finish_and_gate(gate) for party in parties]


def run_goldreich(
    circuit: BooleanCircuit,
    input_shares: list[list[int]],
    group: SafePrimeGroup,
    k: int,
    rng: random.Random | None = None,
) -> tuple[list[list[int]], int]:
    """
    In-process run over all parties; returns (per-party output shares, OT count)

    ``input_shares[i]`` is party i+1's share of every input wire.
    """
    rng = rng or random.Random()
    n = len(input_shares)
    parties = [
        GmwParty(i + 1, n, circuit, shares, random_masks(random.Random(rng.getrandbits(64))))
        for i, shares in enumerate(input_shares)
    ]
    ot_count = 0
    for linear, nonlinear in circuit.gmw_rounds:
        for gate in linear:
            for party in parties:
                party.eval_linear_gate(gate)
        for gate in nonlinear:
            eval_and_gate(parties, gate, group, k, rng=rng)
            ot_count += n * (n - 1) // 2
    return [party.output_shares() for party in parties], ot_count
