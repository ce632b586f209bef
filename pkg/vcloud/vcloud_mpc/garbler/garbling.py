"""
Garbler party program

Each garbler expands its BBS seed into its wire shares, then for every gate and
every entry (a, b) feeds its private bits into the entry circuit and runs
Goldreich's protocol with the other garblers. Its output shares of all entries
form its share of the garbled circuit, sent to the combiner.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

from Crypto.Random import random as crypto_random

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit, Gate
from vcloud.vcloud_mpc.garbler.entry_circuit import build_entry_circuit, entry_private_bits
from vcloud.vcloud_mpc.garbler.garbled_circuit import GarbledTables, encode_tables, entry_id
from vcloud.vcloud_mpc.garbler.seed_message import decode_seed_message
from vcloud.vcloud_mpc.gmw.engine import GmwParty, GmwStats, share_input
from vcloud.vcloud_mpc.gmw.protocol import run_parties
from vcloud.vcloud_mpc.oblivious_transfer.group import SafePrimeGroup
from vcloud.vcloud_mpc.randomness.bbs import BbsGenerator, BbsPublic
from vcloud.vcloud_mpc.randomness.expanders import expand_pair, private_mask_bits, private_mask_key
from vcloud.vcloud_mpc.randomness.wire_shares import WireShareLayout, WireShares, shares_from_stream
from vcloud.vcloud_mpc.simnet.ledger import Phase
from vcloud.vcloud_mpc.simnet.network import CLIENT_ID, COMBINER_ID, PartyContext, Recv
from vcloud.vcloud_mpc.utils.bits import msb_bits_to_int
from vcloud.vcloud_mpc.utils.errors import ParameterError, SessionMismatch, throw
from vcloud.vcloud_mpc.utils.logger import logger

ENTRY_ORDER = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass
class GarblerStats:
    """Random bits one garbler consumed, by source"""

    bbs_bits: int = 0
    g_bits: int = 0
    gmw: GmwStats = field(default_factory=GmwStats)

    @property
    def r_bits(self) -> int:
        return self.gmw.r_bits

    @property
    def ot_random_bits(self) -> int:
        return self.gmw.ot_random_bits

    @property
    def total_bits(self) -> int:
        return self.bbs_bits + self.g_bits + self.r_bits + self.ot_random_bits


def wire_shares_from_seed(N: int, seed: int, circuit: BooleanCircuit, k: int, stats: GarblerStats | None = None) -> list[WireShares]:
    """Sequential BBS expansion of W(2k+1) bits into per-wire shares"""
    count = WireShareLayout(k).total_bits(circuit.W)
    stream = BbsGenerator(BbsPublic(N, seed)).bits(count)
    if stats is not None:
        stats.bbs_bits += count
    return [shares_from_stream(stream, w, k) for w in range(circuit.W)]


def expand_consumed(shares: list[WireShares], circuit: BooleanCircuit, n: int, k: int, stats: GarblerStats | None = None):
    """wire -> ((G0, G1) of share0, (G0, G1) of share1) for every wire some gate reads"""
    expanded = {}
    for w in circuit.consumed_wires:
        expanded[w] = (expand_pair(shares[w].share0, k, n), expand_pair(shares[w].share1, k, n))
        if stats is not None:
            stats.g_bits += 4 * (n * k + 1)
    return expanded


def private_inputs(gate: Gate, a: int, b: int, shares: list[WireShares], expanded, n: int, k: int) -> list[int]:
    """This garbler's m private bits for entry (a, b) of ``gate``"""
    x, y, z = shares[gate.left], shares[gate.right], shares[gate.out]
    return entry_private_bits(
        k,
        n,
        (x.lam, y.lam, z.lam),
        g_left=expanded[gate.left][a][b],
        g_right=expanded[gate.right][b][a],
        gamma0=z.share0,
        gamma1=z.share1,
    )


def entry_masks(key: bytes, gate_id: int, entry: int, count: int):
    cache: dict[int, list[int]] = {}

    def mask(ordinal: int, peer: int) -> int:
        if peer not in cache:
            cache[peer] = private_mask_bits(key, gate_id, entry, peer, count)
        return cache[peer][ordinal]

    return mask


def garble_gates(
    ctx: PartyContext,
    index: int,
    n: int,
    k: int,
    circuit: BooleanCircuit,
    shares: list[WireShares],
    pair_seeds: dict[int, int],
    mask_key: bytes,
    group: SafePrimeGroup,
    stats: GarblerStats,
    rng=crypto_random,
    entry_order: Sequence[tuple[int, int]] = ENTRY_ORDER,
):
    """Entries are processed in ``entry_order`` and stored as A_00, A_01, A_10, A_11"""
    expanded = expand_consumed(shares, circuit, n, k, stats)
    entries: list[int] = []
    for gate_id, gate in enumerate(circuit.gates):
        parties = {}
        for a, b in entry_order:
            entry = entry_id(a, b)
            sub = build_entry_circuit(n, k, gate.table, a, b)
            own = private_inputs(gate, a, b, shares, expanded, n, k)
            vector = share_input(index, n, own, pair_seeds, k, gate_id, entry, stats.gmw)
            masks = entry_masks(mask_key, gate_id, entry, sub.gate_counts()[1])
            parties[entry] = GmwParty(index, n, sub, vector, masks)
        yield from run_parties(ctx, list(parties.values()), group, k, gate_id, stats.gmw, rng)
        entries.extend(msb_bits_to_int(parties[entry].output_shares()) for entry in range(4))
    return entries


def garbler_program(
    index: int,
    n: int,
    k: int,
    circuit: BooleanCircuit,
    group: SafePrimeGroup,
    modulus_bits: int,
    stats: GarblerStats | None = None,
    rng=crypto_random,
    entry_order: Sequence[tuple[int, int]] = ENTRY_ORDER,
):
    """Simnet program of garbler p_index; returns its GarblerStats"""
    stats = stats if stats is not None else GarblerStats()
    entry_order = tuple(tuple(entry) for entry in entry_order)
    if sorted(entry_order) != list(ENTRY_ORDER):
        throw(f"entry order must list each of {ENTRY_ORDER} once, got {tuple(entry_order)}", ParameterError)

    def program(ctx: PartyContext):
        message = yield Recv(CLIENT_ID)
        seeds = decode_seed_message(message.payload, index, n, k, modulus_bits)
        if seeds.digest != circuit.digest:
            throw(f"p{index}: seed message names a different circuit", SessionMismatch)
        shares = wire_shares_from_seed(seeds.N, seeds.seed, circuit, k, stats)
        mask_key = private_mask_key(seeds.seed, modulus_bits)
        entries = yield from garble_gates(
            ctx, index, n, k, circuit, shares, seeds.pair_seeds, mask_key, group, stats, rng, entry_order
        )
        tables = GarbledTables(n, k, circuit.digest, tuple(entries))
        ctx.send(COMBINER_ID, Phase.SHARE_EXCHANGE, encode_tables(tables), bits=tables.nominal_bits)
        logger("garbler").info(
            f"p{index} garbled {circuit.N_g} gates with {stats.gmw.ots} OTs, {stats.total_bits} random bits"
        )
        return stats

    return program
