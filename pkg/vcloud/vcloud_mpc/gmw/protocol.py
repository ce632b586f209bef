"""
Goldreich's protocol between garblers over the simulated network

All AND-class gates of one round, across every circuit a party evaluates jointly,
share one OT batch per peer pair: open, reply and final frames (see
oblivious_transfer.messages). Peers are visited in ascending order; the lower index
sends, so the pairwise schedule cannot deadlock.
"""

from collections.abc import Generator

from Crypto.Random import random as crypto_random

from vcloud.vcloud_mpc.circuits.circuit import Gate
from vcloud.vcloud_mpc.gmw.engine import GmwParty, GmwStats
from vcloud.vcloud_mpc.oblivious_transfer.group import SafePrimeGroup
from vcloud.vcloud_mpc.oblivious_transfer.messages import (
    decode_rows,
    encode_rows,
    final_widths,
    flatten_final,
    open_widths,
    reply_widths,
    split_final,
)
from vcloud.vcloud_mpc.oblivious_transfer.naor_pinkas import Ot4Chooser, Ot4Sender
from vcloud.vcloud_mpc.simnet.ledger import Phase
from vcloud.vcloud_mpc.simnet.network import SESSION_MASK, Message, PartyContext, PartyId, Recv
from vcloud.vcloud_mpc.utils.errors import OtAbort, ParameterError, SessionMismatch, throw

Batch = list[tuple[GmwParty, Gate]]


def _expect(message: Message, session: int, widths: list[int], count: int) -> list[list[int]]:
    if message.phase != Phase.OT or message.session != session & SESSION_MASK:
        throw(
            f"expected OT frame for session {session & SESSION_MASK}, got {message.phase.label} "
            f"session {message.session} from {message.src}",
            SessionMismatch,
        )
    return decode_rows(message.payload, widths, count)


def _send_side(
    ctx: PartyContext, me: int, peer: int, batch: Batch, group: SafePrimeGroup, k: int, session: int, stats, rng
) -> Generator:
    peer_id = PartyId.garbler(peer)
    senders = [
        Ot4Sender(group, party.sender_messages(gate, peer), k, rng=rng, session=(session, t, me, peer))
        for t, (party, gate) in enumerate(batch)
    ]
    payload, bits = encode_rows([s.open() for s in senders], open_widths(group.p_bits, k))
    ctx.send(peer_id, Phase.OT, payload, bits=bits, session=session)

    reply = yield Recv(peer_id)
    rows = _expect(reply, session, reply_widths(group.p_bits, k), len(senders))
    finals = [flatten_final(*sender.respond(*row)) for sender, row in zip(senders, rows)]
    payload, bits = encode_rows(finals, final_widths(group.p_bits, k))
    ctx.send(peer_id, Phase.OT, payload, bits=bits, session=session)

    stats.ots += len(senders)
    stats.ot_random_bits += sum(s.random_bits for s in senders)


def _choose_side(
    ctx: PartyContext, me: int, peer: int, batch: Batch, group: SafePrimeGroup, k: int, session: int, stats, rng
) -> Generator:
    peer_id = PartyId.garbler(peer)
    choosers = [
        Ot4Chooser(group, *party.choice(gate), k, rng=rng, session=(session, t, peer, me))
        for t, (party, gate) in enumerate(batch)
    ]
    opened = yield Recv(peer_id)
    rows = _expect(opened, session, open_widths(group.p_bits, k), len(choosers))
    payload, bits = encode_rows(
        [chooser.reply(*row) for chooser, row in zip(choosers, rows)], reply_widths(group.p_bits, k)
    )
    ctx.send(peer_id, Phase.OT, payload, bits=bits, session=session)

    final = yield Recv(peer_id)
    rows = _expect(final, session, final_widths(group.p_bits, k), len(choosers))
    for (party, gate), chooser, row in zip(batch, choosers, rows):
        received = chooser.finish(*split_final(row))
        if received >> 1:
            throw(
                f"OT session {chooser.left.session}: decrypted message has non-zero padding",
                OtAbort,
                session=chooser.left.session,
            )
        party.receive_product(gate, received)

    stats.ots += len(choosers)
    stats.ot_random_bits += sum(c.random_bits for c in choosers)


def and_round(
    ctx: PartyContext,
    me: int,
    n: int,
    batch: Batch,
    group: SafePrimeGroup,
    k: int,
    session: int,
    stats: GmwStats,
    rng=crypto_random,
) -> Generator:
    """One batched round of AND-class gates against all n-1 peers"""
    for party, gate in batch:
        party.start_and_gate(gate)
    for peer in range(1, n + 1):
        if peer < me:
            yield from _choose_side(ctx, me, peer, batch, group, k, session, stats, rng)
        elif peer > me:
            yield from _send_side(ctx, me, peer, batch, group, k, session, stats, rng)
    for party, gate in batch:
        party.finish_and_gate(gate)


def round_session(session_base: int, r: int, depth: int) -> int:
    """Session id of round r out of ``depth``: the round field is (depth - 1).bit_length() bits wide"""
    if not 0 <= r < max(depth, 1):
        throw(f"round {r} outside 0..{depth - 1}", ParameterError)
    return session_base << max(1, (depth - 1).bit_length()) | r


def run_parties(
    ctx: PartyContext,
    parties: list[GmwParty],
    group: SafePrimeGroup,
    k: int,
    session_base: int,
    stats: GmwStats,
    rng=crypto_random,
) -> Generator:
    """
    Evaluate several circuits at once for the party ``parties[i].index``

    Round r of every circuit runs together; its frames carry
    ``round_session(session_base, r, depth)``.
    """
    if not parties:
        return
    me, n = parties[0].index, parties[0].n
    depth = max(len(party.circuit.gmw_rounds) for party in parties)
    for r in range(depth):
        batch: Batch = []
        for party in parties:
            rounds = party.circuit.gmw_rounds
            if r >= len(rounds):
                continue
            linear, nonlinear = rounds[r]
            for gate in linear:
                party.eval_linear_gate(gate)
            batch.extend((party, gate) for gate in nonlinear)
        if batch and n > 1:
            yield from and_round(ctx, me, n, batch, group, k, round_session(session_base, r, depth), stats, rng)
        elif batch:
            for party, gate in batch:
                party.start_and_gate(gate)
                party.finish_and_gate(gate)


def gmw_program(party: GmwParty, group: SafePrimeGroup, k: int, stats: GmwStats | None = None, rng=crypto_random):
    """A simnet program evaluating one circuit; returns this party's output shares"""
    stats = stats if stats is not None else GmwStats()

    def program(ctx: PartyContext):
        yield from run_parties(ctx, [party], group, k, 0, stats, rng)
        return party.output_shares()

    return program
