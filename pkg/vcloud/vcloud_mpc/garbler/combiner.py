"""
The combiner p_c: XOR of the n garblers' shares into the garbled circuit
"""

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.garbler.garbled_circuit import GarbledTables, decode_tables, encode_tables
from vcloud.vcloud_mpc.simnet.ledger import Phase
from vcloud.vcloud_mpc.simnet.network import EVALUATOR_ID, PartyContext, PartyId, Recv
from vcloud.vcloud_mpc.utils.errors import ChannelClosed, CombinerError, ProtocolError, throw
from vcloud.vcloud_mpc.utils.logger import logger


def combine_shares(shares: list[GarbledTables]) -> GarbledTables:
    if not shares:
        throw("no garbled circuit shares to combine", CombinerError)
    combined = shares[0]
    for party, share in enumerate(shares[1:], start=2):
        if not share.same_shape(combined):
            throw(f"share of p{party} does not match the shape of p1's", CombinerError, party=party)
        combined = combined ^ share
    return combined


def combiner_program(n: int, k: int, circuit: BooleanCircuit):
    """Simnet program of p_c; returns the garbled circuit it forwarded"""

    def program(ctx: PartyContext):
        shares = []
        for party in range(1, n + 1):
            try:
                message = yield Recv(PartyId.garbler(party))
            except ChannelClosed:
                throw(f"p{party} finished without sending its share", CombinerError, party=party)
            try:
                share = decode_tables(message.payload)
            except ProtocolError as e:
                throw(f"share of p{party} is malformed: {e}", CombinerError, party=party)
            if (share.n, share.k, share.digest, share.N_g) != (n, k, circuit.digest, circuit.N_g):
                throw(f"share of p{party} is for another circuit or parameters", CombinerError, party=party)
            shares.append(share)
        gc = combine_shares(shares)
        ctx.send(EVALUATOR_ID, Phase.GC_TRANSFER, encode_tables(gc), bits=gc.nominal_bits)
        logger("combiner").info(f"combined {n} shares into {gc.table_bits} table bits")
        return gc

    return program
