"""
Reference garbling by a trusted dealer who sees every garbler's shares

Used only to check the distributed construction: both must produce the same tables.
"""

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.garbler.garbled_circuit import GarbledTables, join_garbled_value
from vcloud.vcloud_mpc.randomness.expanders import expand_G
from vcloud.vcloud_mpc.randomness.wire_shares import WireShares


def garbled_value(party_shares: list[list[WireShares]], wire: int, signal: int, k: int) -> int:
    return join_garbled_value([shares[wire].share(signal) for shares in party_shares], signal, k)


def wire_lambda(party_shares: list[list[WireShares]], wire: int) -> int:
    lam = 0
    for shares in party_shares:
        lam ^= shares[wire].lam
    return lam


def garble_with_dealer(circuit: BooleanCircuit, party_shares: list[list[WireShares]], k: int) -> GarbledTables:
    """``party_shares[i][w]`` is garbler i+1's WireShares of wire w"""
    n = len(party_shares)
    entries = []
    for gate in circuit.gates:
        lx, ly, lz = (wire_lambda(party_shares, w) for w in (gate.left, gate.right, gate.out))
        for a in (0, 1):
            for b in (0, 1):
                s = gate.apply(lx ^ a, ly ^ b) ^ lz
                value = garbled_value(party_shares, gate.out, s, k)
                for shares in party_shares:
                    value ^= expand_G(shares[gate.left].share(a), b, k, n)
                    value ^= expand_G(shares[gate.right].share(b), a, k, n)
                entries.append(value)
    return GarbledTables(n, k, circuit.digest, tuple(entries))
