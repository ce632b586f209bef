"""
Costs of a concrete circuit, comparable with what a simulated run records

The closed forms assume every gate is AND-class and that exactly the non-output
wires are consumed; the predictions here count both from the circuit itself.
Message totals include the 39-byte header of every garbled-table message.
"""

import csv
from pathlib import Path
from typing import TextIO

from vcloud.vcloud_mpc.circuits.circuit import BooleanCircuit
from vcloud.vcloud_mpc.cost_model.formulas import (
    RandomBits,
    bprime_counts,
    client_bits,
    entry_traffic,
    fhe_ciphertext_bits,
    garbled_value_bits,
    gc_size,
    megabits,
    megabytes,
    ot_random_bits,
    ot_sizes,
    pairs,
    random_bits,
    seed_traffic,
)
from vcloud.vcloud_mpc.garbler.garbled_circuit import GC_HEADER_BYTES
from vcloud.vcloud_mpc.schemas.params_schemas import CostParams
from vcloud.vcloud_mpc.simnet.ledger import Phase

ANALYSIS_FIELDS = [
    "n",
    "k",
    "p_bits",
    "modulus_bits",
    "N_g",
    "entry_traffic_bits",
    "entry_traffic_mb",
    "gc_bits",
    "random_bits",
    "random_mbits_per_entry",
    "client_bits",
    "garbled_value_bits",
    "fhe_ciphertext_bits",
]


def cost_params(circuit: BooleanCircuit, n: int, k: int, p_bits: int, modulus_bits: int) -> CostParams:
    return CostParams(
        n=n, k=k, p_bits=p_bits, modulus_bits=modulus_bits, W=circuit.W, W_i=circuit.W_i, W_o=circuit.W_o, N_g=circuit.N_g
    )


def circuit_ot_count(circuit: BooleanCircuit, n: int, k: int) -> int:
    """1-of-4 transfers over all four entries of every gate"""
    return sum(4 * bprime_counts(n, k, gate.and_class)[1] * pairs(n) for gate in circuit.gates)


def predict_ledger(circuit: BooleanCircuit, n: int, k: int, p_bits: int, modulus_bits: int) -> dict[Phase, int]:
    """Nominal payload bits per phase for one construction and one evaluation"""
    _, s14 = ot_sizes(p_bits, k)
    tables = 8 * GC_HEADER_BYTES + gc_size(circuit.N_g, n, k)
    value = garbled_value_bits(n, k)
    return {
        Phase.SEED_DISTRIBUTION: seed_traffic(n, k, modulus_bits),
        Phase.OT: circuit_ot_count(circuit, n, k) * s14,
        Phase.SHARE_EXCHANGE: n * tables,
        Phase.GC_TRANSFER: tables,
        Phase.GARBLED_INPUT: circuit.W_i * value,
        Phase.GARBLED_OUTPUT: circuit.W_o * value,
    }


def predict_random_bits(circuit: BooleanCircuit, n: int, k: int, p_bits: int) -> RandomBits:
    value = garbled_value_bits(n, k)
    m = 3 + 2 * value + 2 * k
    return RandomBits(
        b1=n * (2 * k + 1) * circuit.W,
        b2=4 * n * value * len(circuit.consumed_wires),
        b3=8 * n * (n - 1) * m * circuit.N_g,
        b4=circuit_ot_count(circuit, n, k) * ot_random_bits(p_bits, k),
    )


def analysis_row(circuit: BooleanCircuit, n: int, k: int, p_bits: int, modulus_bits: int) -> dict:
    params = cost_params(circuit, n, k, p_bits, modulus_bits)
    traffic = entry_traffic(n, k, p_bits) if n >= 2 else 0
    bits = random_bits(params)
    return {
        "n": n,
        "k": k,
        "p_bits": p_bits,
        "modulus_bits": modulus_bits,
        "N_g": circuit.N_g,
        "entry_traffic_bits": traffic,
        "entry_traffic_mb": round(megabytes(traffic), 2),
        "gc_bits": gc_size(circuit.N_g, n, k),
        "random_bits": bits.total,
        "random_mbits_per_entry": round(megabits(bits.total) / (4 * circuit.N_g), 2),
        "client_bits": client_bits(params),
        "garbled_value_bits": garbled_value_bits(n, k),
        "fhe_ciphertext_bits": fhe_ciphertext_bits(k),
    }


def analysis_rows(circuit: BooleanCircuit, n_values, k: int, p_bits: int, modulus_bits: int) -> list[dict]:
    return [analysis_row(circuit, n, k, p_bits, modulus_bits) for n in n_values]


def write_analysis_csv(rows: list[dict], fh: TextIO) -> None:
    writer = csv.DictWriter(fh, fieldnames=ANALYSIS_FIELDS)
    writer.writeheader()
    writer.writerows(rows)


def to_csv(rows: list[dict], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        write_analysis_csv(rows, fh)
