from vcloud.vcloud_mpc.garbler.combiner import combine_shares, combiner_program
from vcloud.vcloud_mpc.garbler.dealer import garble_with_dealer, garbled_value, wire_lambda
from vcloud.vcloud_mpc.garbler.entry_circuit import build_entry_circuit, entry_gate_counts, entry_input_bits
from vcloud.vcloud_mpc.garbler.garbled_circuit import (
    GC_HEADER_BYTES,
    GarbledTables,
    decode_tables,
    decode_values,
    encode_tables,
    encode_values,
    join_garbled_value,
    split_garbled_value,
)
from vcloud.vcloud_mpc.garbler.garbling import GarblerStats, garbler_program
from vcloud.vcloud_mpc.garbler.seed_message import SeedMessage, decode_seed_message, encode_seed_message

__all__ = [
    "GC_HEADER_BYTES",
    "GarbledTables",
    "GarblerStats",
    "SeedMessage",
    "build_entry_circuit",
    "combine_shares",
    "combiner_program",
    "decode_seed_message",
    "decode_tables",
    "decode_values",
    "encode_seed_message",
    "encode_tables",
    "encode_values",
    "entry_gate_counts",
    "entry_input_bits",
    "garble_with_dealer",
    "garbled_value",
    "garbler_program",
    "join_garbled_value",
    "split_garbled_value",
    "wire_lambda",
]
