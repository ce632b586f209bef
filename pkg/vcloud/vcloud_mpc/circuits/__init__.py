from vcloud.vcloud_mpc.circuits.atm_locations import load_atm_locations, nearest_atm_oracle
from vcloud.vcloud_mpc.circuits.builder import CircuitBuilder, Lit
from vcloud.vcloud_mpc.circuits.builders import (
    build_adder,
    build_manhattan,
    build_manhattan_swap,
    build_min_tree,
    build_nearest_atm,
    build_sub,
)
from vcloud.vcloud_mpc.circuits.circuit import (
    AND,
    XOR,
    BooleanCircuit,
    Gate,
    anf,
    eval_plaintext,
    is_and_class,
)
from vcloud.vcloud_mpc.circuits.circuit_format import (
    load_bundled_adder,
    parse_bristol,
    parse_circuit_file,
    read_circuit,
    serialize_circuit,
)

__all__ = [
    "AND",
    "XOR",
    "BooleanCircuit",
    "CircuitBuilder",
    "Gate",
    "Lit",
    "anf",
    "build_adder",
    "build_manhattan",
    "build_manhattan_swap",
    "build_min_tree",
    "build_nearest_atm",
    "build_sub",
    "eval_plaintext",
    "is_and_class",
    "load_atm_locations",
    "load_bundled_adder",
    "nearest_atm_oracle",
    "parse_bristol",
    "parse_circuit_file",
    "read_circuit",
    "serialize_circuit",
]
