"""
Boolean circuit representation and the plaintext evaluation oracle
"""

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from vcloud.vcloud_mpc.schemas.params_schemas import GateCountReport
from vcloud.vcloud_mpc.utils.errors import CircuitError, InputArityError, ParameterError, throw

Wire = int
TruthTable = tuple[int, int, int, int]

# f(0,0), f(0,1), f(1,0), f(1,1)
XOR: TruthTable = (0, 1, 1, 0)
XNOR: TruthTable = (1, 0, 0, 1)
AND: TruthTable = (0, 0, 0, 1)
OR: TruthTable = (0, 1, 1, 1)
NAND: TruthTable = (1, 1, 1, 0)
NOT_LEFT: TruthTable = (1, 1, 0, 0)
BUF_LEFT: TruthTable = (0, 0, 1, 1)


def check_table(table) -> TruthTable:
    """Normalize a 4-entry table given as a sequence of bits or a ``t0t1t2t3`` string"""
    if isinstance(table, str):
        if len(table) != 4 or set(table) - {"0", "1"}:
            throw(f"invalid truth table {table!r}")
        return tuple(int(ch) for ch in table)
    table = tuple(table)
    if len(table) != 4 or any(bit not in (0, 1) for bit in table):
        throw(f"invalid truth table {table!r}")
    return table


def anf(table: TruthTable) -> tuple[int, int, int, int]:
    """(c0, c1, c2, c3) with f(u,v) = c0 ^ c1*u ^ c2*v ^ c3*u*v"""
    t0, t1, t2, t3 = table
    return t0, t0 ^ t2, t0 ^ t1, t0 ^ t1 ^ t2 ^ t3


def is_and_class(table: TruthTable) -> bool:
    return anf(table)[3] == 1


def negate_inputs(table: TruthTable, left: int, right: int) -> TruthTable:
    """Table of f(u ^ left, v ^ right)"""
    return tuple(table[2 * (u ^ left) + (v ^ right)] for u in (0, 1) for v in (0, 1))


def fold_same_wire(table: TruthTable) -> TruthTable:
    """f(u, u) as a table that ignores its right input"""
    g0, g1 = table[0], table[3]
    return (g0, g0, g1, g1)


def table_text(table: TruthTable) -> str:
    return "".join(str(bit) for bit in table)


class Gate(NamedTuple):
    left: Wire
    right: Wire
    out: Wire
    table: TruthTable

    def apply(self, u: int, v: int) -> int:
        return self.table[2 * u + v]

    @property
    def and_class(self) -> bool:
        return is_and_class(self.table)


@dataclass(frozen=True)
class BooleanCircuit:
    """
    Topologically ordered gate list over dense wire ids

    Every non-input wire is the output of exactly one gate, so
    ``n_wires == len(inputs) + len(gates)``.
    """

    n_wires: int
    gates: tuple[Gate, ...]
    inputs: tuple[Wire, ...]
    outputs: tuple[Wire, ...]
    const_one: Wire | None = None
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    name: str = field(default="circuit", compare=False)

    def __post_init__(self):
        validate_circuit(self)

    @property
    def W(self) -> int:
        return self.n_wires

    @property
    def W_i(self) -> int:
        return len(self.inputs)

    @property
    def W_o(self) -> int:
        return len(self.outputs)

    @property
    def N_g(self) -> int:
        return len(self.gates)

    def gate_counts(self) -> tuple[int, int]:
        and_count = sum(1 for gate in self.gates if gate.and_class)
        return self.N_g - and_count, and_count

    def count_report(self) -> GateCountReport:
        xor_count, and_count = self.gate_counts()
        breakdown: dict[str, tuple[int, int]] = {}
        if self.labels is not None:
            tally = Counter((label, gate.and_class) for label, gate in zip(self.labels, self.gates))
            for label in dict.fromkeys(self.labels):
                breakdown[label] = (tally[(label, False)], tally[(label, True)])
        return GateCountReport(xor_class=xor_count, and_class=and_count, breakdown=breakdown)

    def with_constant(self, bits) -> list[int]:
        """Append the const_one input bit to caller-supplied input bits"""
        bits = list(bits)
        if self.const_one is not None:
            bits.append(1)
        return bits

    @cached_property
    def digest(self) -> bytes:
        from vcloud.vcloud_mpc.circuits.circuit_format import serialize_circuit

        return hashlib.sha256(serialize_circuit(self).encode()).digest()

    @cached_property
    def consumed_wires(self) -> tuple[Wire, ...]:
        """Wires read by at least one gate, in first-use order"""
        seen = dict.fromkeys(w for gate in self.gates for w in (gate.left, gate.right))
        return tuple(seen)

    @cached_property
    def gmw_rounds(self) -> tuple[tuple[tuple[Gate, ...], tuple[Gate, ...]], ...]:
        """
        Gates grouped for share-based evaluation: per round, the linear gates that
        are ready followed by one batch of AND-class gates at equal depth
        """
        depth = dict.fromkeys(self.inputs, 0)
        linear: dict[int, list[Gate]] = {}
        nonlinear: dict[int, list[Gate]] = {}
        for gate in self.gates:
            d = max(depth[gate.left], depth[gate.right])
            if gate.and_class:
                nonlinear.setdefault(d, []).append(gate)
                depth[gate.out] = d + 1
            else:
                linear.setdefault(d, []).append(gate)
                depth[gate.out] = d
        last = max([*linear, *nonlinear], default=-1)
        return tuple(
            (tuple(linear.get(r, ())), tuple(nonlinear.get(r, ()))) for r in range(last + 1)
        )


def validate_circuit(c: BooleanCircuit) -> None:
    if c.n_wires != len(c.inputs) + len(c.gates):
        throw(f"W={c.n_wires} but W_i + N_g = {len(c.inputs) + len(c.gates)}", CircuitError)
    if len(set(c.inputs)) != len(c.inputs):
        throw("duplicate input wire", CircuitError)
    if c.const_one is not None and c.const_one not in c.inputs:
        throw(f"const_one wire {c.const_one} is not an input", CircuitError)
    if c.labels is not None and len(c.labels) != len(c.gates):
        throw("one label per gate required", CircuitError)
    defined = [False] * c.n_wires
    for w in c.inputs:
        if not 0 <= w < c.n_wires:
            throw(f"input wire {w} out of range", CircuitError)
        defined[w] = True
    producer = {gate.out: t for t, gate in enumerate(c.gates)}
    for t, gate in enumerate(c.gates):
        for w in (gate.left, gate.right):
            if not 0 <= w < c.n_wires or (not defined[w] and w not in producer):
                throw(f"gate {t} reads undefined wire {w}", CircuitError)
            if not defined[w]:
                throw(f"gate {t} reads wire {w} before the gate that drives it", CircuitError)
        if gate.left == gate.right:
            throw(f"gate {t} reads wire {gate.left} on both inputs", CircuitError)
        if gate.out in (gate.left, gate.right):
            throw(f"gate {t} writes one of its own inputs (wire {gate.out})", CircuitError)
        if not 0 <= gate.out < c.n_wires or defined[gate.out]:
            throw(f"gate {t} output wire {gate.out} is already driven or out of range", CircuitError)
        defined[gate.out] = True
    for w in c.outputs:
        if not 0 <= w < c.n_wires:
            throw(f"output wire {w} out of range", CircuitError)


def eval_plaintext(c: BooleanCircuit, input_bits) -> list[int]:
    """Ordinary Boolean evaluation; ``input_bits`` covers every input wire, const_one included"""
    input_bits = list(input_bits)
    if len(input_bits) != c.W_i:
        throw(f"expected {c.W_i} input bits, got {len(input_bits)}", InputArityError)
    values = [0] * c.n_wires
    for w, bit in zip(c.inputs, input_bits):
        values[w] = bit & 1
    if c.const_one is not None and values[c.const_one] != 1:
        throw(f"const_one wire {c.const_one} must carry 1", InputArityError)
    for gate in c.gates:
        values[gate.out] = gate.table[2 * values[gate.left] + values[gate.right]]
    return [values[w] for w in c.outputs]


def require_width(name: str, value: int, minimum: int = 1) -> None:
    if value < minimum:
        throw(f"{name} must be at least {minimum}, got {value}", ParameterError)
